#include "teim/pod.hpp"

#include "teim/parallel.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <sstream>
#include <string>
#include <utility>

namespace teim {

namespace {

constexpr double kRankGuard = 1e-12;

struct ThinSvd {
  Matrix U;
  Vector sigma;
};

ThinSvd thin_left_svd(const Matrix& M) {
  Eigen::BDCSVD<Matrix> svd(M, Eigen::ComputeThinU);
  return {svd.matrixU(), svd.singularValues()};
}

void check_rank(const Vector& sigma, Index requested, const char* what) {
  if (requested > sigma.size()) {
    throw RankDeficiencyError(std::string(what) + ": requested rank " +
                              std::to_string(requested) + " exceeds available " +
                              std::to_string(sigma.size()));
  }
  const double smax = sigma.size() > 0 ? sigma(0) : 0.0;
  if (requested >= 1 && sigma(requested - 1) < kRankGuard * smax) {
    std::ostringstream msg;
    msg << what << ": requested rank " << requested << " exceeds numerical rank (sigma "
        << sigma(requested - 1) << " below guard " << kRankGuard * smax << ")";
    throw RankDeficiencyError(msg.str());
  }
}

}  // namespace

void fix_signs(Matrix& U) {
  for (Index j = 0; j < U.cols(); ++j) {
    Index imax = 0;
    double best = 0.0;
    for (Index i = 0; i < U.rows(); ++i) {
      const double a = std::abs(U(i, j));
      if (a > best) {
        best = a;
        imax = i;
      }
    }
    if (U(imax, j) < 0.0) {
      U.col(j) = -U.col(j);
    }
  }
}

FactorBasis hosvd_factors(const Tensor3& T, Index m1, Index m2) {
  if (m1 < 1 || m1 > T.n1() || m2 < 1 || m2 > T.n2()) {
    throw DimensionError("hosvd_factors: mode ranks out of range");
  }
  // The three mode SVDs are independent; fan them out.
  ThinSvd svds[3];
  parallel_for(3, [&](std::size_t mode) {
    svds[mode] = thin_left_svd(unfold(T, static_cast<int>(mode) + 1));
  });
  check_rank(svds[0].sigma, m1, "hosvd_factors mode 1");
  check_rank(svds[1].sigma, m2, "hosvd_factors mode 2");

  FactorBasis basis;
  basis.U1 = svds[0].U.leftCols(m1);
  basis.U2 = svds[1].U.leftCols(m2);
  fix_signs(basis.U1);
  fix_signs(basis.U2);
  basis.mode3_kept = true;
  basis.singular_values = {svds[0].sigma, svds[1].sigma, svds[2].sigma};
  return basis;
}

PodBasis standard_pod(const Matrix& S, Index k) {
  if (k < 1 || k > S.rows() || k > S.cols()) {
    throw DimensionError("standard_pod: k out of range");
  }
  ThinSvd svd = thin_left_svd(S);
  check_rank(svd.sigma, k, "standard_pod");
  PodBasis basis;
  basis.V = svd.U.leftCols(k);
  fix_signs(basis.V);
  basis.singular_values = svd.sigma;
  return basis;
}

std::pair<Tensor3, Matrix> center(const Tensor3& T) {
  Matrix mean = Matrix::Zero(T.n1(), T.n2());
  for (Index k = 0; k < T.N(); ++k) {
    mean += T.slice(k);
  }
  mean /= static_cast<double>(T.N());
  Tensor3 C(T.n1(), T.n2(), T.N());
  for (Index k = 0; k < T.N(); ++k) {
    C.slice(k) = T.slice(k) - mean;
  }
  return {std::move(C), std::move(mean)};
}

}  // namespace teim
