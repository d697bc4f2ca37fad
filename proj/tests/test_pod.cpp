// ============================================================================
// Basis-construction checks: factor matrices are orthonormal leading
// singular vectors with the deterministic sign convention, rank guards
// reject unsupported truncations, and centering splits a tensor into a
// zero-mean part plus its mean slice.
// ============================================================================

#include "teim/pod.hpp"
#include "teim/random.hpp"
#include "teim/tensor.hpp"

#include "doctest.h"

#include <Eigen/SVD>

namespace {

using teim::FactorBasis;
using teim::Index;
using teim::Matrix;
using teim::PodBasis;
using teim::Tensor3;
using teim::Vector;

Tensor3 random_tensor(Index n1, Index n2, Index N, std::uint64_t seed) {
  teim::Rng rng(seed);
  Tensor3 T(n1, n2, N);
  T.data() = teim::random_gaussian(n1 * n2 * N, 1, rng).col(0);
  return T;
}

// A tensor whose every slice is a multiple of the same rank-1 matrix, so
// both mode unfoldings have numerical rank exactly 1.
Tensor3 rank_one_tensor(Index n1, Index n2, Index N) {
  teim::Rng rng(99);
  const Matrix u = teim::random_gaussian(n1, 1, rng);
  const Matrix v = teim::random_gaussian(n2, 1, rng);
  Tensor3 T(n1, n2, N);
  for (Index k = 0; k < N; ++k) {
    T.set_slice(k, (1.0 + static_cast<double>(k)) * u * v.transpose());
  }
  return T;
}

}  // namespace

TEST_CASE("hosvd_factors returns orthonormal factors with non-increasing spectra") {
  const Tensor3 T = random_tensor(8, 7, 9, 21);
  const FactorBasis basis = teim::hosvd_factors(T, 4, 3);
  REQUIRE(basis.U1.rows() == 8);
  REQUIRE(basis.U1.cols() == 4);
  REQUIRE(basis.U2.rows() == 7);
  REQUIRE(basis.U2.cols() == 3);
  CHECK((basis.U1.transpose() * basis.U1 - Matrix::Identity(4, 4)).cwiseAbs().maxCoeff() <
        1e-12);
  CHECK((basis.U2.transpose() * basis.U2 - Matrix::Identity(3, 3)).cwiseAbs().maxCoeff() <
        1e-12);
  REQUIRE(basis.singular_values.size() == 3);
  for (const Vector& sv : basis.singular_values) {
    for (Index i = 0; i + 1 < sv.size(); ++i) {
      CHECK(sv(i) >= sv(i + 1));
    }
  }
  CHECK(basis.mode3_kept);
}

TEST_CASE("factor matrices are the leading left singular vectors of the unfoldings") {
  const Tensor3 T = random_tensor(6, 5, 7, 23);
  const FactorBasis basis = teim::hosvd_factors(T, 3, 2);
  for (int mode : {1, 2}) {
    Eigen::BDCSVD<Matrix> svd(teim::unfold(T, mode), Eigen::ComputeThinU);
    Matrix U = svd.matrixU().leftCols(mode == 1 ? 3 : 2);
    teim::fix_signs(U);
    const Matrix& ours = mode == 1 ? basis.U1 : basis.U2;
    CHECK((ours - U).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("fix_signs makes each column's largest-magnitude entry positive") {
  Matrix U(3, 2);
  U << -3.0, 0.5, 1.0, -0.5, 2.0, 0.1;
  teim::fix_signs(U);
  CHECK(U(0, 0) == 3.0);   // column flipped: |-3| was the max
  CHECK(U(1, 0) == -1.0);
  CHECK(U(0, 1) == 0.5);   // tie between |0.5| entries: first occurrence wins, no flip
  CHECK(U(1, 1) == -0.5);
}

TEST_CASE("requesting more factor rank than the data supports is rejected") {
  const Tensor3 T = rank_one_tensor(6, 5, 4);
  CHECK_THROWS_AS(teim::hosvd_factors(T, 2, 1), teim::RankDeficiencyError);
  CHECK_THROWS_AS(teim::hosvd_factors(T, 1, 2), teim::RankDeficiencyError);
  CHECK_NOTHROW(teim::hosvd_factors(T, 1, 1));
  CHECK_THROWS_AS(teim::hosvd_factors(T, 7, 1), teim::RankDeficiencyError);
}

TEST_CASE("standard_pod spans the snapshot space and respects the rank guard") {
  teim::Rng rng(31);
  const Matrix S = teim::random_gaussian(12, 5, rng);
  const PodBasis basis = teim::standard_pod(S, 5);
  REQUIRE(basis.V.cols() == 5);
  CHECK((basis.V.transpose() * basis.V - Matrix::Identity(5, 5)).cwiseAbs().maxCoeff() < 1e-12);
  // Full-rank basis reproduces every snapshot by orthogonal projection.
  CHECK((S - basis.V * (basis.V.transpose() * S)).cwiseAbs().maxCoeff() < 1e-10);
  CHECK_THROWS_AS(teim::standard_pod(S, 6), teim::RankDeficiencyError);

  Matrix rank_deficient(12, 4);
  rank_deficient.col(0) = S.col(0);
  rank_deficient.col(1) = S.col(1);
  rank_deficient.col(2) = S.col(0) + S.col(1);
  rank_deficient.col(3) = 2.0 * S.col(0) - S.col(1);
  CHECK_THROWS_AS(teim::standard_pod(rank_deficient, 3), teim::RankDeficiencyError);
}

TEST_CASE("center subtracts the slice mean and returns it") {
  const Tensor3 T = random_tensor(4, 3, 5, 41);
  const auto [centered, mean] = teim::center(T);

  Matrix expected_mean = Matrix::Zero(4, 3);
  for (Index k = 0; k < 5; ++k) {
    expected_mean += T.slice(k);
  }
  expected_mean /= 5.0;
  CHECK((mean - expected_mean).cwiseAbs().maxCoeff() < 1e-14);

  Matrix residual_mean = Matrix::Zero(4, 3);
  for (Index k = 0; k < 5; ++k) {
    CHECK((Matrix(centered.slice(k)) - (T.slice(k) - mean)).cwiseAbs().maxCoeff() < 1e-14);
    residual_mean += centered.slice(k);
  }
  CHECK(residual_mean.cwiseAbs().maxCoeff() < 1e-13);
}
