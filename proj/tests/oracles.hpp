#pragma once

// ============================================================================
// Literal reference implementations for the test suite. Everything here is
// written the slow, obvious way — dense selection and permutation matrices,
// full residual matrices, brute-force loops — precisely so the production
// shortcuts have something independent to be checked against. Nothing in
// this header is used by the library itself.
// ============================================================================

#include "teim/types.hpp"

#include <Eigen/LU>

#include <cmath>
#include <utility>
#include <vector>

namespace teim::oracle {

// Dense n x m selection matrix with column t = e_{indices[t]}.
inline Matrix selection_matrix(Index n, const std::vector<Index>& indices) {
  Matrix P = Matrix::Zero(n, static_cast<Index>(indices.size()));
  for (std::size_t t = 0; t < indices.size(); ++t) {
    P(indices[t], static_cast<Index>(t)) = 1.0;
  }
  return P;
}

// Dense commutation matrix P_mn, built from its defining sum over
// elementary matrices: P_mn = sum_ij E_ij (x) E_ij^T with E_ij of shape
// m x n. It satisfies P_mn * vec(X) = vec(X^T) for X of shape m x n.
inline Matrix commutation_matrix(Index m, Index n) {
  Matrix P = Matrix::Zero(m * n, m * n);
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < n; ++j) {
      // kron(E_ij, E_ij^T) has its single 1 at row (j + n*i), col (i + m*j).
      P(j + n * i, i + m * j) = 1.0;
    }
  }
  return P;
}

// Brute-force greedy selection on a basis with independent columns, using
// dense selection matrices and dense solves at every step.
inline std::vector<Index> deim_brute(const Matrix& U) {
  const Index m = U.cols();
  std::vector<Index> indices;
  Index p = 0;
  U.col(0).cwiseAbs().maxCoeff(&p);
  indices.push_back(p);
  for (Index l = 1; l < m; ++l) {
    const Matrix P = selection_matrix(U.rows(), indices);
    const Matrix PtU = P.transpose() * U.leftCols(l);
    const Vector c = PtU.fullPivLu().solve(P.transpose() * U.col(l));
    const Vector r = U.col(l) - U.leftCols(l) * c;
    r.cwiseAbs().maxCoeff(&p);
    indices.push_back(p);
  }
  return indices;
}

struct TeimBruteResult {
  std::vector<Index> row_of_pair;
  std::vector<Index> col_of_pair;
  std::vector<double> residual_maxima;
};

// Brute-force greedy point selection on the rank-one basis family
// u_k v_l^T, enumerated row-major in (k, l). Every step materializes the
// full n1 x n2 residual matrix: the current basis member minus its
// interpolation on all previously selected points.
inline TeimBruteResult teim_brute(const Matrix& U1, const Matrix& U2) {
  const Index n1 = U1.rows(), n2 = U2.rows();
  const Index m1 = U1.cols(), m2 = U2.cols();
  TeimBruteResult out;
  Matrix W(n1 * n2, 0);  // vectorized selected basis members
  for (Index t = 0; t < m1 * m2; ++t) {
    const Index k = t / m2, l = t % m2;
    const Matrix member = U1.col(k) * U2.col(l).transpose();
    const Vector w = Eigen::Map<const Vector>(member.data(), n1 * n2);

    Matrix R;
    if (t == 0) {
      R = member;
    } else {
      std::vector<Index> flat(static_cast<std::size_t>(t));
      for (Index s = 0; s < t; ++s) {
        flat[static_cast<std::size_t>(s)] =
            out.row_of_pair[static_cast<std::size_t>(s)] +
            n1 * out.col_of_pair[static_cast<std::size_t>(s)];
      }
      const Matrix P = selection_matrix(n1 * n2, flat);
      const Vector c = (P.transpose() * W).fullPivLu().solve(P.transpose() * w);
      const Vector r = w - W * c;
      R = Eigen::Map<const Matrix>(r.data(), n1, n2);
    }

    // First occurrence of the maximum modulus, scanning rows then columns.
    Index bi = 0, bj = 0;
    double best = -1.0;
    for (Index j = 0; j < n2; ++j) {
      for (Index i = 0; i < n1; ++i) {
        if (std::abs(R(i, j)) > best) {
          best = std::abs(R(i, j));
          bi = i;
          bj = j;
        }
      }
    }
    out.row_of_pair.push_back(bi);
    out.col_of_pair.push_back(bj);
    out.residual_maxima.push_back(best);

    W.conservativeResize(n1 * n2, t + 1);
    W.col(t) = w;
  }
  return out;
}

// Dense Kronecker product written as the textbook double loop.
inline Matrix kron_brute(const Matrix& A, const Matrix& B) {
  Matrix K(A.rows() * B.rows(), A.cols() * B.cols());
  for (Index i = 0; i < A.rows(); ++i) {
    for (Index j = 0; j < A.cols(); ++j) {
      K.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
    }
  }
  return K;
}

}  // namespace teim::oracle
