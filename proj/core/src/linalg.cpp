#include "teim/linalg.hpp"

#include <string>

namespace teim {

Vector vec(const Matrix& X) {
  // Column-major storage makes this a straight buffer copy.
  return Eigen::Map<const Vector>(X.data(), X.size());
}

Matrix vec_inv(const Vector& v, Index m, Index n) {
  if (v.size() != m * n) {
    throw DimensionError("vec_inv: vector length " + std::to_string(v.size()) +
                         " != " + std::to_string(m) + "*" + std::to_string(n));
  }
  return Eigen::Map<const Matrix>(v.data(), m, n);
}

Vector vecd(const Matrix& A) {
  if (A.rows() != A.cols()) {
    throw DimensionError("vecd: matrix is not square");
  }
  return A.diagonal();
}

Matrix kron(const Matrix& A, const Matrix& B) {
  Matrix K(A.rows() * B.rows(), A.cols() * B.cols());
  for (Index j = 0; j < A.cols(); ++j) {
    for (Index i = 0; i < A.rows(); ++i) {
      K.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
    }
  }
  return K;
}

Matrix khatri_rao_colwise(const Matrix& A, const Matrix& B) {
  if (A.cols() != B.cols()) {
    throw DimensionError("khatri_rao_colwise: column counts differ (" +
                         std::to_string(A.cols()) + " vs " + std::to_string(B.cols()) + ")");
  }
  Matrix K(A.rows() * B.rows(), A.cols());
  for (Index j = 0; j < A.cols(); ++j) {
    for (Index i = 0; i < A.rows(); ++i) {
      K.col(j).segment(i * B.rows(), B.rows()) = A(i, j) * B.col(j);
    }
  }
  return K;
}

Vector commutation_apply(const Vector& v, Index m, Index n) {
  if (v.size() != m * n) {
    throw DimensionError("commutation_apply: vector length " + std::to_string(v.size()) +
                         " != " + std::to_string(m) + "*" + std::to_string(n));
  }
  // v = vec(X) with X m x n; the result is vec(X^T): entry (j + n*i) of the
  // output is X(i, j) = v(i + m*j).
  Vector out(v.size());
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < m; ++i) {
      out(j + n * i) = v(i + m * j);
    }
  }
  return out;
}

Matrix mask_apply(const Matrix& A, const MaskPairs& pairs, Index m1, Index m2) {
  if (pairs.size() != m1 * m2) {
    throw DimensionError("mask_apply: pair count " + std::to_string(pairs.size()) +
                         " != " + std::to_string(m1) + "*" + std::to_string(m2));
  }
  Matrix M(m1, m2);
  for (Index k = 0; k < pairs.size(); ++k) {
    const Index i = pairs.row_indices[static_cast<std::size_t>(k)];
    const Index j = pairs.col_indices[static_cast<std::size_t>(k)];
    if (i < 0 || i >= A.rows() || j < 0 || j >= A.cols()) {
      throw DimensionError("mask_apply: pair (" + std::to_string(i) + ", " + std::to_string(j) +
                           ") out of bounds for " + std::to_string(A.rows()) + "x" +
                           std::to_string(A.cols()));
    }
    M(k / m2, k % m2) = A(i, j);
  }
  return M;
}

Matrix grid_sample(const Matrix& A, const InterpGrid& grid) {
  Matrix M(grid.m1(), grid.m2());
  for (Index r = 0; r < grid.m1(); ++r) {
    const Index i = grid.rows.indices[static_cast<std::size_t>(r)];
    if (i < 0 || i >= A.rows()) {
      throw DimensionError("grid_sample: row index " + std::to_string(i) + " out of bounds");
    }
    for (Index c = 0; c < grid.m2(); ++c) {
      const Index j = grid.cols.indices[static_cast<std::size_t>(c)];
      if (j < 0 || j >= A.cols()) {
        throw DimensionError("grid_sample: column index " + std::to_string(j) + " out of bounds");
      }
      M(r, c) = A(i, j);
    }
  }
  return M;
}

}  // namespace teim
