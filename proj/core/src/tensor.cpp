#include "teim/tensor.hpp"

#include <string>

namespace teim {

Matrix unfold(const Tensor3& T, int mode) {
  const Index n1 = T.n1(), n2 = T.n2(), N = T.N();
  switch (mode) {
    case 1:
      // The buffer is already n1 x (n2*N) column-major.
      return Eigen::Map<const Matrix>(T.data().data(), n1, n2 * N);
    case 2: {
      Matrix M(n2, N * n1);
      for (Index i = 0; i < n1; ++i) {
        for (Index k = 0; k < N; ++k) {
          for (Index j = 0; j < n2; ++j) {
            M(j, k + N * i) = T(i, j, k);
          }
        }
      }
      return M;
    }
    case 3: {
      Matrix M(N, n1 * n2);
      for (Index j = 0; j < n2; ++j) {
        for (Index i = 0; i < n1; ++i) {
          for (Index k = 0; k < N; ++k) {
            M(k, i + n1 * j) = T(i, j, k);
          }
        }
      }
      return M;
    }
    default:
      throw DimensionError("unfold: mode must be 1, 2, or 3 (got " + std::to_string(mode) + ")");
  }
}

Tensor3 fold(const Matrix& M, int mode, Index n1, Index n2, Index N) {
  Tensor3 T(n1, n2, N);
  switch (mode) {
    case 1:
      if (M.rows() != n1 || M.cols() != n2 * N) {
        throw DimensionError("fold: mode-1 shape mismatch");
      }
      T.data() = Eigen::Map<const Vector>(M.data(), M.size());
      return T;
    case 2:
      if (M.rows() != n2 || M.cols() != N * n1) {
        throw DimensionError("fold: mode-2 shape mismatch");
      }
      for (Index i = 0; i < n1; ++i) {
        for (Index k = 0; k < N; ++k) {
          for (Index j = 0; j < n2; ++j) {
            T(i, j, k) = M(j, k + N * i);
          }
        }
      }
      return T;
    case 3:
      if (M.rows() != N || M.cols() != n1 * n2) {
        throw DimensionError("fold: mode-3 shape mismatch");
      }
      for (Index j = 0; j < n2; ++j) {
        for (Index i = 0; i < n1; ++i) {
          for (Index k = 0; k < N; ++k) {
            T(i, j, k) = M(k, i + n1 * j);
          }
        }
      }
      return T;
    default:
      throw DimensionError("fold: mode must be 1, 2, or 3 (got " + std::to_string(mode) + ")");
  }
}

}  // namespace teim
