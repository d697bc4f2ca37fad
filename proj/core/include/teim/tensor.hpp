#pragma once

// ============================================================================
// Order-3 tensor container with dense column-major storage and the three
// mode unfoldings. Entry (i, j, k) lives at offset i + n1*j + n1*n2*k, so
// slice k is a contiguous column-major n1 x n2 matrix and the mode-1
// unfolding is a zero-copy reinterpretation of the whole buffer.
// ============================================================================

#include "teim/types.hpp"

namespace teim {

class Tensor3 {
 public:
  Tensor3() = default;
  Tensor3(Index n1, Index n2, Index N)
      : n1_(n1), n2_(n2), N_(N), data_(Vector::Zero(n1 * n2 * N)) {
    if (n1 <= 0 || n2 <= 0 || N <= 0) {
      throw DimensionError("Tensor3: dimensions must be positive");
    }
  }

  Index n1() const { return n1_; }
  Index n2() const { return n2_; }
  Index N() const { return N_; }

  double& operator()(Index i, Index j, Index k) { return data_(i + n1_ * j + n1_ * n2_ * k); }
  double operator()(Index i, Index j, Index k) const { return data_(i + n1_ * j + n1_ * n2_ * k); }

  const Vector& data() const { return data_; }
  Vector& data() { return data_; }

  // Slice k as an n1 x n2 matrix view (no copy).
  Eigen::Map<const Matrix> slice(Index k) const {
    check_slice(k);
    return Eigen::Map<const Matrix>(data_.data() + n1_ * n2_ * k, n1_, n2_);
  }
  Eigen::Map<Matrix> slice(Index k) {
    check_slice(k);
    return Eigen::Map<Matrix>(data_.data() + n1_ * n2_ * k, n1_, n2_);
  }

  void set_slice(Index k, const Matrix& A) {
    if (A.rows() != n1_ || A.cols() != n2_) {
      throw DimensionError("Tensor3::set_slice: slice shape mismatch");
    }
    slice(k) = A;
  }

 private:
  void check_slice(Index k) const {
    if (k < 0 || k >= N_) {
      throw DimensionError("Tensor3: slice index out of range");
    }
  }

  Index n1_ = 0, n2_ = 0, N_ = 0;
  Vector data_;
};

// Mode unfoldings (cyclic convention):
//   mode 1: n1 x (n2*N), column (j + n2*k) = T(:, j, k)
//   mode 2: n2 x (N*n1), column (k + N*i)  = T(i, :, k)
//   mode 3: N  x (n1*n2), column (i + n1*j) = T(i, j, :)
Matrix unfold(const Tensor3& T, int mode);

// Inverse of unfold for the given mode and target dimensions.
Tensor3 fold(const Matrix& M, int mode, Index n1, Index n2, Index N);

}  // namespace teim
