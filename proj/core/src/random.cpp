#include "teim/random.hpp"

#include <Eigen/QR>

namespace teim {

Matrix random_gaussian(Index rows, Index cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix G(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) {
      G(i, j) = normal(rng);
    }
  }
  return G;
}

Matrix random_orthonormal(Index rows, Index cols, Rng& rng) {
  if (rows < cols) {
    throw DimensionError("random_orthonormal: need rows >= cols");
  }
  const Matrix G = random_gaussian(rows, cols, rng);
  Eigen::HouseholderQR<Matrix> qr(G);
  Matrix Q = qr.householderQ() * Matrix::Identity(rows, cols);
  const Matrix R = qr.matrixQR().topRows(cols).triangularView<Eigen::Upper>();
  for (Index j = 0; j < cols; ++j) {
    if (R(j, j) < 0.0) {
      Q.col(j) = -Q.col(j);
    }
  }
  return Q;
}

}  // namespace teim
