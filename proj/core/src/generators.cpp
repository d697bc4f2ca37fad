#include "teim/generators.hpp"

#include "teim/parallel.hpp"

#include <cmath>
#include <numbers>

namespace teim {

namespace {

constexpr double kExample1Reg = 0.1 * 0.1;
constexpr double kExample2Reg = 0.01 * 0.01;

}  // namespace

double example1_eval(double x, double y, double mu1, double mu2) {
  const double dx = x - mu1;
  const double dy = y - mu2;
  return 1.0 / std::sqrt(dx * dx + dy * dy + kExample1Reg);
}

double example2_eval(double x, double y, double t) {
  const double a = x + y - t;
  const double b = 2.0 * x - 3.0 * t;
  return 1.0 / std::sqrt(a * a + b * b + kExample2Reg);
}

std::vector<double> linspace(double lo, double hi, Index n) {
  if (n < 1) {
    throw DimensionError("linspace: need at least one point");
  }
  std::vector<double> pts(static_cast<std::size_t>(n));
  if (n == 1) {
    pts[0] = lo;
    return pts;
  }
  const double h = (hi - lo) / static_cast<double>(n - 1);
  for (Index i = 0; i < n; ++i) {
    pts[static_cast<std::size_t>(i)] = lo + h * static_cast<double>(i);
  }
  pts[static_cast<std::size_t>(n - 1)] = hi;
  return pts;
}

Tensor3 build_snapshot_tensor(const Example1Config& config, bool test_set) {
  const Index side = test_set ? config.test_side : config.train_side;
  const std::vector<double> xs = linspace(config.space_lo, config.space_hi, config.grid_n);
  const std::vector<double> mus = linspace(config.mu_lo, config.mu_hi, side);
  Tensor3 T(config.grid_n, config.grid_n, side * side);
  parallel_for(static_cast<std::size_t>(side * side), [&](std::size_t k) {
    const double mu1 = mus[k / static_cast<std::size_t>(side)];
    const double mu2 = mus[k % static_cast<std::size_t>(side)];
    auto slice = T.slice(static_cast<Index>(k));
    for (Index j = 0; j < config.grid_n; ++j) {
      for (Index i = 0; i < config.grid_n; ++i) {
        slice(i, j) = example1_eval(xs[static_cast<std::size_t>(i)],
                                    xs[static_cast<std::size_t>(j)], mu1, mu2);
      }
    }
  });
  return T;
}

Tensor3 build_snapshot_tensor(const Example2Config& config, bool test_set) {
  const Index count = test_set ? config.test_count : config.train_count;
  const std::vector<double> xs = linspace(config.space_lo, config.space_hi, config.grid_n);
  const std::vector<double> ts = linspace(config.t_lo, config.t_hi, count);
  Tensor3 T(config.grid_n, config.grid_n, count);
  parallel_for(static_cast<std::size_t>(count), [&](std::size_t k) {
    const double t = ts[k];
    auto slice = T.slice(static_cast<Index>(k));
    for (Index j = 0; j < config.grid_n; ++j) {
      for (Index i = 0; i < config.grid_n; ++i) {
        slice(i, j) = example2_eval(xs[static_cast<std::size_t>(i)],
                                    xs[static_cast<std::size_t>(j)], t);
      }
    }
  });
  return T;
}

SemiLinearMatrixModel build_allen_cahn(Index n) {
  if (n < 4) {
    throw DimensionError("build_allen_cahn: need n >= 4");
  }
  constexpr double eps1 = 1e-2;
  constexpr double eps2 = 1.0;
  const double h = 2.0 * std::numbers::pi / static_cast<double>(n);

  // Periodic second-difference matrix scaled by 1/h^2; circulant, symmetric.
  Matrix D2 = Matrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    D2(i, i) = -2.0;
    D2(i, (i + 1) % n) = 1.0;
    D2(i, (i + n - 1) % n) = 1.0;
  }
  D2 /= h * h;

  SemiLinearMatrixModel model;
  model.A = eps1 * D2;
  model.B = eps1 * D2.transpose();
  model.entrywise = true;
  model.F = [](const Matrix& X, double) -> Matrix {
    return (X - X.array().cube().matrix()) / (eps2 * eps2);
  };
  model.X0.resize(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      const double x = h * static_cast<double>(i);
      const double y = h * static_cast<double>(j);
      model.X0(i, j) = 0.05 * std::sin(x) * std::cos(y);
    }
  }
  model.dt = 0.025;
  model.t_final = 5.0;
  return model;
}

}  // namespace teim
