#pragma once

// ============================================================================
// Experiment data generators: the parameterized 2D function family
// (Example 1), the traveling-front time series (Example 2), and the
// finite-difference Allen-Cahn model builder. Snapshot tensors are
// deterministic regardless of thread count.
// ============================================================================

#include "teim/mor.hpp"
#include "teim/tensor.hpp"
#include "teim/types.hpp"

#include <vector>

namespace teim {

// Example 1: f(x, y; mu) = 1 / sqrt((x - mu1)^2 + (y - mu2)^2 + 0.1^2)
// on a 20x20 spatial grid over [0.1, 0.9]^2, with parameters drawn from a
// tensor-product grid over [-1, -0.01]^2 (15x15 training, 25x25 test).
struct Example1Config {
  Index grid_n = 20;
  double space_lo = 0.1;
  double space_hi = 0.9;
  Index train_side = 15;
  Index test_side = 25;
  double mu_lo = -1.0;
  double mu_hi = -0.01;
};

// Example 2: f(x, y, t) = 1 / sqrt((x + y - t)^2 + (2x - 3t)^2 + 0.01^2)
// on a 50x50 grid over [0, 2]^2, sampled at 300 training / 400 test times
// equally spaced in [0, 2].
struct Example2Config {
  Index grid_n = 50;
  double space_lo = 0.0;
  double space_hi = 2.0;
  Index train_count = 300;
  Index test_count = 400;
  double t_lo = 0.0;
  double t_hi = 2.0;
};

double example1_eval(double x, double y, double mu1, double mu2);
double example2_eval(double x, double y, double t);

// Endpoint-inclusive uniform grid.
std::vector<double> linspace(double lo, double hi, Index n);

// Snapshot tensors: slice k is the function evaluated on the spatial grid at
// the k-th parameter/time. Parameter pairs enumerate mu1 outer, mu2 inner.
Tensor3 build_snapshot_tensor(const Example1Config& config, bool test_set = false);
Tensor3 build_snapshot_tensor(const Example2Config& config, bool test_set = false);

// 2D Allen-Cahn on [0, 2*pi]^2 with periodic boundary conditions:
//   u_t = eps1 * Laplace(u) - (1/eps2^2) (u^3 - u),
//   u0(x, y) = 0.05 sin(x) cos(y), dt = 0.025, t_final = 5.
// Discretized as X' = A X + X B + F(X) with circulant second differences.
SemiLinearMatrixModel build_allen_cahn(Index n = 30);

}  // namespace teim
