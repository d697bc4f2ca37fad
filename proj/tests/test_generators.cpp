// ============================================================================
// Data-generator checks: closed-form values of the two analytic function
// families, grid conventions, snapshot tensor layout, and the structure of
// the finite-difference phase-field model.
// ============================================================================

#include "teim/generators.hpp"

#include "doctest.h"

#include <cmath>
#include <numbers>

namespace {

using teim::Index;
using teim::Matrix;

}  // namespace

TEST_CASE("the parameterized family evaluates to its closed form") {
  // 1 / sqrt((0.1 + 1)^2 + (0.1 + 1)^2 + 0.01) = 1 / sqrt(2.43)
  CHECK(teim::example1_eval(0.1, 0.1, -1.0, -1.0) == doctest::Approx(0.6415002990995842).epsilon(1e-15));
  // Symmetry in (x - mu1) and (y - mu2).
  CHECK(teim::example1_eval(0.3, 0.7, -0.5, -0.2) ==
        teim::example1_eval(0.7, 0.3, -0.2, -0.5));
}

TEST_CASE("the traveling-front family evaluates to its closed form") {
  // 1 / sqrt((1 + 1 - 0)^2 + (2 - 0)^2 + 0.0001) = 1 / sqrt(8.0001)
  CHECK(teim::example2_eval(1.0, 1.0, 0.0) == doctest::Approx(0.35355118090529836).epsilon(1e-15));
  CHECK(teim::example2_eval(0.0, 0.0, 0.0) == doctest::Approx(100.0).epsilon(1e-15));
}

TEST_CASE("linspace is endpoint-inclusive and uniform") {
  const auto pts = teim::linspace(0.1, 0.9, 5);
  REQUIRE(pts.size() == 5);
  CHECK(pts.front() == 0.1);
  CHECK(pts.back() == 0.9);
  CHECK(pts[2] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK_THROWS_AS(teim::linspace(0.0, 1.0, 0), teim::DimensionError);
}

TEST_CASE("snapshot slices enumerate the parameter grid with mu1 outer") {
  teim::Example1Config config;
  config.grid_n = 4;
  config.train_side = 3;
  const teim::Tensor3 T = teim::build_snapshot_tensor(config, false);
  REQUIRE(T.n1() == 4);
  REQUIRE(T.n2() == 4);
  REQUIRE(T.N() == 9);

  const auto xs = teim::linspace(config.space_lo, config.space_hi, 4);
  const auto mus = teim::linspace(config.mu_lo, config.mu_hi, 3);
  // Slice k pairs mu1 = mus[k / 3] with mu2 = mus[k % 3]; entry (i, j)
  // evaluates at (x_i, y_j).
  for (Index k : {0, 4, 7}) {
    for (Index i : {0, 2}) {
      for (Index j : {1, 3}) {
        const double expected = teim::example1_eval(
            xs[static_cast<std::size_t>(i)], xs[static_cast<std::size_t>(j)],
            mus[static_cast<std::size_t>(k / 3)], mus[static_cast<std::size_t>(k % 3)]);
        CHECK(T(i, j, k) == expected);
      }
    }
  }
}

TEST_CASE("time-series snapshots place the k-th time in slice k") {
  teim::Example2Config config;
  config.grid_n = 3;
  config.train_count = 4;
  const teim::Tensor3 T = teim::build_snapshot_tensor(config, false);
  REQUIRE(T.N() == 4);
  const auto xs = teim::linspace(config.space_lo, config.space_hi, 3);
  const auto ts = teim::linspace(config.t_lo, config.t_hi, 4);
  CHECK(T(1, 2, 3) == teim::example2_eval(xs[1], xs[2], ts[3]));
}

TEST_CASE("the phase-field model has the periodic second-difference structure") {
  const Index n = 8;
  const teim::SemiLinearMatrixModel model = teim::build_allen_cahn(n);
  model.validate();

  const double h = 2.0 * std::numbers::pi / static_cast<double>(n);
  const double scale = 1e-2 / (h * h);
  CHECK(model.A(0, 0) == doctest::Approx(-2.0 * scale).epsilon(1e-14));
  CHECK(model.A(0, 1) == doctest::Approx(scale).epsilon(1e-14));
  CHECK(model.A(0, n - 1) == doctest::Approx(scale).epsilon(1e-14));
  CHECK(model.A(0, 2) == 0.0);
  // Circulant and symmetric, so the row sums vanish and B is A transposed.
  CHECK(model.A.rowwise().sum().cwiseAbs().maxCoeff() < 1e-12);
  CHECK((model.B - model.A.transpose()).cwiseAbs().maxCoeff() == 0.0);

  // Initial condition 0.05 sin(x) cos(y) on the periodic grid x_i = i h.
  CHECK(model.X0(1, 0) == doctest::Approx(0.05 * std::sin(h)).epsilon(1e-14));
  CHECK(model.X0(2, 2) ==
        doctest::Approx(0.05 * std::sin(2.0 * h) * std::cos(2.0 * h)).epsilon(1e-14));
  CHECK(model.X0(0, 0) == 0.0);

  CHECK(model.dt == 0.025);
  CHECK(model.t_final == 5.0);
  CHECK(model.steps() == 200);
  CHECK(model.entrywise);

  // The cubic reaction term, evaluated entrywise: (x - x^3) at x = 2 is -6.
  const Matrix sample = Matrix::Constant(1, 1, 2.0);
  CHECK(model.F(sample, 0.0)(0, 0) == doctest::Approx(-6.0).epsilon(1e-14));

  CHECK_THROWS_AS(teim::build_allen_cahn(3), teim::DimensionError);
}
