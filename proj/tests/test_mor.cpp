// ============================================================================
// Galerkin-reduction checks on small synthetic semi-linear models: the
// integrator's order and time tracking, full-dimension reductions that must
// reproduce the full model, the exact correspondence between the matrix and
// vectorized reduced forms, the entrywise sampling shortcut against the
// dense fallback, centered variants with a zero mean, and the blow-up guard.
// ============================================================================

#include "teim/interp.hpp"
#include "teim/linalg.hpp"
#include "teim/mor.hpp"
#include "teim/random.hpp"
#include "teim/tensor.hpp"

#include "doctest.h"

#include <cmath>

namespace {

using teim::FactorBasis;
using teim::Index;
using teim::Matrix;
using teim::PodBasis;
using teim::SemiLinearMatrixModel;
using teim::Vector;

// A well-behaved dense test model with an entrywise nonlinearity.
SemiLinearMatrixModel synthetic_model(Index n1, Index n2, std::uint64_t seed) {
  teim::Rng rng(seed);
  SemiLinearMatrixModel model;
  model.A = teim::random_gaussian(n1, n1, rng) * 0.1 - Matrix::Identity(n1, n1);
  model.B = teim::random_gaussian(n2, n2, rng) * 0.1 - Matrix::Identity(n2, n2);
  model.F = [](const Matrix& X, double) -> Matrix { return X.array().sin().matrix(); };
  model.entrywise = true;
  model.X0 = teim::random_gaussian(n1, n2, rng);
  model.dt = 0.01;
  model.t_final = 0.2;
  return model;
}

FactorBasis identity_basis(Index n1, Index n2) {
  FactorBasis basis;
  basis.U1 = Matrix::Identity(n1, n1);
  basis.U2 = Matrix::Identity(n2, n2);
  return basis;
}

double max_relative_gap(const std::vector<Matrix>& a, const std::vector<Matrix>& b) {
  REQUIRE(a.size() == b.size());
  double worst = 0.0;
  for (std::size_t s = 0; s < a.size(); ++s) {
    worst = std::max(worst, (a[s] - b[s]).norm() / b[s].norm());
  }
  return worst;
}

}  // namespace

TEST_CASE("the integrator is fourth order on a linear scalar model") {
  SemiLinearMatrixModel model;
  model.A = Matrix::Constant(1, 1, -0.8);
  model.B = Matrix::Constant(1, 1, 0.3);
  model.F = [](const Matrix& X, double) { return Matrix::Zero(X.rows(), X.cols()); };
  model.X0 = Matrix::Constant(1, 1, 1.0);
  model.t_final = 1.0;

  const double exact = std::exp(-0.5);  // x' = (a + b) x
  model.dt = 0.1;
  const double e_coarse =
      std::abs(teim::simulate_fom(model, model.steps()).back()(0, 0) - exact);
  model.dt = 0.05;
  const double e_fine = std::abs(teim::simulate_fom(model, model.steps()).back()(0, 0) - exact);
  const double order = std::log2(e_coarse / e_fine);
  CHECK(order > 3.7);
  CHECK(order < 4.3);
}

TEST_CASE("the integrator tracks time and integrates cubic forcing exactly") {
  SemiLinearMatrixModel model;
  model.A = Matrix::Zero(1, 1);
  model.B = Matrix::Zero(1, 1);
  model.F = [](const Matrix&, double t) { return Matrix::Constant(1, 1, t * t * t); };
  model.X0 = Matrix::Zero(1, 1);
  model.dt = 0.25;
  model.t_final = 2.0;

  const auto states = teim::simulate_fom(model, model.steps());
  REQUIRE(states.size() == 8);  // post-step states only
  // x(t) = t^4 / 4; the quadrature is exact for cubic integrands.
  for (std::size_t s = 0; s < states.size(); ++s) {
    const double t = 0.25 * static_cast<double>(s + 1);
    CHECK(states[s](0, 0) == doctest::Approx(t * t * t * t / 4.0).epsilon(1e-12));
  }
}

TEST_CASE("full-dimension matrix-form reduction reproduces the full model") {
  const SemiLinearMatrixModel model = synthetic_model(6, 5, 1);
  const auto fom = teim::simulate_fom(model, model.steps());

  const FactorBasis state_basis = identity_basis(6, 5);
  const FactorBasis nl_basis = identity_basis(6, 5);
  const teim::InterpGrid grid = teim::two_d_deim(nl_basis.U1, nl_basis.U2);
  const teim::ReducedTeimModel rm = teim::reduce_teim_matrix(model, state_basis, nl_basis, grid);
  const auto reduced = teim::rk4_matrix(rm, model.steps());

  std::vector<Matrix> lifted;
  for (const Matrix& Xr : reduced) {
    lifted.push_back(rm.V1 * Xr * rm.V2.transpose());
  }
  CHECK(max_relative_gap(lifted, fom) < 1e-10);
  CHECK(teim::lift_and_error(reduced, rm, fom) < 1e-10);
}

TEST_CASE("full-dimension vectorized reduction reproduces the full model") {
  const SemiLinearMatrixModel model = synthetic_model(5, 4, 2);
  const auto fom = teim::simulate_fom(model, model.steps());

  PodBasis V;
  V.V = Matrix::Identity(20, 20);
  const teim::DeimApproximator deim_appr = teim::build_deim_from_basis(Matrix::Identity(20, 20));
  const teim::ReducedVectorModel rm = teim::reduce_pod_deim(model, V, deim_appr);
  const auto reduced = teim::rk4_vector(rm, model.steps());
  CHECK(teim::lift_and_error(reduced, rm, fom) < 1e-10);
}

TEST_CASE("matrix and vectorized reduced forms integrate to the same trajectory") {
  const Index n1 = 6, n2 = 5, k1 = 3, k2 = 2, m1 = 3, m2 = 2;
  const SemiLinearMatrixModel model = synthetic_model(n1, n2, 3);

  teim::Rng rng(301);
  FactorBasis state_basis;
  state_basis.U1 = teim::random_orthonormal(n1, k1, rng);
  state_basis.U2 = teim::random_orthonormal(n2, k2, rng);
  FactorBasis nl_basis;
  nl_basis.U1 = teim::random_orthonormal(n1, m1, rng);
  nl_basis.U2 = teim::random_orthonormal(n2, m2, rng);
  const teim::InterpGrid grid = teim::two_d_deim(nl_basis.U1, nl_basis.U2);

  const teim::ReducedTeimModel rm = teim::reduce_teim_matrix(model, state_basis, nl_basis, grid);
  const auto matrix_traj = teim::rk4_matrix(rm, model.steps());

  PodBasis flat;
  flat.V = teim::kron(state_basis.U2, state_basis.U1);  // vec(U1 X U2^T) = (U2 (x) U1) vec(X)
  const teim::ReducedVectorModel rv = teim::reduce_teim_vector(model, flat, nl_basis, grid);
  const auto vector_traj = teim::rk4_vector(rv, model.steps());

  REQUIRE(matrix_traj.size() == vector_traj.size());
  double worst = 0.0;
  for (std::size_t s = 0; s < matrix_traj.size(); ++s) {
    const Matrix lifted_m = rm.V1 * matrix_traj[s] * rm.V2.transpose();
    const Matrix lifted_v = teim::vec_inv(rv.V * vector_traj[s], n1, n2);
    worst = std::max(worst, (lifted_m - lifted_v).cwiseAbs().maxCoeff());
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("the entrywise sampling shortcut equals the dense lift-evaluate-sample path") {
  const Index n1 = 7, n2 = 6;
  const SemiLinearMatrixModel model = synthetic_model(n1, n2, 4);
  teim::Rng rng(401);
  FactorBasis state_basis;
  state_basis.U1 = teim::random_orthonormal(n1, 3, rng);
  state_basis.U2 = teim::random_orthonormal(n2, 3, rng);
  FactorBasis nl_basis;
  nl_basis.U1 = teim::random_orthonormal(n1, 2, rng);
  nl_basis.U2 = teim::random_orthonormal(n2, 2, rng);
  const teim::InterpGrid grid = teim::two_d_deim(nl_basis.U1, nl_basis.U2);

  const teim::ReducedTeimModel fast = teim::reduce_teim_matrix(model, state_basis, nl_basis, grid);
  teim::ReducedTeimModel dense = fast;
  dense.entrywise = false;

  const Matrix Xr = teim::random_gaussian(3, 3, rng);
  const Matrix r1 = teim::rhs_reduced_teim(fast, Xr, 0.1);
  const Matrix r2 = teim::rhs_reduced_teim(dense, Xr, 0.1);
  CHECK((r1 - r2).cwiseAbs().maxCoeff() < 1e-12);

  const teim::ReducedVectorModel vfast = teim::reduce_teim_vector(
      model, [&] { PodBasis p; p.V = teim::random_orthonormal(n1 * n2, 4, rng); return p; }(),
      nl_basis, grid);
  teim::ReducedVectorModel vdense = vfast;
  vdense.entrywise = false;
  const Vector xr = teim::random_gaussian(4, 1, rng).col(0);
  const Vector v1 = teim::rhs_reduced_vector(vfast, xr, 0.1);
  const Vector v2 = teim::rhs_reduced_vector(vdense, xr, 0.1);
  CHECK((v1 - v2).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("centered reductions with a zero mean match the plain reductions") {
  const Index n1 = 6, n2 = 5;
  const SemiLinearMatrixModel model = synthetic_model(n1, n2, 5);
  teim::Rng rng(501);
  FactorBasis state_basis;
  state_basis.U1 = teim::random_orthonormal(n1, 3, rng);
  state_basis.U2 = teim::random_orthonormal(n2, 2, rng);
  FactorBasis nl_basis;
  nl_basis.U1 = teim::random_orthonormal(n1, 2, rng);
  nl_basis.U2 = teim::random_orthonormal(n2, 2, rng);
  const teim::InterpGrid grid = teim::two_d_deim(nl_basis.U1, nl_basis.U2);

  const Matrix zero_mean = Matrix::Zero(n1, n2);
  const teim::ReducedTeimModel plain = teim::reduce_teim_matrix(model, state_basis, nl_basis, grid);
  const teim::ReducedTeimModel centered =
      teim::reduce_teim_matrix_centered(model, state_basis, nl_basis, grid, zero_mean, zero_mean);
  REQUIRE(centered.centered.has_value());

  const auto plain_traj = teim::rk4_matrix(plain, model.steps());
  const auto centered_traj = teim::rk4_matrix(centered, model.steps());
  double worst = 0.0;
  for (std::size_t s = 0; s < plain_traj.size(); ++s) {
    worst = std::max(worst, (plain_traj[s] - centered_traj[s]).cwiseAbs().maxCoeff());
  }
  CHECK(worst < 1e-12);

  const auto fom = teim::simulate_fom(model, model.steps());
  CHECK(std::abs(teim::lift_and_error(plain_traj, plain, fom) -
                 teim::lift_and_error(centered_traj, centered, fom)) < 1e-12);
}

TEST_CASE("a diverging trajectory raises the blow-up guard with its step") {
  SemiLinearMatrixModel model;
  model.A = Matrix::Zero(1, 1);
  model.B = Matrix::Zero(1, 1);
  model.F = [](const Matrix& X, double) -> Matrix { return X.array().square().matrix(); };
  model.entrywise = true;
  model.X0 = Matrix::Constant(1, 1, 10.0);
  model.dt = 1.0;  // far beyond stability for x' = x^2, x0 = 10
  model.t_final = 50.0;
  CHECK_THROWS_AS(teim::simulate_fom(model, model.steps()), teim::BlowupError);
  try {
    teim::simulate_fom(model, model.steps());
  } catch (const teim::BlowupError& e) {
    CHECK(e.step() >= 0);
    CHECK(e.step() < 50);
  }
}

TEST_CASE("model validation rejects inconsistent shapes and time steps") {
  SemiLinearMatrixModel model = synthetic_model(4, 3, 6);
  model.dt = 0.0;
  CHECK_THROWS_AS(model.validate(), teim::DimensionError);
  model = synthetic_model(4, 3, 6);
  model.X0 = Matrix::Zero(3, 3);
  CHECK_THROWS_AS(model.validate(), teim::DimensionError);
  CHECK_NOTHROW(synthetic_model(4, 3, 6).validate());
}
