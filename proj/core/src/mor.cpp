#include "teim/mor.hpp"

#include "teim/linalg.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace teim {

namespace {

Matrix select_rows(const Matrix& U, const SelectionOperator& sel) {
  Matrix P(sel.size(), U.cols());
  for (Index s = 0; s < sel.size(); ++s) {
    P.row(s) = U.row(sel.indices[static_cast<std::size_t>(s)]);
  }
  return P;
}

// Shared assembly of the matrix-form reduced operators.
ReducedTeimModel assemble_matrix_form(const SemiLinearMatrixModel& model,
                                      const FactorBasis& state_basis,
                                      const FactorBasis& nl_basis, const InterpGrid& grid) {
  model.validate();
  if (state_basis.n1() != model.n1() || state_basis.n2() != model.n2() ||
      nl_basis.n1() != model.n1() || nl_basis.n2() != model.n2()) {
    throw DimensionError("reduce_teim_matrix: basis dimensions do not match the model");
  }
  ReducedTeimModel rm;
  rm.V1 = state_basis.U1;
  rm.V2 = state_basis.U2;
  rm.nl_approximator = build_teim(nl_basis, grid);
  rm.grid = grid;
  rm.Ar = rm.V1.transpose() * model.A * rm.V1;
  rm.Br = rm.V2.transpose() * model.B * rm.V2;
  rm.NL_left = rm.V1.transpose() * rm.nl_approximator.left;
  rm.NL_right = rm.nl_approximator.right.transpose() * rm.V2;
  rm.sample_left = select_rows(rm.V1, grid.rows);
  rm.sample_right = select_rows(rm.V2, grid.cols).transpose();
  rm.F = model.F;
  rm.entrywise = model.entrywise;
  rm.dt = model.dt;
  return rm;
}

// Shared assembly of the vectorized reduced operators, given the nonlinear
// projector columns and the flat sample indices.
ReducedVectorModel assemble_vector_form(const SemiLinearMatrixModel& model, const PodBasis& V,
                                        const Matrix& nl_projector,
                                        std::vector<Index> sample_flat) {
  model.validate();
  const Index n1 = model.n1();
  const Index n2 = model.n2();
  if (V.n() != n1 * n2) {
    throw DimensionError("vector reduction: POD basis length != n1*n2");
  }
  ReducedVectorModel rm;
  rm.V = V.V;
  rm.n1 = n1;
  rm.n2 = n2;
  const Index k = V.k();

  // Ar = V^T (I (x) A + B^T (x) I) V, assembled column-by-column through the
  // Sylvester action A*Xj + Xj*B so the Kronecker operator is never densified.
  rm.Ar.resize(k, k);
  for (Index j = 0; j < k; ++j) {
    const Eigen::Map<const Matrix> Xj(rm.V.col(j).data(), n1, n2);
    const Matrix Yj = model.A * Xj + Xj * model.B;
    rm.Ar.col(j) = rm.V.transpose() * Eigen::Map<const Vector>(Yj.data(), Yj.size());
  }

  rm.NL = rm.V.transpose() * nl_projector;
  rm.sample_flat = std::move(sample_flat);
  rm.Vs.resize(static_cast<Index>(rm.sample_flat.size()), k);
  for (Index s = 0; s < static_cast<Index>(rm.sample_flat.size()); ++s) {
    rm.Vs.row(s) = rm.V.row(rm.sample_flat[static_cast<std::size_t>(s)]);
  }
  rm.F = model.F;
  rm.entrywise = model.entrywise;
  rm.dt = model.dt;
  return rm;
}

// Nonlinear projector of the tensor grid in flat coordinates: column
// q = r*m2 + c is vec(L.col(r) * R.col(c)^T); the matching sample is the
// grid point (rows[r], cols[c]).
std::pair<Matrix, std::vector<Index>> tensor_grid_projector(const TeimApproximator& appr,
                                                            Index n1, Index n2) {
  const Index m1 = appr.m1();
  const Index m2 = appr.m2();
  Matrix projector(n1 * n2, m1 * m2);
  std::vector<Index> flat;
  flat.reserve(static_cast<std::size_t>(m1 * m2));
  for (Index r = 0; r < m1; ++r) {
    for (Index c = 0; c < m2; ++c) {
      const Matrix outer = appr.left.col(r) * appr.right.col(c).transpose();
      projector.col(r * m2 + c) = Eigen::Map<const Vector>(outer.data(), outer.size());
      flat.push_back(appr.grid.rows.indices[static_cast<std::size_t>(r)] +
                     n1 * appr.grid.cols.indices[static_cast<std::size_t>(c)]);
    }
  }
  return {std::move(projector), std::move(flat)};
}

Vector sample_vector(const Vector& v, const std::vector<Index>& flat) {
  Vector out(static_cast<Index>(flat.size()));
  for (Index s = 0; s < out.size(); ++s) {
    out(s) = v(flat[static_cast<std::size_t>(s)]);
  }
  return out;
}

void check_finite(const Matrix& Y, long step) {
  if (!Y.allFinite()) {
    throw BlowupError("time integration produced a non-finite state at step " +
                          std::to_string(step),
                      step);
  }
}

}  // namespace

ReducedTeimModel reduce_teim_matrix(const SemiLinearMatrixModel& model,
                                    const FactorBasis& state_basis, const FactorBasis& nl_basis,
                                    const InterpGrid& grid) {
  ReducedTeimModel rm = assemble_matrix_form(model, state_basis, nl_basis, grid);
  rm.X0r = rm.V1.transpose() * model.X0 * rm.V2;
  return rm;
}

ReducedTeimModel reduce_teim_matrix_centered(const SemiLinearMatrixModel& model,
                                             const FactorBasis& state_basis,
                                             const FactorBasis& nl_basis, const InterpGrid& grid,
                                             const Matrix& mean_state, const Matrix& mean_nl) {
  ReducedTeimModel rm = assemble_matrix_form(model, state_basis, nl_basis, grid);
  CenteredTermsMatrix ct;
  ct.mean_state = mean_state;
  // Constant forcing from the affine lift: projected linear action on the
  // mean plus the exactly projected mean nonlinearity.
  ct.const_forcing = rm.V1.transpose() * (model.A * mean_state + mean_state * model.B +
                                          mean_nl) * rm.V2;
  ct.mean_grid = grid_sample(mean_state, grid);
  ct.mean_nl_grid = grid_sample(mean_nl, grid);
  rm.centered = std::move(ct);
  rm.X0r = rm.V1.transpose() * (model.X0 - mean_state) * rm.V2;
  return rm;
}

ReducedVectorModel reduce_teim_vector(const SemiLinearMatrixModel& model, const PodBasis& V,
                                      const FactorBasis& nl_basis, const InterpGrid& grid) {
  const TeimApproximator appr = build_teim(nl_basis, grid);
  auto [projector, flat] = tensor_grid_projector(appr, model.n1(), model.n2());
  ReducedVectorModel rm = assemble_vector_form(model, V, projector, std::move(flat));
  rm.x0r = rm.V.transpose() * Eigen::Map<const Vector>(model.X0.data(), model.X0.size());
  return rm;
}

ReducedVectorModel reduce_teim_vector_centered(const SemiLinearMatrixModel& model,
                                               const PodBasis& V, const FactorBasis& nl_basis,
                                               const InterpGrid& grid, const Matrix& mean_state,
                                               const Matrix& mean_nl) {
  const TeimApproximator appr = build_teim(nl_basis, grid);
  auto [projector, flat] = tensor_grid_projector(appr, model.n1(), model.n2());
  ReducedVectorModel rm = assemble_vector_form(model, V, projector, std::move(flat));
  CenteredTermsVector ct;
  ct.mean_state = Eigen::Map<const Vector>(mean_state.data(), mean_state.size());
  const Matrix lin = model.A * mean_state + mean_state * model.B;
  ct.const_forcing =
      rm.V.transpose() * (Eigen::Map<const Vector>(lin.data(), lin.size()) +
                          Eigen::Map<const Vector>(mean_nl.data(), mean_nl.size()));
  ct.mean_samples = sample_vector(ct.mean_state, rm.sample_flat);
  ct.mean_nl_samples =
      sample_vector(Eigen::Map<const Vector>(mean_nl.data(), mean_nl.size()), rm.sample_flat);
  rm.centered = std::move(ct);
  rm.x0r = rm.V.transpose() *
           (Eigen::Map<const Vector>(model.X0.data(), model.X0.size()) - rm.centered->mean_state);
  return rm;
}

ReducedVectorModel reduce_pod_deim(const SemiLinearMatrixModel& model, const PodBasis& V,
                                   const DeimApproximator& deim_appr) {
  ReducedVectorModel rm =
      assemble_vector_form(model, V, deim_appr.projector, deim_appr.indices.indices);
  rm.x0r = rm.V.transpose() * Eigen::Map<const Vector>(model.X0.data(), model.X0.size());
  return rm;
}

ReducedVectorModel reduce_pod_deim_centered(const SemiLinearMatrixModel& model, const PodBasis& V,
                                            const DeimApproximator& deim_appr,
                                            const Matrix& mean_state, const Matrix& mean_nl) {
  ReducedVectorModel rm =
      assemble_vector_form(model, V, deim_appr.projector, deim_appr.indices.indices);
  CenteredTermsVector ct;
  ct.mean_state = Eigen::Map<const Vector>(mean_state.data(), mean_state.size());
  const Matrix lin = model.A * mean_state + mean_state * model.B;
  ct.const_forcing =
      rm.V.transpose() * (Eigen::Map<const Vector>(lin.data(), lin.size()) +
                          Eigen::Map<const Vector>(mean_nl.data(), mean_nl.size()));
  ct.mean_samples = sample_vector(ct.mean_state, rm.sample_flat);
  ct.mean_nl_samples =
      sample_vector(Eigen::Map<const Vector>(mean_nl.data(), mean_nl.size()), rm.sample_flat);
  rm.centered = std::move(ct);
  rm.x0r = rm.V.transpose() *
           (Eigen::Map<const Vector>(model.X0.data(), model.X0.size()) - rm.centered->mean_state);
  return rm;
}

Matrix rhs_reduced_teim(const ReducedTeimModel& rm, const Matrix& Xr, double t) {
  Matrix linear = rm.Ar * Xr + Xr * rm.Br;
  if (rm.centered) linear += rm.centered->const_forcing;

  Matrix sampled_nl;
  if (rm.entrywise) {
    // Sample the lifted state on the grid without forming it.
    Matrix sampled_state = rm.sample_left * Xr * rm.sample_right;
    if (rm.centered) {
      sampled_state += rm.centered->mean_grid;
      sampled_nl = rm.F(sampled_state, t) - rm.centered->mean_nl_grid;
    } else {
      sampled_nl = rm.F(sampled_state, t);
    }
  } else {
    // Dense fallback: lift, evaluate, sample.
    Matrix lifted = rm.V1 * Xr * rm.V2.transpose();
    if (rm.centered) {
      lifted += rm.centered->mean_state;
      sampled_nl = grid_sample(rm.F(lifted, t), rm.grid) - rm.centered->mean_nl_grid;
    } else {
      sampled_nl = grid_sample(rm.F(lifted, t), rm.grid);
    }
  }
  return linear + rm.NL_left * sampled_nl * rm.NL_right;
}

Vector rhs_reduced_vector(const ReducedVectorModel& rm, const Vector& xr, double t) {
  Vector linear = rm.Ar * xr;
  if (rm.centered) linear += rm.centered->const_forcing;

  Vector sampled_nl;
  if (rm.entrywise) {
    Vector sampled_state = rm.Vs * xr;
    if (rm.centered) sampled_state += rm.centered->mean_samples;
    // Entrywise nonlinearities accept the samples as a column matrix.
    const Matrix values = rm.F(sampled_state, t);
    sampled_nl = Eigen::Map<const Vector>(values.data(), values.size());
    if (rm.centered) sampled_nl -= rm.centered->mean_nl_samples;
  } else {
    Vector lifted = rm.V * xr;
    if (rm.centered) lifted += rm.centered->mean_state;
    const Matrix dense = rm.F(vec_inv(lifted, rm.n1, rm.n2), t);
    const Vector dense_vec = Eigen::Map<const Vector>(dense.data(), dense.size());
    sampled_nl = sample_vector(dense_vec, rm.sample_flat);
    if (rm.centered) sampled_nl -= rm.centered->mean_nl_samples;
  }
  return linear + rm.NL * sampled_nl;
}

std::vector<Matrix> rk4_matrix(const ReducedTeimModel& rm, long steps) {
  std::vector<Matrix> traj;
  traj.reserve(static_cast<std::size_t>(steps));
  Matrix X = rm.X0r;
  const double dt = rm.dt;
  double t = 0.0;
  for (long s = 0; s < steps; ++s) {
    const Matrix k1 = rhs_reduced_teim(rm, X, t);
    const Matrix k2 = rhs_reduced_teim(rm, X + 0.5 * dt * k1, t + 0.5 * dt);
    const Matrix k3 = rhs_reduced_teim(rm, X + 0.5 * dt * k2, t + 0.5 * dt);
    const Matrix k4 = rhs_reduced_teim(rm, X + dt * k3, t + dt);
    X += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    t += dt;
    check_finite(X, s);
    traj.push_back(X);
  }
  return traj;
}

std::vector<Vector> rk4_vector(const ReducedVectorModel& rm, long steps) {
  std::vector<Vector> traj;
  traj.reserve(static_cast<std::size_t>(steps));
  Vector x = rm.x0r;
  const double dt = rm.dt;
  double t = 0.0;
  for (long s = 0; s < steps; ++s) {
    const Vector k1 = rhs_reduced_vector(rm, x, t);
    const Vector k2 = rhs_reduced_vector(rm, x + 0.5 * dt * k1, t + 0.5 * dt);
    const Vector k3 = rhs_reduced_vector(rm, x + 0.5 * dt * k2, t + 0.5 * dt);
    const Vector k4 = rhs_reduced_vector(rm, x + dt * k3, t + dt);
    x += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    t += dt;
    check_finite(x, s);
    traj.push_back(x);
  }
  return traj;
}

std::vector<Matrix> simulate_fom(const SemiLinearMatrixModel& model, long steps) {
  model.validate();
  const auto rhs = [&](const Matrix& X, double t) -> Matrix {
    return model.A * X + X * model.B + model.F(X, t);
  };
  std::vector<Matrix> traj;
  traj.reserve(static_cast<std::size_t>(steps));
  Matrix X = model.X0;
  const double dt = model.dt;
  double t = 0.0;
  for (long s = 0; s < steps; ++s) {
    const Matrix k1 = rhs(X, t);
    const Matrix k2 = rhs(X + 0.5 * dt * k1, t + 0.5 * dt);
    const Matrix k3 = rhs(X + 0.5 * dt * k2, t + 0.5 * dt);
    const Matrix k4 = rhs(X + dt * k3, t + dt);
    X += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    t += dt;
    check_finite(X, s);
    traj.push_back(X);
  }
  return traj;
}

double lift_and_error(const std::vector<Matrix>& reduced, const ReducedTeimModel& rm,
                      const std::vector<Matrix>& fom) {
  if (reduced.size() != fom.size()) {
    throw DimensionError("lift_and_error: trajectory lengths differ");
  }
  std::vector<Matrix> lifted;
  lifted.reserve(reduced.size());
  for (const Matrix& Xr : reduced) {
    Matrix X = rm.V1 * Xr * rm.V2.transpose();
    if (rm.centered) X += rm.centered->mean_state;
    lifted.push_back(std::move(X));
  }
  return relative_average_error(fom, lifted);
}

double lift_and_error(const std::vector<Vector>& reduced, const ReducedVectorModel& rm,
                      const std::vector<Matrix>& fom) {
  if (reduced.size() != fom.size()) {
    throw DimensionError("lift_and_error: trajectory lengths differ");
  }
  std::vector<Matrix> lifted;
  lifted.reserve(reduced.size());
  for (const Vector& xr : reduced) {
    Vector x = rm.V * xr;
    if (rm.centered) x += rm.centered->mean_state;
    lifted.push_back(vec_inv(x, rm.n1, rm.n2));
  }
  return relative_average_error(fom, lifted);
}

}  // namespace teim
