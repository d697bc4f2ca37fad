#include "teim/pipelines.hpp"

#include "teim/linalg.hpp"
#include "teim/parallel.hpp"

#include <Eigen/SVD>

#include <utility>

namespace teim {

namespace {

// Shared sweep driver: given the training tensor and the list of test
// slices, evaluate all four methods for every configuration. The mode and
// snapshot SVDs are computed once at full width and truncated per config.
std::vector<SweepResult> run_sweep(const Tensor3& train, const std::vector<Matrix>& test,
                                   const std::vector<SweepConfig>& sweeps) {
  const Index n1 = train.n1();
  const Index n2 = train.n2();

  // Full-width factor and POD spectra, truncated per configuration below.
  Matrix mode_u[2];
  Vector mode_sigma[2];
  Matrix pod_u;
  Vector pod_sigma;
  parallel_for(3, [&](std::size_t task) {
    if (task < 2) {
      Eigen::BDCSVD<Matrix> svd(unfold(train, static_cast<int>(task) + 1), Eigen::ComputeThinU);
      mode_u[task] = svd.matrixU();
      mode_sigma[task] = svd.singularValues();
      fix_signs(mode_u[task]);
    } else {
      const Eigen::Map<const Matrix> S(train.data().data(), n1 * n2, train.N());
      Eigen::BDCSVD<Matrix> svd(S, Eigen::ComputeThinU);
      pod_u = svd.matrixU();
      pod_sigma = svd.singularValues();
      fix_signs(pod_u);
    }
  });

  const auto check_rank = [](const Vector& sigma, Index requested, const char* what) {
    if (requested > sigma.size() || sigma(requested - 1) < 1e-12 * sigma(0)) {
      throw RankDeficiencyError(std::string(what) + ": requested rank " +
                                std::to_string(requested) + " exceeds numerical rank");
    }
  };

  std::vector<SweepResult> results(sweeps.size());
  parallel_for(sweeps.size(), [&](std::size_t c) {
    const SweepConfig& cfg = sweeps[c];
    check_rank(mode_sigma[0], cfg.m1, "sweep mode 1");
    check_rank(mode_sigma[1], cfg.m2, "sweep mode 2");
    check_rank(pod_sigma, cfg.m, "sweep POD");

    FactorBasis basis;
    basis.U1 = mode_u[0].leftCols(cfg.m1);
    basis.U2 = mode_u[1].leftCols(cfg.m2);
    basis.singular_values = {mode_sigma[0], mode_sigma[1], Vector()};

    const InterpGrid grid = two_d_deim(basis.U1, basis.U2);
    const TeimApproximator teim_appr = build_teim(basis, grid);

    PodBasis pod;
    pod.V = pod_u.leftCols(cfg.m);
    pod.singular_values = pod_sigma;
    const DeimApproximator deim_appr = build_deim_from_basis(pod.V);

    double sum_teim = 0.0, sum_deim = 0.0, sum_pt = 0.0, sum_pp = 0.0;
    for (const Matrix& A : test) {
      const double denom = A.norm();
      sum_teim += (A - approximate(teim_appr, A)).norm() / denom;
      sum_pt += (A - orth_project_tensor(basis, A)).norm() / denom;
      const Vector a = vec(A);
      sum_deim += (a - approximate_deim(deim_appr, a)).norm() / denom;
      sum_pp += (a - orth_project_pod(pod, a)).norm() / denom;
    }
    const double count = static_cast<double>(test.size());
    results[c] = SweepResult{cfg, sum_teim / count, sum_deim / count, sum_pt / count,
                             sum_pp / count};
  });
  return results;
}

std::vector<Matrix> tensor_slices(const Tensor3& T) {
  std::vector<Matrix> slices;
  slices.reserve(static_cast<std::size_t>(T.N()));
  for (Index k = 0; k < T.N(); ++k) {
    slices.emplace_back(T.slice(k));
  }
  return slices;
}

}  // namespace

std::vector<SweepResult> run_example1_sweep(const Example1Config& config,
                                            const std::vector<SweepConfig>& sweeps) {
  const Tensor3 train = build_snapshot_tensor(config, false);
  const Tensor3 test = build_snapshot_tensor(config, true);
  return run_sweep(train, tensor_slices(test), sweeps);
}

std::vector<SweepResult> run_example2_sweep(const Example2Config& config,
                                            const std::vector<SweepConfig>& sweeps) {
  const Tensor3 train = build_snapshot_tensor(config, false);
  const Tensor3 test = build_snapshot_tensor(config, true);
  return run_sweep(train, tensor_slices(test), sweeps);
}

RunReport sweep_report(const std::string& experiment, const std::vector<SweepResult>& results) {
  RunReport report;
  for (const SweepResult& r : results) {
    const Index m1 = r.config.m1, m2 = r.config.m2, m = r.config.m;
    report.rows.push_back({experiment, "teim", m1, m2, m1 * m2, 0, 0, 0, r.xi_teim, 0.0});
    report.rows.push_back({experiment, "deim", 0, 0, m, 0, 0, 0, r.xi_deim, 0.0});
    report.rows.push_back({experiment, "proj_tensor", m1, m2, m1 * m2, 0, 0, 0,
                           r.xi_proj_tensor, 0.0});
    report.rows.push_back({experiment, "proj_pod", 0, 0, m, 0, 0, 0, r.xi_proj_pod, 0.0});
  }
  return report;
}

AllenCahnData simulate_allen_cahn(Index n) {
  AllenCahnData data;
  data.model = build_allen_cahn(n);
  const long steps = data.model.steps();
  data.fom = simulate_fom(data.model, steps);
  data.states = Tensor3(n, n, static_cast<Index>(steps));
  data.nonlinearity = Tensor3(n, n, static_cast<Index>(steps));
  for (long s = 0; s < steps; ++s) {
    data.states.set_slice(static_cast<Index>(s), data.fom[static_cast<std::size_t>(s)]);
    data.nonlinearity.set_slice(
        static_cast<Index>(s),
        data.model.F(data.fom[static_cast<std::size_t>(s)],
                     data.model.dt * static_cast<double>(s + 1)));
  }
  return data;
}

double allen_cahn_teim_matrix(const AllenCahnData& data, Index k1, Index k2, Index m1, Index m2,
                              bool centered) {
  const long steps = data.model.steps();
  if (!centered) {
    const FactorBasis state_basis = hosvd_factors(data.states, k1, k2);
    const FactorBasis nl_basis = hosvd_factors(data.nonlinearity, m1, m2);
    const InterpGrid grid = two_d_deim(nl_basis.U1, nl_basis.U2);
    const ReducedTeimModel rm = reduce_teim_matrix(data.model, state_basis, nl_basis, grid);
    return lift_and_error(rk4_matrix(rm, steps), rm, data.fom);
  }
  const auto [states_c, state_mean] = center(data.states);
  const auto [nl_c, nl_mean] = center(data.nonlinearity);
  const FactorBasis state_basis = hosvd_factors(states_c, k1, k2);
  const FactorBasis nl_basis = hosvd_factors(nl_c, m1, m2);
  const InterpGrid grid = two_d_deim(nl_basis.U1, nl_basis.U2);
  const ReducedTeimModel rm =
      reduce_teim_matrix_centered(data.model, state_basis, nl_basis, grid, state_mean, nl_mean);
  return lift_and_error(rk4_matrix(rm, steps), rm, data.fom);
}

double allen_cahn_teim_vector(const AllenCahnData& data, Index k, Index m1, Index m2,
                              bool centered) {
  const long steps = data.model.steps();
  const Index n = data.model.n1();
  const Eigen::Map<const Matrix> S(data.states.data().data(), n * n, data.states.N());
  if (!centered) {
    const PodBasis V = standard_pod(S, k);
    const FactorBasis nl_basis = hosvd_factors(data.nonlinearity, m1, m2);
    const InterpGrid grid = two_d_deim(nl_basis.U1, nl_basis.U2);
    const ReducedVectorModel rm = reduce_teim_vector(data.model, V, nl_basis, grid);
    return lift_and_error(rk4_vector(rm, steps), rm, data.fom);
  }
  const auto [states_c, state_mean] = center(data.states);
  const auto [nl_c, nl_mean] = center(data.nonlinearity);
  const Eigen::Map<const Matrix> Sc(states_c.data().data(), n * n, states_c.N());
  const PodBasis V = standard_pod(Sc, k);
  const FactorBasis nl_basis = hosvd_factors(nl_c, m1, m2);
  const InterpGrid grid = two_d_deim(nl_basis.U1, nl_basis.U2);
  const ReducedVectorModel rm =
      reduce_teim_vector_centered(data.model, V, nl_basis, grid, state_mean, nl_mean);
  return lift_and_error(rk4_vector(rm, steps), rm, data.fom);
}

double allen_cahn_pod_deim(const AllenCahnData& data, Index k, Index m, bool centered) {
  const long steps = data.model.steps();
  const Index n = data.model.n1();
  const Eigen::Map<const Matrix> S(data.states.data().data(), n * n, data.states.N());
  const Eigen::Map<const Matrix> SN(data.nonlinearity.data().data(), n * n,
                                    data.nonlinearity.N());
  if (!centered) {
    const PodBasis V = standard_pod(S, k);
    const DeimApproximator deim_appr = build_deim_vectorized(SN, m);
    const ReducedVectorModel rm = reduce_pod_deim(data.model, V, deim_appr);
    return lift_and_error(rk4_vector(rm, steps), rm, data.fom);
  }
  const auto [states_c, state_mean] = center(data.states);
  const auto [nl_c, nl_mean] = center(data.nonlinearity);
  const Eigen::Map<const Matrix> Sc(states_c.data().data(), n * n, states_c.N());
  const Eigen::Map<const Matrix> SNc(nl_c.data().data(), n * n, nl_c.N());
  const PodBasis V = standard_pod(Sc, k);
  const DeimApproximator deim_appr = build_deim_vectorized(SNc, m);
  const ReducedVectorModel rm =
      reduce_pod_deim_centered(data.model, V, deim_appr, state_mean, nl_mean);
  return lift_and_error(rk4_vector(rm, steps), rm, data.fom);
}

}  // namespace teim
