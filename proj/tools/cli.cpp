#include "cli.hpp"

#include "teim/approx.hpp"
#include "teim/interp.hpp"
#include "teim/io.hpp"
#include "teim/linalg.hpp"
#include "teim/pipelines.hpp"
#include "teim/pod.hpp"
#include "teim/random.hpp"

#include "CLI11.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace teim {

namespace {

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot open '" + path + "' for writing");
  }
  out << text << "\n";
  if (!out) {
    throw IoError("write to '" + path + "' failed");
  }
}

void emit_report(const RunReport& report, const std::string& out_path) {
  if (out_path.empty()) {
    write_report(std::cout, report);
  } else {
    write_report_file(out_path, report);
  }
}

// --- snapshots ---------------------------------------------------------------

void cmd_snapshots(const std::string& experiment, const std::string& out_path, bool test_set,
                   const std::string& nl_out_path) {
  if (experiment == "ex1") {
    write_tensor_file(out_path, build_snapshot_tensor(Example1Config{}, test_set));
  } else if (experiment == "ex2") {
    write_tensor_file(out_path, build_snapshot_tensor(Example2Config{}, test_set));
  } else {  // allen-cahn
    const AllenCahnData data = simulate_allen_cahn();
    write_tensor_file(out_path, data.states);
    if (!nl_out_path.empty()) {
      write_tensor_file(nl_out_path, data.nonlinearity);
    }
  }
}

// --- basis -------------------------------------------------------------------

void cmd_basis(const std::string& in_path, const std::string& out_path, bool use_pod, Index m1,
               Index m2, Index k, bool centered) {
  Tensor3 T = read_tensor_file(in_path);
  std::optional<Matrix> mean_slice;
  if (centered) {
    auto [centered_tensor, mean] = center(T);
    T = std::move(centered_tensor);
    mean_slice = std::move(mean);
  }
  if (use_pod) {
    if (k <= 0) {
      throw DimensionError("basis: --pod requires --k > 0");
    }
    const Eigen::Map<const Matrix> S(T.data().data(), T.n1() * T.n2(), T.N());
    std::optional<Vector> mean_vec;
    if (mean_slice) {
      mean_vec = vec(*mean_slice);
    }
    write_pod_basis(out_path, standard_pod(S, k), mean_vec);
  } else {
    if (m1 <= 0 || m2 <= 0) {
      throw DimensionError("basis: factor mode requires --m1 > 0 and --m2 > 0");
    }
    write_factor_basis(out_path, hosvd_factors(T, m1, m2), mean_slice);
  }
}

// --- points ------------------------------------------------------------------

void cmd_points(const std::string& basis_path, const std::string& method,
                const std::string& out_path) {
  if (method == "deim") {
    const PodBasis basis = read_pod_basis(basis_path).first;
    write_text_file(out_path, deim_to_json(deim(basis.V).indices));
  } else {
    const FactorBasis basis = read_factor_basis(basis_path).first;
    if (method == "teim") {
      write_text_file(out_path, trace_to_json(teim(basis.U1, basis.U2)));
    } else {  // 2ddeim
      write_text_file(out_path, grid_to_json(two_d_deim(basis.U1, basis.U2)));
    }
  }
}

// --- approx ------------------------------------------------------------------

void cmd_approx(const std::string& experiment, Index m1, Index m2, Index m,
                const std::string& out_path) {
  if (m <= 0) {
    m = m1 * m2;
  }
  const std::vector<SweepConfig> sweeps = {{m1, m2, m}};
  const std::vector<SweepResult> results = (experiment == "ex1")
                                               ? run_example1_sweep(Example1Config{}, sweeps)
                                               : run_example2_sweep(Example2Config{}, sweeps);
  emit_report(sweep_report(experiment, results), out_path);
}

// --- mor ---------------------------------------------------------------------

void cmd_mor(Index k1, Index k2, Index m1, Index m2, bool vector_form, Index k, Index m,
             bool centered, const std::string& out_path) {
  const AllenCahnData data = simulate_allen_cahn();
  RunReport report;
  if (vector_form) {
    if (k <= 0) {
      throw DimensionError("mor: --vector requires --k > 0");
    }
    const double xi = allen_cahn_teim_vector(data, k, m1, m2, centered);
    report.rows.push_back({"allen-cahn", "teim", m1, m2, m1 * m2, 0, 0, k, xi, 0.0});
    if (m > 0) {
      const double xi_deim = allen_cahn_pod_deim(data, k, m, centered);
      report.rows.push_back({"allen-cahn", "deim", 0, 0, m, 0, 0, k, xi_deim, 0.0});
    }
  } else {
    if (k1 <= 0 || k2 <= 0) {
      throw DimensionError("mor: matrix form requires --k1 > 0 and --k2 > 0");
    }
    const double xi = allen_cahn_teim_matrix(data, k1, k2, m1, m2, centered);
    report.rows.push_back({"allen-cahn", "teim", m1, m2, m1 * m2, k1, k2, 0, xi, 0.0});
  }
  emit_report(report, out_path);
}

// --- bench -------------------------------------------------------------------

void cmd_bench(Index n, Index m1, Index m2, int reps, std::uint64_t seed,
               const std::string& out_path) {
  Rng rng(seed);
  const Matrix U1 = random_orthonormal(n, m1, rng);
  const Matrix U2 = random_orthonormal(n, m2, rng);

  FactorBasis basis;
  basis.U1 = U1;
  basis.U2 = U2;
  const TeimApproximator teim_appr = build_teim(basis, two_d_deim(U1, U2));

  const Matrix pod = random_orthonormal(n * n, m1 * m2, rng);
  const DeimApproximator deim_appr = build_deim_from_basis(pod);

  constexpr int kStreamLength = 16;
  std::vector<Matrix> stream;
  std::vector<Vector> vec_stream;
  stream.reserve(kStreamLength);
  vec_stream.reserve(kStreamLength);
  for (int i = 0; i < kStreamLength; ++i) {
    stream.push_back(random_gaussian(n, n, rng));
    vec_stream.push_back(vec(stream.back()));
  }

  const OnlineTiming teim_time = time_online(teim_appr, stream, reps);
  const OnlineTiming deim_time = time_online(deim_appr, vec_stream, reps);

  RunReport report;
  report.rows.push_back({"bench", "teim", m1, m2, m1 * m2, 0, 0, 0, 0.0, teim_time.ns_per_eval});
  report.rows.push_back({"bench", "deim", 0, 0, m1 * m2, 0, 0, 0, 0.0, deim_time.ns_per_eval});
  emit_report(report, out_path);
}

// --- verify ------------------------------------------------------------------

int cmd_verify(int seeds, std::uint64_t seed) {
  int equiv_pass = 0;
  int rect_pass = 0;
  for (int s = 0; s < seeds; ++s) {
    Rng rng(seed + static_cast<std::uint64_t>(s));
    const Index m1 = 2 + (s % 4);
    const Index m2 = 2 + ((s / 4) % 4);
    const Matrix U1 = random_orthonormal(30, m1, rng);
    const Matrix U2 = random_orthonormal(25, m2, rng);

    const TeimTrace trace = teim(U1, U2);
    bool rectangular = true;
    InterpGrid grid;
    try {
      grid = grid_of(trace);  // throws unless the pairs form a full grid
    } catch (const TeimError&) {
      rectangular = false;
    }
    if (rectangular) {
      ++rect_pass;
      const InterpGrid reference = two_d_deim(U1, U2);
      if (grid.rows.indices == reference.rows.indices &&
          grid.cols.indices == reference.cols.indices) {
        ++equiv_pass;
      }
    }
  }

  constexpr int kDualInstances = 50;
  int dual_pass = 0;
  double dual_worst = 0.0;
  for (int s = 0; s < kDualInstances; ++s) {
    Rng rng(seed + 1000 + static_cast<std::uint64_t>(s));
    const Matrix U1 = random_orthonormal(40, 4, rng);
    const Matrix U2 = random_orthonormal(40, 4, rng);
    FactorBasis basis;
    basis.U1 = U1;
    basis.U2 = U2;
    const InterpGrid grid = two_d_deim(U1, U2);
    const TeimApproximator appr = build_teim(basis, grid);
    const Matrix A = random_gaussian(40, 40, rng);

    const Matrix fast = approximate(appr, A);
    const Matrix reference = approximate_khatri_rao_reference(basis, grid.cartesian_pairs(), A);
    const double delta = (fast - reference).cwiseAbs().maxCoeff();
    dual_worst = std::max(dual_worst, delta);
    if (delta <= 1e-10) {
      ++dual_pass;
    }
  }

  const bool ok = rect_pass == seeds && equiv_pass == seeds && dual_pass == kDualInstances;
  std::cout << "rectangularity  " << (rect_pass == seeds ? "PASS" : "FAIL") << "  (" << rect_pass
            << "/" << seeds << " seeds)\n";
  std::cout << "equivalence     " << (equiv_pass == seeds ? "PASS" : "FAIL") << "  (" << equiv_pass
            << "/" << seeds << " seeds)\n";
  std::cout << "dual-path       " << (dual_pass == kDualInstances ? "PASS" : "FAIL") << "  ("
            << dual_pass << "/" << kDualInstances << " instances, worst |delta| = " << dual_worst
            << ")\n";
  return ok ? 0 : 2;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"TEIM model-order-reduction experiments"};
  app.require_subcommand(1);

  // snapshots
  auto* snap = app.add_subcommand("snapshots", "Generate snapshot tensors");
  std::string snap_experiment;
  std::string snap_out;
  std::string snap_nl_out;
  bool snap_test = false;
  snap->add_option("--experiment", snap_experiment, "Data set: ex1, ex2, or allen-cahn")
      ->required()
      ->check(CLI::IsMember({"ex1", "ex2", "allen-cahn"}));
  snap->add_option("--out", snap_out, "Output tensor file")->required();
  snap->add_flag("--test", snap_test, "Emit the test set instead of the training set (ex1/ex2)");
  snap->add_option("--nl-out", snap_nl_out,
                   "Also write the nonlinearity snapshot tensor (allen-cahn)");

  // basis
  auto* bas = app.add_subcommand("basis", "Build a factor or POD basis from a tensor file");
  std::string bas_in, bas_out;
  bool bas_pod = false, bas_center = false;
  Index bas_m1 = 0, bas_m2 = 0, bas_k = 0;
  bas->add_option("--in", bas_in, "Input tensor file")->required();
  bas->add_option("--out", bas_out, "Output basis file")->required();
  bas->add_option("--m1", bas_m1, "Mode-1 rank");
  bas->add_option("--m2", bas_m2, "Mode-2 rank");
  bas->add_flag("--pod", bas_pod, "Standard POD on vectorized snapshots");
  bas->add_option("--k", bas_k, "POD basis size (with --pod)");
  bas->add_flag("--center", bas_center, "Subtract the snapshot mean first and store it");

  // points
  auto* pts = app.add_subcommand("points", "Select interpolation points from a basis file");
  std::string pts_basis, pts_method, pts_out;
  pts->add_option("--basis", pts_basis, "Input basis file")->required();
  pts->add_option("--method", pts_method, "Selection method: teim, 2ddeim, or deim")
      ->required()
      ->check(CLI::IsMember({"teim", "2ddeim", "deim"}));
  pts->add_option("--out", pts_out, "Output structured-text file")->required();

  // approx
  auto* apx = app.add_subcommand("approx", "Run an approximation error sweep");
  std::string apx_experiment, apx_out;
  Index apx_m1 = 0, apx_m2 = 0, apx_m = 0;
  apx->add_option("--experiment", apx_experiment, "Data set: ex1 or ex2")
      ->required()
      ->check(CLI::IsMember({"ex1", "ex2"}));
  apx->add_option("--m1", apx_m1, "Mode-1 rank")->required()->check(CLI::PositiveNumber);
  apx->add_option("--m2", apx_m2, "Mode-2 rank")->required()->check(CLI::PositiveNumber);
  apx->add_option("--m", apx_m, "Point count for the vectorized baselines (default m1*m2)");
  apx->add_option("--out", apx_out, "Write the CSV report here instead of stdout");

  // mor
  auto* mor = app.add_subcommand("mor", "Run a reduced-order Allen-Cahn simulation");
  std::string mor_experiment = "allen-cahn", mor_out;
  Index mor_k1 = 0, mor_k2 = 0, mor_m1 = 0, mor_m2 = 0, mor_k = 0, mor_m = 0;
  bool mor_vector = false, mor_center = false;
  mor->add_option("--experiment", mor_experiment, "Model (allen-cahn)")
      ->check(CLI::IsMember({"allen-cahn"}));
  mor->add_option("--k1", mor_k1, "State mode-1 rank (matrix form)");
  mor->add_option("--k2", mor_k2, "State mode-2 rank (matrix form)");
  mor->add_option("--m1", mor_m1, "Nonlinearity mode-1 rank")
      ->required()
      ->check(CLI::PositiveNumber);
  mor->add_option("--m2", mor_m2, "Nonlinearity mode-2 rank")
      ->required()
      ->check(CLI::PositiveNumber);
  mor->add_flag("--vector", mor_vector, "Vectorized form with a flat POD state basis");
  mor->add_option("--k", mor_k, "Flat POD state size (with --vector)");
  mor->add_option("--m", mor_m, "Also run classic POD-DEIM with m points (with --vector)");
  mor->add_flag("--center", mor_center, "Mean-center snapshots (affine lift)");
  mor->add_option("--out", mor_out, "Write the CSV report here instead of stdout");

  // bench
  auto* ben = app.add_subcommand("bench", "Time the online approximation paths");
  Index ben_n = 0, ben_m1 = 0, ben_m2 = 0;
  int ben_reps = 0;
  std::uint64_t ben_seed = 0;
  std::string ben_out;
  ben->add_option("--n", ben_n, "Ambient dimension (n x n matrices)")
      ->required()
      ->check(CLI::PositiveNumber);
  ben->add_option("--m1", ben_m1, "Mode-1 rank")->required()->check(CLI::PositiveNumber);
  ben->add_option("--m2", ben_m2, "Mode-2 rank")->required()->check(CLI::PositiveNumber);
  ben->add_option("--reps", ben_reps, "Timing repetitions")
      ->required()
      ->check(CLI::PositiveNumber);
  ben->add_option("--seed", ben_seed, "Seed for the synthetic bases");
  ben->add_option("--out", ben_out, "Write the CSV report here instead of stdout");

  // verify
  auto* ver = app.add_subcommand("verify", "Run the selection property suites");
  int ver_seeds = 100;
  std::uint64_t ver_seed = 0;
  ver->add_option("--seeds", ver_seeds, "Number of random bases per suite")
      ->check(CLI::PositiveNumber);
  ver->add_option("--seed", ver_seed, "Base seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (snap->parsed()) {
      cmd_snapshots(snap_experiment, snap_out, snap_test, snap_nl_out);
    } else if (bas->parsed()) {
      cmd_basis(bas_in, bas_out, bas_pod, bas_m1, bas_m2, bas_k, bas_center);
    } else if (pts->parsed()) {
      cmd_points(pts_basis, pts_method, pts_out);
    } else if (apx->parsed()) {
      cmd_approx(apx_experiment, apx_m1, apx_m2, apx_m, apx_out);
    } else if (mor->parsed()) {
      cmd_mor(mor_k1, mor_k2, mor_m1, mor_m2, mor_vector, mor_k, mor_m, mor_center, mor_out);
    } else if (ben->parsed()) {
      cmd_bench(ben_n, ben_m1, ben_m2, ben_reps, ben_seed, ben_out);
    } else if (ver->parsed()) {
      return cmd_verify(ver_seeds, ver_seed);
    }
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const DimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const TeimError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace teim
