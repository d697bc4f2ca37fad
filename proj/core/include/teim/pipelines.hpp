#pragma once

// ============================================================================
// End-to-end experiment pipelines shared by the CLI and the acceptance
// suite: error sweeps over the two analytic examples, and the Allen-Cahn
// reduction runs in matrix and vector form. Everything here is
// deterministic; sweep configurations fan out across the worker pool and
// results are emitted in configuration order.
// ============================================================================

#include "teim/generators.hpp"
#include "teim/io.hpp"
#include "teim/mor.hpp"

#include <vector>

namespace teim {

// One sweep configuration: factor ranks (m1, m2) for the tensor methods and
// the point/mode count m for the vectorized baselines (usually m1*m2).
struct SweepConfig {
  Index m1 = 0;
  Index m2 = 0;
  Index m = 0;
};

// Per-configuration errors for the four methods.
struct SweepResult {
  SweepConfig config;
  double xi_teim = 0.0;
  double xi_deim = 0.0;
  double xi_proj_tensor = 0.0;
  double xi_proj_pod = 0.0;
};

// Run the error sweep for Example 1 / Example 2 over the given
// configurations: train bases on the training tensor, evaluate xi on the
// test set for TEIM, vectorized DEIM, and the two projection baselines.
std::vector<SweepResult> run_example1_sweep(const Example1Config& config,
                                            const std::vector<SweepConfig>& sweeps);
std::vector<SweepResult> run_example2_sweep(const Example2Config& config,
                                            const std::vector<SweepConfig>& sweeps);

// Convert sweep results to report rows (wall_ns_per_eval = 0).
RunReport sweep_report(const std::string& experiment, const std::vector<SweepResult>& results);

// Allen-Cahn snapshot bundle: one FOM integration plus the simultaneously
// collected state and nonlinearity snapshot tensors.
struct AllenCahnData {
  SemiLinearMatrixModel model;
  std::vector<Matrix> fom;  // post-step states
  Tensor3 states;
  Tensor3 nonlinearity;
};

AllenCahnData simulate_allen_cahn(Index n = 30);

// Matrix-form TEIM reduction of a prepared Allen-Cahn bundle; returns xi of
// the lifted reduced trajectory against the FOM snapshots.
double allen_cahn_teim_matrix(const AllenCahnData& data, Index k1, Index k2, Index m1, Index m2,
                              bool centered);

// Vector-form TEIM reduction (flat POD state basis of size k, tensor grid
// on the nonlinearity with ranks m1, m2).
double allen_cahn_teim_vector(const AllenCahnData& data, Index k, Index m1, Index m2,
                              bool centered);

// Vectorized POD-DEIM reduction (flat POD of size k, DEIM with m points).
double allen_cahn_pod_deim(const AllenCahnData& data, Index k, Index m, bool centered);

}  // namespace teim
