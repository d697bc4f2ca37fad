#pragma once

// ============================================================================
// Galerkin reduction of semi-linear matrix differential equations
//   X' = A X + X B + F(X, t)
// in two shapes: the matrix form (factor bases V1, V2 with a two-sided
// interpolation of the nonlinearity) and the vectorized form (a flat POD
// basis with either the tensor grid or classic DEIM sampling). Both come
// with fixed-step classical RK4 integrators and an affine-lift (centered)
// variant. When the nonlinearity is entrywise, the reduced right-hand sides
// never touch an n1 x n2 object.
// ============================================================================

#include "teim/approx.hpp"
#include "teim/pod.hpp"
#include "teim/types.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace teim {

// Full-order model X' = A X + X B + F(X, t), X(0) = X0.
struct SemiLinearMatrixModel {
  Matrix A;  // n1 x n1
  Matrix B;  // n2 x n2
  // Nonlinearity handle. When `entrywise` is set, F(X, t)(i, j) depends only
  // on X(i, j) and t, so F may be called on matrices of any shape holding
  // sampled entries.
  std::function<Matrix(const Matrix&, double)> F;
  bool entrywise = false;
  Matrix X0;  // n1 x n2
  double t_final = 0.0;
  double dt = 0.0;

  Index n1() const { return A.rows(); }
  Index n2() const { return B.rows(); }
  long steps() const { return static_cast<long>(t_final / dt + 0.5); }

  void validate() const {
    if (dt <= 0.0 || t_final < dt) {
      throw DimensionError("SemiLinearMatrixModel: need dt > 0 and t_final >= dt");
    }
    if (A.rows() != A.cols() || B.rows() != B.cols() || X0.rows() != A.rows() ||
        X0.cols() != B.rows()) {
      throw DimensionError("SemiLinearMatrixModel: inconsistent shapes");
    }
  }
};

// Optional affine-lift data for mean-centered reductions.
struct CenteredTermsMatrix {
  Matrix mean_state;     // n1 x n2 snapshot mean, re-added on lift
  Matrix const_forcing;  // k1 x k2 projected constant (linear part + mean nonlinearity)
  Matrix mean_grid;      // m1 x m2 mean state sampled on the grid
  Matrix mean_nl_grid;   // m1 x m2 mean nonlinearity sampled on the grid
};

// Matrix-form reduced model.
struct ReducedTeimModel {
  Matrix Ar;            // k1 x k1
  Matrix Br;            // k2 x k2
  Matrix NL_left;       // k1 x m1
  Matrix NL_right;      // m2 x k2
  Matrix sample_left;   // m1 x k1
  Matrix sample_right;  // k2 x m2
  InterpGrid grid;
  Matrix X0r;  // k1 x k2

  // Bases kept for lifting and for the dense nonlinearity fallback.
  Matrix V1;  // n1 x k1
  Matrix V2;  // n2 x k2
  TeimApproximator nl_approximator;

  std::function<Matrix(const Matrix&, double)> F;
  bool entrywise = false;
  double dt = 0.0;
  std::optional<CenteredTermsMatrix> centered;
};

// Optional affine-lift data for the vectorized forms.
struct CenteredTermsVector {
  Vector mean_state;      // n1*n2 snapshot mean (vectorized), re-added on lift
  Vector const_forcing;   // k
  Vector mean_samples;    // mean state at the sample locations
  Vector mean_nl_samples; // mean nonlinearity at the sample locations
};

// Vectorized reduced model (TEIM-grid or DEIM sampling).
struct ReducedVectorModel {
  Matrix Ar;  // k x k
  Matrix NL;  // k x (number of samples)
  std::vector<Index> sample_flat;  // flat indices into vec(X)
  Matrix Vs;                       // sample rows of V: (samples) x k
  Vector x0r;                      // k

  Matrix V;  // n1*n2 x k, kept for lifting and the dense fallback
  Index n1 = 0;
  Index n2 = 0;

  std::function<Matrix(const Matrix&, double)> F;
  bool entrywise = false;
  double dt = 0.0;
  std::optional<CenteredTermsVector> centered;
};

// --- Reduction -------------------------------------------------------------

// Matrix-form Galerkin reduction. state_basis supplies V1 (n1 x k1) and V2
// (n2 x k2); nl_basis supplies the nonlinearity factor basis (m1, m2) whose
// grid must come from two_d_deim(nl_basis).
ReducedTeimModel reduce_teim_matrix(const SemiLinearMatrixModel& model,
                                    const FactorBasis& state_basis, const FactorBasis& nl_basis,
                                    const InterpGrid& grid);

// Centered variant: bases are built from mean-subtracted snapshots by the
// caller; mean_state/mean_nl are the subtracted means.
ReducedTeimModel reduce_teim_matrix_centered(const SemiLinearMatrixModel& model,
                                             const FactorBasis& state_basis,
                                             const FactorBasis& nl_basis, const InterpGrid& grid,
                                             const Matrix& mean_state, const Matrix& mean_nl);

// Vectorized Galerkin reduction with the tensor nonlinearity grid.
ReducedVectorModel reduce_teim_vector(const SemiLinearMatrixModel& model, const PodBasis& V,
                                      const FactorBasis& nl_basis, const InterpGrid& grid);

ReducedVectorModel reduce_teim_vector_centered(const SemiLinearMatrixModel& model,
                                               const PodBasis& V, const FactorBasis& nl_basis,
                                               const InterpGrid& grid, const Matrix& mean_state,
                                               const Matrix& mean_nl);

// Vectorized Galerkin reduction with classic DEIM sampling.
ReducedVectorModel reduce_pod_deim(const SemiLinearMatrixModel& model, const PodBasis& V,
                                   const DeimApproximator& deim_appr);

ReducedVectorModel reduce_pod_deim_centered(const SemiLinearMatrixModel& model, const PodBasis& V,
                                            const DeimApproximator& deim_appr,
                                            const Matrix& mean_state, const Matrix& mean_nl);

// --- Right-hand sides --------------------------------------------------------

Matrix rhs_reduced_teim(const ReducedTeimModel& rm, const Matrix& Xr, double t);
Vector rhs_reduced_vector(const ReducedVectorModel& rm, const Vector& xr, double t);

// --- Integration -------------------------------------------------------------

// Classical fixed-step RK4. Trajectories hold the post-step states only
// (the initial condition is not included), matching the snapshot policy.
std::vector<Matrix> rk4_matrix(const ReducedTeimModel& rm, long steps);
std::vector<Vector> rk4_vector(const ReducedVectorModel& rm, long steps);

// Full-order reference integration of the model itself.
std::vector<Matrix> simulate_fom(const SemiLinearMatrixModel& model, long steps);

// --- Error ------------------------------------------------------------------

// Lift a reduced trajectory and compute xi against the FOM snapshots.
double lift_and_error(const std::vector<Matrix>& reduced, const ReducedTeimModel& rm,
                      const std::vector<Matrix>& fom);
double lift_and_error(const std::vector<Vector>& reduced, const ReducedVectorModel& rm,
                      const std::vector<Matrix>& fom);

}  // namespace teim
