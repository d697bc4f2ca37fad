#pragma once

// ============================================================================
// Matrix-valued function approximation. The efficient two-sided formula
// evaluates  A~ = [U1 (P1^T U1)^-1] (P1^T A P2) [U2 (P2^T U2)^-1]^T  with both
// side factors precomputed offline; the dense Khatri-Rao form is kept as a
// reference path. Vectorized DEIM and the two orthogonal-projection
// baselines complete the side-by-side comparison toolkit.
// ============================================================================

#include "teim/interp.hpp"
#include "teim/pod.hpp"
#include "teim/types.hpp"

#include <vector>

namespace teim {

// Precomputed two-sided TEIM approximator.
struct TeimApproximator {
  Matrix left;   // n1 x m1 = U1 (P1^T U1)^-1
  Matrix right;  // n2 x m2 = U2 (P2^T U2)^-1
  InterpGrid grid;

  Index n1() const { return left.rows(); }
  Index n2() const { return right.rows(); }
  Index m1() const { return left.cols(); }
  Index m2() const { return right.cols(); }
};

// Precomputed vectorized-DEIM approximator.
struct DeimApproximator {
  Matrix projector;  // (n1*n2) x m = Phi (P^T Phi)^-1
  SelectionOperator indices;

  Index m() const { return projector.cols(); }
};

// Build the two-sided approximator from a factor basis and a grid
// (normally the grid produced by two_d_deim on the same basis).
TeimApproximator build_teim(const FactorBasis& basis, const InterpGrid& grid);

// Two-sided approximation of A. The multiplication order (left-first vs
// right-first) is chosen by min(m1, m2) to minimize the dominant cost term.
Matrix approximate(const TeimApproximator& appr, const Matrix& A);

// Same result with the association order forced; used by timing comparisons.
Matrix approximate_with_direction(const TeimApproximator& appr, const Matrix& A,
                                  bool left_first);

// Literal dense Khatri-Rao reference path (test/reference only): lifts the
// masked values through the inverse of the Khatri-Rao interpolation matrix
// and reshapes back to n1 x n2.
Matrix approximate_khatri_rao_reference(const FactorBasis& basis, const MaskPairs& pairs,
                                        const Matrix& A);

// Standard POD + DEIM on vectorized snapshots: Phi = leading m left singular
// vectors of S, indices = deim(Phi), projector = Phi (P^T Phi)^-1.
DeimApproximator build_deim_vectorized(const Matrix& S, Index m);

// Same construction from an explicit basis (columns assumed independent).
DeimApproximator build_deim_from_basis(const Matrix& Phi);

// Evaluate a DEIM approximator on a full vector: projector * f[indices].
Vector approximate_deim(const DeimApproximator& appr, const Vector& f);

// Orthogonal projection onto the factor-basis span: U1 U1^T A U2 U2^T.
Matrix orth_project_tensor(const FactorBasis& basis, const Matrix& A);

// Orthogonal projection onto a POD basis: V V^T f.
Vector orth_project_pod(const PodBasis& basis, const Vector& f);

// xi = (1/n) * sum_i ||truth_i - approx_i||_F / ||truth_i||_F.
double relative_average_error(const std::vector<Matrix>& truth,
                              const std::vector<Matrix>& approx);

// Median online cost per approximation call, in nanoseconds. For the
// two-sided approximator both association orders are timed; ns_per_eval is
// the automatically chosen direction.
struct OnlineTiming {
  double ns_per_eval = 0.0;
  double ns_left_first = 0.0;
  double ns_right_first = 0.0;
};

OnlineTiming time_online(const TeimApproximator& appr, const std::vector<Matrix>& stream,
                         int repetitions);
OnlineTiming time_online(const DeimApproximator& appr, const std::vector<Vector>& stream,
                         int repetitions);

}  // namespace teim
