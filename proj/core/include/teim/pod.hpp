#pragma once

// ============================================================================
// Basis construction: truncated HOSVD factor matrices for order-3 tensors
// (tensor POD, no truncation in the third mode) and standard snapshot POD.
// All SVDs are economy-size on the mode unfoldings; Gram matrices are never
// formed. Singular-vector signs are fixed so results are deterministic.
// ============================================================================

#include "teim/tensor.hpp"
#include "teim/types.hpp"

#include <vector>

namespace teim {

// Orthonormal factor matrices of a truncated HOSVD: U1 spans the leading
// mode-1 subspace, U2 the leading mode-2 subspace; the third (snapshot)
// mode is kept untruncated. Full per-mode singular-value lists are retained
// for diagnostics and rank checks.
struct FactorBasis {
  Matrix U1;  // n1 x m1
  Matrix U2;  // n2 x m2
  bool mode3_kept = true;
  std::vector<Vector> singular_values;  // per mode: [mode1, mode2, mode3]

  Index n1() const { return U1.rows(); }
  Index n2() const { return U2.rows(); }
  Index m1() const { return U1.cols(); }
  Index m2() const { return U2.cols(); }
};

// Standard POD basis: leading left singular vectors of a snapshot matrix.
struct PodBasis {
  Matrix V;  // n x k
  Vector singular_values;

  Index n() const { return V.rows(); }
  Index k() const { return V.cols(); }
};

// Leading m1/m2 left singular vectors of the mode-1/mode-2 unfoldings.
// Throws RankDeficiencyError if a requested mode rank exceeds the numerical
// rank (singular value below 1e-12 * sigma_max). The two mode SVDs (and the
// mode-3 spectrum) run concurrently; results are scheduling-independent.
FactorBasis hosvd_factors(const Tensor3& T, Index m1, Index m2);

// Leading k left singular vectors of the snapshot matrix S (columns are
// vectorized snapshots). Same rank guard as hosvd_factors.
PodBasis standard_pod(const Matrix& S, Index k);

// Subtract the mean slice: returns (T - mean broadcast, mean slice).
std::pair<Tensor3, Matrix> center(const Tensor3& T);

// Fix singular-vector signs in place: each column is scaled so that its
// entry of largest magnitude (first occurrence on ties) is positive.
void fix_signs(Matrix& U);

}  // namespace teim
