#pragma once

// ============================================================================
// Greedy interpolation-point selection: DEIM on a single basis, TEIM on a
// factor-basis pair, and 2D-DEIM (independent per-mode DEIM). TEIM's
// residual at every iteration is rank-one, so the production path runs in
// O(n1*m1 + n2*m2) per point without materializing the residual matrix; the
// literal dense recursion lives in the test oracles.
// ============================================================================

#include "teim/types.hpp"

#include <vector>

namespace teim {

// Result of a DEIM selection: indices in greedy order plus the residual
// maximum observed when each index was chosen.
struct DeimResult {
  SelectionOperator indices;
  std::vector<double> residual_maxima;
};

// Full record of a TEIM run: the m1*m2 interpolation pairs in iteration
// order and the residual maximum at each step. The pairs always form a
// rectangular grid (rows x cols Cartesian product, row-major pair order).
struct TeimTrace {
  Index m1 = 0;
  Index m2 = 0;
  MaskPairs flat_pairs;
  std::vector<double> residual_maxima;
};

// Greedy DEIM point selection on a basis with independent columns.
// First index = argmax |u1|; step l solves the interpolation system on the
// selected rows and picks argmax of the residual. Ties break to the lowest
// index. Throws SingularSystemError on a singular interpolation system and
// RankDeficiencyError when a residual maximum falls below 1e-14 times the
// initial maximum.
DeimResult deim(const Matrix& U);

// TEIM point selection on a factor pair U1 (n1 x m1), U2 (n2 x m2).
TeimTrace teim(const Matrix& U1, const Matrix& U2);

// Independent DEIM per mode; by the equivalence theorem this matches the
// grid extracted from teim() index-for-index.
InterpGrid two_d_deim(const Matrix& U1, const Matrix& U2);

// Extract the rectangular grid from a TEIM trace: rows from pairs
// 0, m2, 2*m2, ...; cols from pairs 0..m2-1. Throws DimensionError if the
// trace is not a rectangular Cartesian product (which would indicate an
// implementation bug).
InterpGrid grid_of(const TeimTrace& trace);

// Guard shared by approximator construction: smallest singular value of the
// sampled basis must exceed 1e-12 times the largest.
void check_grid_nonsingular(const InterpGrid& grid, const Matrix& U1, const Matrix& U2);

}  // namespace teim
