#pragma once

// ============================================================================
// Seeded random matrices for property checks, benchmarks, and synthetic
// bases. Orthonormal factors come from the thin QR of a Gaussian matrix
// with the R-diagonal sign convention, so a fixed seed pins the basis.
// ============================================================================

#include "teim/types.hpp"

#include <cstdint>
#include <random>

namespace teim {

using Rng = std::mt19937_64;

// Dense matrix of standard normal draws, filled column-major.
Matrix random_gaussian(Index rows, Index cols, Rng& rng);

// Thin-QR orthonormal basis of a Gaussian matrix (rows >= cols), with each
// column flipped so the corresponding diagonal of R is positive.
Matrix random_orthonormal(Index rows, Index cols, Rng& rng);

}  // namespace teim
