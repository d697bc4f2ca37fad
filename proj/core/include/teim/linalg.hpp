#pragma once

// ============================================================================
// Structured dense-matrix primitives: vec / vec_inv / vecd, Kronecker and
// column-wise Khatri-Rao products, the commutation-matrix action, and the
// mask / grid selection operators. Selection matrices are applied as index
// lists; dense permutation matrices exist only inside test oracles.
// ============================================================================

#include "teim/types.hpp"

namespace teim {

// Column-wise vectorization: entry (i + rows*j) = X(i, j).
Vector vec(const Matrix& X);

// Inverse of vec: reshape a length m*n vector into an m x n matrix,
// column j = v[m*j : m*(j+1)].
Matrix vec_inv(const Vector& v, Index m, Index n);

// Diagonal extraction [a11, a22, ..., amm]; input must be square.
Vector vecd(const Matrix& A);

// Kronecker product: block (i, j) of the result is A(i,j) * B.
Matrix kron(const Matrix& A, const Matrix& B);

// Column-wise Khatri-Rao product: column j = kron(A.col(j), B.col(j)).
// A and B must have the same number of columns.
Matrix khatri_rao_colwise(const Matrix& A, const Matrix& B);

// Action of the commutation (permutation) matrix P_mn on a length m*n
// vector: commutation_apply(vec(X), m, n) = vec(X^T) for X of shape m x n.
// Implemented as a pure index permutation.
Vector commutation_apply(const Vector& v, Index m, Index n);

// Apply a mask of m1*m2 (row, col) pairs to A, filling the m1 x m2 output
// row-major in pair order: pair k lands at (k / m2, k % m2).
Matrix mask_apply(const Matrix& A, const MaskPairs& pairs, Index m1, Index m2);

// Sample A on a rectangular grid: entry (r, c) = A(rows[r], cols[c]).
Matrix grid_sample(const Matrix& A, const InterpGrid& grid);

}  // namespace teim
