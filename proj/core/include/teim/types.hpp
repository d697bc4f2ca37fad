#pragma once

// ============================================================================
// Fundamental scalar/matrix aliases, index-list operators, and the error
// hierarchy shared by every component of the library.
// ============================================================================

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace teim {

// Dense 64-bit-float matrices, column-major so that vectorization is a
// zero-copy reinterpretation of the underlying buffer.
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

// ----------------------------------------------------------------------------
// Errors
// ----------------------------------------------------------------------------

// Root of the library's error hierarchy; everything thrown on purpose derives
// from this so callers can distinguish our diagnostics from std internals.
class TeimError : public std::runtime_error {
 public:
  explicit TeimError(const std::string& what) : std::runtime_error(what) {}
};

// Shape/length mismatches and invalid arguments.
class DimensionError : public TeimError {
 public:
  explicit DimensionError(const std::string& what) : TeimError(what) {}
};

// Requested more basis vectors than the data supports.
class RankDeficiencyError : public TeimError {
 public:
  explicit RankDeficiencyError(const std::string& what) : TeimError(what) {}
};

// An interpolation system became numerically singular.
class SingularSystemError : public TeimError {
 public:
  explicit SingularSystemError(const std::string& what) : TeimError(what) {}
};

// Time integration produced a non-finite state.
class BlowupError : public TeimError {
 public:
  BlowupError(const std::string& what, long step) : TeimError(what), step_(step) {}
  long step() const { return step_; }

 private:
  long step_;
};

// File-format and I/O failures.
class IoError : public TeimError {
 public:
  explicit IoError(const std::string& what) : TeimError(what) {}
};

// ----------------------------------------------------------------------------
// Selection operators and masks
// ----------------------------------------------------------------------------

// A selection operator: an ordered list of row indices into a space of
// dimension source_dim. Applying it to a vector picks out those entries;
// the dense permutation/selection matrix is never materialized outside of
// test oracles.
struct SelectionOperator {
  Index source_dim = 0;
  std::vector<Index> indices;

  Index size() const { return static_cast<Index>(indices.size()); }

  void validate() const {
    for (Index i : indices) {
      if (i < 0 || i >= source_dim) {
        throw DimensionError("SelectionOperator: index " + std::to_string(i) +
                             " out of range [0, " + std::to_string(source_dim) + ")");
      }
    }
  }
};

// A list of (row, column) pairs defining a mask from n1 x n2 matrices to
// m1 x m2 matrices. Entry k is the pair (row_indices[k], col_indices[k]).
struct MaskPairs {
  std::vector<Index> row_indices;
  std::vector<Index> col_indices;

  Index size() const { return static_cast<Index>(row_indices.size()); }

  void validate() const {
    if (row_indices.size() != col_indices.size()) {
      throw DimensionError("MaskPairs: row/col index lists differ in length");
    }
    for (std::size_t a = 0; a < row_indices.size(); ++a) {
      for (std::size_t b = a + 1; b < row_indices.size(); ++b) {
        if (row_indices[a] == row_indices[b] && col_indices[a] == col_indices[b]) {
          throw DimensionError("MaskPairs: repeated interpolation point");
        }
      }
    }
  }
};

// A rectangular interpolation grid: m1 row indices and m2 column indices.
// The induced mask is their Cartesian product in row-major pair order.
struct InterpGrid {
  SelectionOperator rows;  // over n1, length m1
  SelectionOperator cols;  // over n2, length m2

  Index m1() const { return rows.size(); }
  Index m2() const { return cols.size(); }

  // Pairs in row-major order: pair t = (rows[t / m2], cols[t % m2]).
  MaskPairs cartesian_pairs() const {
    MaskPairs pairs;
    pairs.row_indices.reserve(static_cast<std::size_t>(m1() * m2()));
    pairs.col_indices.reserve(static_cast<std::size_t>(m1() * m2()));
    for (Index r : rows.indices) {
      for (Index c : cols.indices) {
        pairs.row_indices.push_back(r);
        pairs.col_indices.push_back(c);
      }
    }
    return pairs;
  }
};

}  // namespace teim
