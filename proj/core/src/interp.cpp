#include "teim/interp.hpp"

#include "teim/linalg.hpp"

#include <Eigen/LU>
#include <Eigen/SVD>

#include <cmath>
#include <string>

namespace teim {

namespace {

constexpr double kResidualGuard = 1e-14;

// First-occurrence argmax of |v|.
Index argmax_abs(const Vector& v, double* max_out) {
  Index best = 0;
  double best_abs = -1.0;
  for (Index i = 0; i < v.size(); ++i) {
    const double a = std::abs(v(i));
    if (a > best_abs) {
      best_abs = a;
      best = i;
    }
  }
  if (max_out) *max_out = best_abs;
  return best;
}

// Solve the l x l interpolation system U[idx, 0:l] c = U[idx, l] and return
// the residual U.col(l) - U.leftCols(l) * c.
Vector deim_residual(const Matrix& U, const std::vector<Index>& idx, Index l) {
  Matrix P(static_cast<Index>(idx.size()), l);
  Vector w(static_cast<Index>(idx.size()));
  for (Index s = 0; s < static_cast<Index>(idx.size()); ++s) {
    P.row(s) = U.row(idx[static_cast<std::size_t>(s)]).head(l);
    w(s) = U(idx[static_cast<std::size_t>(s)], l);
  }
  Eigen::FullPivLU<Matrix> lu(P);
  if (!lu.isInvertible()) {
    throw SingularSystemError("deim: singular interpolation system at step " + std::to_string(l));
  }
  const Vector c = lu.solve(w);
  return U.col(l) - U.leftCols(l) * c;
}

}  // namespace

DeimResult deim(const Matrix& U) {
  if (U.cols() < 1 || U.cols() > U.rows()) {
    throw DimensionError("deim: basis must have 1 <= m <= n columns");
  }
  DeimResult result;
  result.indices.source_dim = U.rows();

  double rmax = 0.0;
  Index first = argmax_abs(U.col(0), &rmax);
  if (rmax == 0.0) {
    throw RankDeficiencyError("deim: first basis vector is identically zero");
  }
  result.indices.indices.push_back(first);
  result.residual_maxima.push_back(rmax);
  const double initial_max = rmax;

  for (Index l = 1; l < U.cols(); ++l) {
    const Vector r = deim_residual(U, result.indices.indices, l);
    double m = 0.0;
    const Index pick = argmax_abs(r, &m);
    if (m < kResidualGuard * initial_max) {
      throw RankDeficiencyError("deim: residual collapsed at step " + std::to_string(l) +
                                " (max " + std::to_string(m) + "); basis is numerically dependent");
    }
    result.indices.indices.push_back(pick);
    result.residual_maxima.push_back(m);
  }
  return result;
}

TeimTrace teim(const Matrix& U1, const Matrix& U2) {
  if (U1.cols() < 1 || U1.cols() > U1.rows() || U2.cols() < 1 || U2.cols() > U2.rows()) {
    throw DimensionError("teim: factor bases must have 1 <= m <= n columns");
  }
  const Index m1 = U1.cols();
  const Index m2 = U2.cols();

  // The residual at step (k, l) factors as r1_k * r2_l^T, where r1_k is the
  // row-direction DEIM residual of u_k against the rows selected so far and
  // r2_l the column-direction residual of v_l. Its maximum-magnitude entry
  // is therefore located by the two one-dimensional argmaxes, and the inner
  // pass over l re-uses the column residual maxima computed once.
  TeimTrace trace;
  trace.m1 = m1;
  trace.m2 = m2;

  std::vector<Index> rows;
  std::vector<Index> cols;
  std::vector<double> col_maxima;  // max |r2_l| for l = 0..m2-1
  rows.reserve(static_cast<std::size_t>(m1));
  cols.reserve(static_cast<std::size_t>(m2));

  double initial_max = 0.0;
  for (Index k = 0; k < m1; ++k) {
    // Row-direction residual of u_k against rows i_1..i_{k-1}.
    double row_max = 0.0;
    Index row_pick = 0;
    if (k == 0) {
      row_pick = argmax_abs(U1.col(0), &row_max);
    } else {
      const Vector r1 = deim_residual(U1, rows, k);
      row_pick = argmax_abs(r1, &row_max);
    }
    rows.push_back(row_pick);

    for (Index l = 0; l < m2; ++l) {
      if (k == 0) {
        // First pass also selects the columns.
        double col_max = 0.0;
        Index col_pick = 0;
        if (l == 0) {
          col_pick = argmax_abs(U2.col(0), &col_max);
        } else {
          const Vector r2 = deim_residual(U2, cols, l);
          col_pick = argmax_abs(r2, &col_max);
        }
        cols.push_back(col_pick);
        col_maxima.push_back(col_max);
      }
      const double rmax = row_max * col_maxima[static_cast<std::size_t>(l)];
      if (k == 0 && l == 0) {
        if (rmax == 0.0) {
          throw RankDeficiencyError("teim: first rank-one term is identically zero");
        }
        initial_max = rmax;
      } else if (rmax < kResidualGuard * initial_max) {
        throw RankDeficiencyError("teim: residual collapsed at pair (" + std::to_string(k) +
                                  ", " + std::to_string(l) + "); basis is numerically dependent");
      }
      trace.flat_pairs.row_indices.push_back(row_pick);
      trace.flat_pairs.col_indices.push_back(cols[static_cast<std::size_t>(l)]);
      trace.residual_maxima.push_back(rmax);
    }
  }
  return trace;
}

InterpGrid two_d_deim(const Matrix& U1, const Matrix& U2) {
  InterpGrid grid;
  const DeimResult r1 = deim(U1);
  const DeimResult r2 = deim(U2);
  grid.rows = r1.indices;
  grid.cols = r2.indices;
  return grid;
}

InterpGrid grid_of(const TeimTrace& trace) {
  const Index m1 = trace.m1;
  const Index m2 = trace.m2;
  if (trace.flat_pairs.size() != m1 * m2) {
    throw DimensionError("grid_of: trace length does not match m1*m2");
  }
  InterpGrid grid;
  grid.rows.indices.reserve(static_cast<std::size_t>(m1));
  grid.cols.indices.reserve(static_cast<std::size_t>(m2));
  for (Index r = 0; r < m1; ++r) {
    grid.rows.indices.push_back(trace.flat_pairs.row_indices[static_cast<std::size_t>(r * m2)]);
  }
  for (Index c = 0; c < m2; ++c) {
    grid.cols.indices.push_back(trace.flat_pairs.col_indices[static_cast<std::size_t>(c)]);
  }
  // Verify the rectangular structure the selection theorem guarantees.
  for (Index t = 0; t < trace.flat_pairs.size(); ++t) {
    const Index expect_row = grid.rows.indices[static_cast<std::size_t>(t / m2)];
    const Index expect_col = grid.cols.indices[static_cast<std::size_t>(t % m2)];
    if (trace.flat_pairs.row_indices[static_cast<std::size_t>(t)] != expect_row ||
        trace.flat_pairs.col_indices[static_cast<std::size_t>(t)] != expect_col) {
      throw DimensionError("grid_of: trace is not a rectangular grid at pair " +
                           std::to_string(t));
    }
  }
  return grid;
}

void check_grid_nonsingular(const InterpGrid& grid, const Matrix& U1, const Matrix& U2) {
  const auto check = [](const SelectionOperator& sel, const Matrix& U, const char* what) {
    Matrix P(sel.size(), U.cols());
    for (Index s = 0; s < sel.size(); ++s) {
      P.row(s) = U.row(sel.indices[static_cast<std::size_t>(s)]);
    }
    Eigen::JacobiSVD<Matrix> svd(P);
    const Vector& sigma = svd.singularValues();
    if (sigma.size() == 0 || sigma(sigma.size() - 1) <= 1e-12 * sigma(0)) {
      throw SingularSystemError(std::string(what) + ": sampled basis is numerically singular");
    }
  };
  check(grid.rows, U1, "grid rows");
  check(grid.cols, U2, "grid cols");
}

}  // namespace teim
