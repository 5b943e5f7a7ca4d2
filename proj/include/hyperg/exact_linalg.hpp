#pragma once

#include <optional>
#include <vector>

#include "hyperg/rational.hpp"

namespace hyperg {

/// Dense rational matrix, row major. Exact Gauss-Jordan elimination; no
/// pivoting heuristics are needed because the arithmetic is exact.
using RatMatrix = std::vector<RatVec>;

/** Reduces m to reduced row echelon form in place; returns the pivot columns. */
inline std::vector<int> rref_in_place(RatMatrix& m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i) {
      if (m[i][c] != 0) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    std::swap(m[r], m[p]);
    const Rat lead = m[r][c];
    for (int j = c; j < cols; ++j) m[r][j] /= lead;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rat f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline int exact_rank(RatMatrix m) { return static_cast<int>(rref_in_place(m).size()); }

/** Basis of {x : m x = 0} for a matrix with `cols` columns (m may have no rows). */
inline std::vector<RatVec> exact_nullspace(RatMatrix m, int cols) {
  const auto pivots = rref_in_place(m);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (int c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    RatVec v(cols, Rat(0));
    v[c] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m[k][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

/** One exact solution of A x = b (free variables set to 0), or nullopt if inconsistent. */
inline std::optional<RatVec> exact_solve(RatMatrix a, const RatVec& b) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  for (int i = 0; i < rows; ++i) a[i].push_back(b[i]);
  const auto pivots = rref_in_place(a);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  RatVec x(cols, Rat(0));
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = a[k][cols];
  return x;
}

}  // namespace hyperg
