#pragma once

/// Small exact dense linear algebra over Q(i, sqrt2): Gaussian elimination,
/// inversion and linear solving.  Sizes in this project stay well under 10^3,
/// so a straightforward fraction-exact row reduction is plenty.

#include <optional>
#include <vector>

#include "liecheck/base_number.hpp"

namespace liecheck {

using BVec = std::vector<BaseNumber>;
using BMat = std::vector<BVec>;

/// In-place reduced row echelon form; returns the pivot column of each pivot
/// row, in order.
inline std::vector<std::size_t> rref(BMat& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = rows;
    for (std::size_t k = r; k < rows; ++k)
      if (!m[k][c].is_zero()) {
        sel = k;
        break;
      }
    if (sel == rows) continue;
    std::swap(m[r], m[sel]);
    BaseNumber inv = m[r][c].inverse();
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t k = 0; k < rows; ++k) {
      if (k == r || m[k][c].is_zero()) continue;
      BaseNumber f = m[k][c];
      for (std::size_t j = c; j < cols; ++j) m[k][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

/// Solve A x = b exactly; returns std::nullopt when inconsistent.  When the
/// system is underdetermined, free variables are set to zero (deterministic).
inline std::optional<BVec> solve_linear(const BMat& a, const BVec& b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  BMat aug(rows, BVec(cols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) aug[r][c] = a[r][c];
    aug[r][cols] = b[r];
  }
  auto pivots = rref(aug);
  // Inconsistent iff a pivot lands in the augmented column.
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  BVec x(cols);
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug[k][cols];
  return x;
}

/// Exact inverse; std::nullopt when singular.
inline std::optional<BMat> invert(const BMat& a) {
  const std::size_t n = a.size();
  BMat aug(n, BVec(2 * n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug[r][c] = a[r][c];
    aug[r][n + r] = BaseNumber(1);
  }
  auto pivots = rref(aug);
  if (pivots.size() != n) return std::nullopt;
  for (std::size_t k = 0; k < n; ++k)
    if (pivots[k] != k) return std::nullopt;
  BMat inv(n, BVec(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv[r][c] = aug[r][n + c];
  return inv;
}

}  // namespace liecheck
