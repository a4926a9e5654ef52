#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "subsidy/error.hpp"

namespace subsidy {

template <typename T>
struct Matching {
  std::vector<std::size_t> column;  // column[r] matched to row r
  T weight{};
};

namespace detail {

/// Kuhn-Munkres with potentials on an a x b matrix, a <= b. Works for any
/// exact ordered field-like T (no infinities needed). Returns the row->column
/// assignment of some minimum-weight matching saturating every row.
template <typename T>
std::vector<std::size_t> hungarian(const std::vector<std::vector<T>>& w, const std::vector<std::size_t>& rows,
                                   const std::vector<std::size_t>& cols) {
  const std::size_t n = rows.size();
  const std::size_t m = cols.size();
  std::vector<T> u(n + 1), v(m + 1);
  std::vector<std::size_t> p(m + 1, 0), way(m + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<std::optional<T>> minv(m + 1);
    std::vector<bool> used(m + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = p[j0];
      std::optional<T> delta;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= m; ++j) {
        if (used[j]) continue;
        T cur = w[rows[i0 - 1]][cols[j - 1]] - u[i0] - v[j];
        if (!minv[j] || cur < *minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (!delta || *minv[j] < *delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= m; ++j) {
        if (used[j]) {
          u[p[j]] += *delta;
          v[j] -= *delta;
        } else if (minv[j]) {
          *minv[j] -= *delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<std::size_t> assign(n);
  for (std::size_t j = 1; j <= m; ++j)
    if (p[j] != 0) assign[p[j] - 1] = j - 1;
  return assign;
}

template <typename T>
T matching_value(const std::vector<std::vector<T>>& w, const std::vector<std::size_t>& rows,
                 const std::vector<std::size_t>& cols) {
  T total{};
  if (rows.empty()) return total;
  const auto assign = hungarian(w, rows, cols);
  for (std::size_t r = 0; r < rows.size(); ++r) total += w[rows[r]][cols[assign[r]]];
  return total;
}

}  // namespace detail

/// Minimum-weight matching of all rows of an a x b matrix (a <= b) into
/// distinct columns. Among all minimum matchings, returns the one whose
/// column vector is lexicographically smallest, so results are reproducible
/// under ties.
template <typename T>
Matching<T> min_weight_perfect_matching(const std::vector<std::vector<T>>& w) {
  const std::size_t a = w.size();
  const std::size_t b = a == 0 ? 0 : w.front().size();
  if (a > b) throw Error(ErrorKind::InvalidArgument, "matching needs rows <= columns");
  for (const auto& row : w)
    if (row.size() != b) throw Error(ErrorKind::DimensionMismatch, "ragged weight matrix");

  std::vector<std::size_t> all_rows(a), all_cols(b);
  for (std::size_t r = 0; r < a; ++r) all_rows[r] = r;
  for (std::size_t c = 0; c < b; ++c) all_cols[c] = c;
  const T best = detail::matching_value(w, all_rows, all_cols);

  Matching<T> out;
  std::vector<bool> taken(b, false);
  T fixed{};
  for (std::size_t r = 0; r < a; ++r) {
    std::vector<std::size_t> rest_rows;
    for (std::size_t q = r + 1; q < a; ++q) rest_rows.push_back(q);
    bool placed = false;
    for (std::size_t c = 0; c < b && !placed; ++c) {
      if (taken[c]) continue;
      std::vector<std::size_t> rest_cols;
      for (std::size_t d = 0; d < b; ++d)
        if (!taken[d] && d != c) rest_cols.push_back(d);
      const T total = fixed + w[r][c] + detail::matching_value(w, rest_rows, rest_cols);
      if (total == best) {
        taken[c] = true;
        fixed += w[r][c];
        out.column.push_back(c);
        placed = true;
      }
    }
    if (!placed) throw std::logic_error("min_weight_perfect_matching: optimum not reproducible");
  }
  out.weight = fixed;
  return out;
}

}  // namespace subsidy
