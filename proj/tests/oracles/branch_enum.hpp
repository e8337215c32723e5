#pragma once

// Independent oracle: exhaustive enumeration over products of affine-linear
// forms. Each equation is a list of linear factors; every choice of one
// vanishing factor per equation gives a linear system solved by plain
// Gaussian elimination. Returns the finite solution points, or throws if
// some choice has a positive-dimensional solution set.

#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "affvoa/rational.hpp"

namespace oracle {

using affvoa::Rational;

/// c[0] + c[1] x_1 + ... + c[n] x_n
using Linear = std::vector<Rational>;
using Point = std::vector<Rational>;

/// Unique solution of the system, nullopt when inconsistent; throws when
/// the system has free variables.
inline std::optional<Point> solve_point(std::vector<Linear> rows, int n) {
  int r = 0;
  std::vector<int> pivots;
  for (int col = 1; col <= n && r < static_cast<int>(rows.size()); ++col) {
    int p = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i)
      if (rows[i][col] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(rows[p], rows[r]);
    const Rational inv = 1 / rows[r][col];
    for (auto& v : rows[r]) v *= inv;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      const Rational f = rows[i][col];
      for (int k = 0; k <= n; ++k) rows[i][k] -= f * rows[r][k];
    }
    pivots.push_back(col);
    ++r;
  }
  for (int i = r; i < static_cast<int>(rows.size()); ++i)
    if (rows[i][0] != 0) return std::nullopt;
  if (static_cast<int>(pivots.size()) < n) throw std::runtime_error("positive-dimensional branch");
  Point x(n);
  for (int i = 0; i < r; ++i) x[pivots[i] - 1] = -rows[i][0];
  return x;
}

inline std::set<Point> enumerate_branches(const std::vector<std::vector<Linear>>& equations, int n) {
  std::set<Point> out;
  std::vector<std::size_t> choice(equations.size(), 0);
  while (true) {
    std::vector<Linear> rows;
    for (std::size_t e = 0; e < equations.size(); ++e) rows.push_back(equations[e][choice[e]]);
    if (auto p = solve_point(rows, n)) out.insert(*p);
    std::size_t e = 0;
    while (e < equations.size() && ++choice[e] == equations[e].size()) choice[e++] = 0;
    if (e == equations.size()) break;
  }
  return out;
}

}  // namespace oracle
