#include "affvoa/dense.hpp"

#include <stdexcept>

namespace affvoa {

std::vector<int> rref(DenseMatrix& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Rational inv = 1 / m[r][c];
    for (int j = c; j < cols; ++j) m[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::optional<AffineSolution> solve_affine(const DenseMatrix& a, const std::vector<Rational>& b, int columns) {
  DenseMatrix aug;
  aug.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (static_cast<int>(a[i].size()) != columns) throw std::invalid_argument("solve_affine: ragged matrix");
    auto row = a[i];
    row.push_back(b[i]);
    aug.push_back(std::move(row));
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == columns) return std::nullopt;

  AffineSolution sol;
  sol.particular.assign(columns, Rational(0));
  std::vector<bool> is_pivot(columns, false);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    is_pivot[pivots[r]] = true;
    sol.particular[pivots[r]] = aug[r][columns];
  }
  for (int free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> dir(columns, Rational(0));
    dir[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) dir[pivots[r]] = -aug[r][free];
    sol.directions.push_back(std::move(dir));
  }
  return sol;
}

std::vector<Rational> solve_unique(const DenseMatrix& a, const std::vector<Rational>& b) {
  const int n = static_cast<int>(b.size());
  auto sol = solve_affine(a, b, n);
  if (!sol || !sol->directions.empty()) throw std::domain_error("solve_unique: system is singular");
  return sol->particular;
}

}  // namespace affvoa
