#include "affvoa/singular.hpp"

#include <stdexcept>

namespace affvoa {

std::vector<std::pair<int, int>> annihilation_generators(const RootDatum& d) {
  std::vector<std::pair<int, int>> g;
  for (int i = 0; i < d.rank(); ++i) g.emplace_back(d.simple_root(i), 0);
  g.emplace_back(d.lowest_root(), 1);
  return g;
}

std::vector<Residual> singular_conditions(const SymbolicState& s) {
  if (!s.degree()) throw std::invalid_argument("singular_conditions: state is not homogeneous in conformal degree");
  if (!s.is_zero() && !s.weight()) throw std::invalid_argument("singular_conditions: state is not weight-homogeneous");
  const auto& d = *s.datum();
  SymbolicModes alg(s.datum(), UPoly::variable());
  std::vector<Residual> out;
  for (auto [x, n] : annihilation_generators(d)) {
    out.push_back({x, n, d.label(x) + "(" + std::to_string(n) + ")", alg.act(x, n, s)});
  }
  return out;
}

std::string LevelSet::to_string() const {
  if (all) return "all k";
  if (values.empty()) return "none";
  std::string s;
  for (const auto& v : values) {
    if (!s.empty()) s += ", ";
    s += affvoa::to_string(v);
  }
  return s;
}

LevelSet singular_levels(const std::vector<Residual>& residuals) {
  UPoly g;
  for (const auto& r : residuals)
    for (const auto& [m, c] : r.value.terms()) g = UPoly::gcd(g, c);
  LevelSet out;
  if (g.is_zero()) {
    out.all = true;
  } else if (!g.is_constant()) {
    out.values = g.rational_roots();
  }
  return out;
}

LevelSet singular_levels(const SymbolicState& s) { return singular_levels(singular_conditions(s)); }

}  // namespace affvoa
