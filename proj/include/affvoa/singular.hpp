#pragma once

#include <string>
#include <vector>

#include "affvoa/vertex_state.hpp"

namespace affvoa {

/// A generator of the positive affine nilradical and its action on a state.
struct Residual {
  int basis;  // Chevalley basis index of x
  int mode;   // x(mode)
  std::string label;  // `E(+1,-2)(0)`
  SymbolicState value;
};

/// The modes e_{alpha_i}(0) for every simple root and f_theta(1).
std::vector<std::pair<int, int>> annihilation_generators(const RootDatum& d);

/// e_{alpha_i}(0) s for all simple roots, then f_theta(1) s. Throws
/// std::invalid_argument when s is not homogeneous in degree and weight.
std::vector<Residual> singular_conditions(const SymbolicState& s);

/// Levels k at which s is singular.
struct LevelSet {
  bool all = false;             // singular for every k
  std::vector<Rational> values; // increasing; empty and !all means none

  bool empty() const { return !all && values.empty(); }
  /// `all k`, `none`, or `-2`, `-3/2, 1` ...
  std::string to_string() const;
};

/// Common rational roots of every coefficient of every residual.
LevelSet singular_levels(const SymbolicState& s);
LevelSet singular_levels(const std::vector<Residual>& residuals);

}  // namespace affvoa
