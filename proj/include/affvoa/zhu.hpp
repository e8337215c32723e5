#pragma once

#include <optional>

#include "affvoa/env_element.hpp"
#include "affvoa/vertex_state.hpp"

namespace affvoa {

/// Image in U(g) of a state under the identification A(N(k,0)) = U(g):
/// x_1(-n_1-1)...x_m(-n_m-1)|0> maps to (-1)^{n_1+...+n_m} x_m...x_1.
/// Coefficients that depend on k need a numeric level; otherwise throws
/// std::invalid_argument.
EnvElement zhu_F(const SymbolicState& s, const std::optional<Rational>& k = std::nullopt);
EnvElement zhu_F(const NumericState& s);

}  // namespace affvoa
