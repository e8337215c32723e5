#pragma once

#include <map>
#include <vector>

#include "affvoa/env_element.hpp"
#include "affvoa/hpoly.hpp"

namespace affvoa {

/// The submodule R = ad(U(g)) u of U(g) generated by a highest-weight
/// vector u. The basis of each weight space is kept in reduced echelon
/// form, so it does not depend on the order in which vectors were found.
struct AdjointModule {
  EnvElement generator;
  Weight highest_weight;
  std::map<Weight, std::vector<EnvElement>> weight_spaces;

  int dimension() const;
  /// Fundamental-weight coordinates of the highest weight.
  std::vector<int> highest_weight_omega() const;
  /// Basis of R_0 (empty when 0 is not a weight of R).
  std::vector<EnvElement> zero_weight_space() const;
  /// Weight multiplicities keyed by epsilon coordinates.
  std::map<Weight, int> multiplicities() const;
};

/// Saturates u under the simple lowering operators ad(f_i). Throws
/// std::invalid_argument when u is zero, not weight-homogeneous, or not
/// killed by some ad(e_i) (the message names that simple root).
AdjointModule generate_adjoint_module(const EnvElement& u);

/// The pure Cartan part of r as a polynomial in h_1..h_l: everything with a
/// positive root vector on the right lies in U(g)n_+ and is dropped. Only
/// meaningful for zero-weight r.
HPolynomial cartan_part(const EnvElement& r);

/// Reduced echelon basis (deglex, h_1 > h_2 > ...) of the span P_0 of the
/// polynomials p_r for r in R_0.
std::vector<HPolynomial> zero_weight_polynomials(const AdjointModule& r);

/// Reduced echelon basis of the span of arbitrary polynomials.
std::vector<HPolynomial> polynomial_span(const std::vector<HPolynomial>& polys, int nvars);

}  // namespace affvoa
