#pragma once

#include <string>
#include <vector>

#include "affvoa/adjoint_module.hpp"
#include "affvoa/weight_functional.hpp"

namespace affvoa {

/// Span of all P_0 of the given modules, as a reduced echelon basis.
std::vector<HPolynomial> assemble_system(const std::vector<AdjointModule>& ideals);

struct ClassificationResult {
  std::vector<HPolynomial> system;
  /// Canonical families, sorted: constant weights first.
  std::vector<WeightFunctional> families;
  /// Every polynomial of the system vanishes identically on every family.
  bool residual_check = false;
  /// Number of leaves reached by the branching (before deduplication).
  int leaves = 0;
};

/// Puts a one-parameter family in canonical form: the last coordinate with
/// a nonzero t-coefficient becomes exactly t. Constant weights are unchanged.
WeightFunctional canonical_family(const WeightFunctional& f);
/// Same set of weights (exact, via canonical forms).
bool same_family(const WeightFunctional& a, const WeightFunctional& b);
/// The constant weight w lies on the family f.
bool lies_on(const std::vector<Rational>& w, const WeightFunctional& f);

/// Solves p(mu) = 0 for all p in the system by branching on affine-linear
/// factors. Throws std::runtime_error when no polynomial of a branch splits
/// into linear factors, or when a branch leaves two or more free
/// parameters.
ClassificationResult solve_by_branching(const std::vector<HPolynomial>& system, int rank);

/// The closed-form family for S (1-based, strictly increasing, inside
/// {1..l-2}) with t on w_{variant}, variant being l-1 or l.
WeightFunctional closed_form_mu(int rank, const std::vector<int>& s, int variant);

/// Dominant integral members of one family.
struct OrdinaryPart {
  WeightFunctional family;
  /// `t in Z>=0`, `none` (a constant dominant integral weight), `empty`,
  /// `finite` (listed in `members`) or a congruence description.
  std::string constraint;
  std::vector<WeightFunctional> members;
  bool is_empty() const { return constraint == "empty"; }
};

OrdinaryPart ordinary_part(const WeightFunctional& family);
/// The nonempty ordinary parts of every family.
std::vector<OrdinaryPart> filter_ordinary(const ClassificationResult& r);

}  // namespace affvoa
