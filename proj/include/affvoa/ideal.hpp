#pragma once

#include <map>
#include <vector>

#include "affvoa/echelon.hpp"
#include "affvoa/singular.hpp"
#include "affvoa/vertex_state.hpp"

namespace affvoa {

/// All normal-ordered monomials of a given conformal degree and h-weight.
struct GradedComponent {
  int degree = 0;
  Weight weight;
  std::vector<ModeMonomial> basis;
  int dimension() const { return static_cast<int>(basis.size()); }
};

GradedComponent graded_component(const RootDatum& d, int degree, const Weight& weight);
/// Every monomial of the degree, grouped by weight.
std::map<Weight, std::vector<ModeMonomial>> monomials_of_degree(const RootDatum& d, int degree);

using StateEchelon = EchelonBasis<ModeMonomial>;

/// The ideal generated by a set of states at a fixed numeric level, stored
/// degree by degree up to a cutoff as reduced echelon bases per weight.
class IdealData {
 public:
  IdealData(RootDatumPtr d, Rational level, std::vector<NumericState> generators, int cutoff);

  const RootDatumPtr& datum() const { return d_; }
  const Rational& level() const { return level_; }
  const std::vector<NumericState>& generators() const { return gens_; }
  int cutoff() const { return cutoff_; }

  /// Echelon basis of J in the given degree and weight (empty if none).
  const StateEchelon& component(int degree, const Weight& weight) const;
  int dimension(int degree) const;
  ModeAlgebra<Rational>& modes() const { return modes_; }

 private:
  RootDatumPtr d_;
  Rational level_;
  std::vector<NumericState> gens_;
  int cutoff_;
  mutable ModeAlgebra<Rational> modes_;
  std::vector<std::map<Weight, StateEchelon>> comp_;
  StateEchelon empty_;
};

/// Spanning set of J in one graded component.
std::vector<NumericState> ideal_component(const IdealData& j, int degree, const Weight& weight);

/// A space of singular vectors in the quotient, given by representatives.
struct SingularHit {
  int degree;
  Weight weight;
  std::vector<NumericState> basis;
};

/// For every degree up to max_degree and every dominant weight, the states
/// killed by all e_{alpha_i}(0) and f_theta(1) modulo J, taken modulo J.
/// Only nonzero solution spaces are returned, ordered by degree then weight.
std::vector<SingularHit> search_singular(const IdealData& j, int max_degree);

}  // namespace affvoa
