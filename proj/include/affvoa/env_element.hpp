#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "affvoa/lie.hpp"

namespace affvoa {

/// PBW monomial of U(g): nondecreasing sequence of basis indices, i.e.
/// negative root vectors, then Cartan elements, then positive root vectors.
using PBWMonomial = std::vector<std::uint16_t>;

/// Element of the universal enveloping algebra in PBW normal form.
class EnvElement {
 public:
  explicit EnvElement(RootDatumPtr d) : d_(std::move(d)) {}
  static EnvElement one(RootDatumPtr d);
  static EnvElement generator(RootDatumPtr d, int b);
  static EnvElement from_lie(const LieElement& x);
  /// Parses `2 E(+1,-2) E(+1,+2) - 1/2 H(1) + 1`. Factors may come in any
  /// order; the product is straightened. `F(...)` names the negative root.
  static EnvElement parse(RootDatumPtr d, std::string_view text);

  const RootDatumPtr& datum() const { return d_; }
  const std::map<PBWMonomial, Rational>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  Rational coeff(const PBWMonomial& m) const;
  /// Adds c times an already-normal monomial.
  EnvElement& add(const PBWMonomial& m, const Rational& c);

  EnvElement& operator+=(const EnvElement& o);
  EnvElement& operator-=(const EnvElement& o);
  EnvElement& operator*=(const Rational& s);
  friend EnvElement operator+(EnvElement a, const EnvElement& b) { return a += b; }
  friend EnvElement operator-(EnvElement a, const EnvElement& b) { return a -= b; }
  friend EnvElement operator*(const Rational& s, EnvElement a) { return a *= s; }
  friend bool operator==(const EnvElement& a, const EnvElement& b);

  /// Highest PBW degree among the terms (-1 for zero).
  int degree() const;
  std::string to_string() const;

 private:
  void check_same(const EnvElement& o) const;
  RootDatumPtr d_;
  std::map<PBWMonomial, Rational> t_;
};

/// PBW normal form of the product a*b.
EnvElement env_product(const EnvElement& a, const EnvElement& b);

/// x_L f = x f - f x.
EnvElement adjoint_act(const LieElement& x, const EnvElement& f);
EnvElement adjoint_act(int basis, const EnvElement& f);

std::optional<Weight> weight_of(const EnvElement& f);
Weight monomial_weight(const RootDatum& d, const PBWMonomial& m);

/// Extends a diagram automorphism multiplicatively to U(g).
EnvElement apply(const DiagramAutomorphism& a, const EnvElement& f);

}  // namespace affvoa
