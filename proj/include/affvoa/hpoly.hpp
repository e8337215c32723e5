#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "affvoa/echelon.hpp"
#include "affvoa/upoly.hpp"

namespace affvoa {

using Exponents = std::vector<int>;

/// Degree-lexicographic order with h_1 > h_2 > ...; larger monomials first,
/// so the first entry of a map is the leading term.
struct DegLexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Polynomial in the commuting simple coroots h_1..h_l (an element of S(h))
/// with rational coefficients.
class HPolynomial {
 public:
  using Terms = SparseVec<Exponents, DegLexGreater>;

  explicit HPolynomial(int nvars) : n_(nvars) {}
  static HPolynomial constant(int nvars, const Rational& c);
  /// h_i, 0-based.
  static HPolynomial variable(int nvars, int i);
  /// c_0 + sum_i coeffs[i] h_i.
  static HPolynomial affine(const Rational& c0, std::span<const Rational> coeffs);

  int num_vars() const { return n_; }
  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  int degree() const;
  int degree_in(int var) const;
  Rational coeff(const Exponents& e) const;
  Rational constant_term() const;
  /// Coefficient of h_i in a polynomial of degree <= 1.
  Rational linear_coeff(int i) const;

  HPolynomial& add(const Exponents& e, const Rational& c);
  HPolynomial& operator+=(const HPolynomial& o);
  HPolynomial& operator-=(const HPolynomial& o);
  HPolynomial& operator*=(const Rational& s);
  friend HPolynomial operator+(HPolynomial a, const HPolynomial& b) { return a += b; }
  friend HPolynomial operator-(HPolynomial a, const HPolynomial& b) { return a -= b; }
  friend HPolynomial operator*(const Rational& s, HPolynomial a) { return a *= s; }
  friend HPolynomial operator*(const HPolynomial& a, const HPolynomial& b);
  friend bool operator==(const HPolynomial& a, const HPolynomial& b) { return a.n_ == b.n_ && a.t_ == b.t_; }

  /// Scales so that the leading coefficient is 1 (zero stays zero).
  HPolynomial monic() const;

  /// Substitutes h_i -> values[i]; each value is a polynomial in one
  /// parameter t.
  UPoly evaluate(std::span<const UPoly> values) const;
  Rational evaluate(std::span<const Rational> values) const;
  /// Substitutes h_i -> images[i] (polynomials in a new set of variables).
  HPolynomial substitute(std::span<const HPolynomial> images) const;

  /// Exact quotient p / q, or nullopt when q does not divide p.
  std::optional<HPolynomial> divide_exact(const HPolynomial& q) const;

  /// `h1*h2+2*h1-3`; variables are named h1..hl.
  std::string to_string() const;

 private:
  int n_;
  Terms t_;
};

/// p = unit * prod factors, every factor affine-linear and monic.
struct LinearFactorization {
  Rational unit;
  std::vector<HPolynomial> factors;
  std::string to_string() const;
};

/// Splits p into affine-linear factors over Q, or returns nullopt when it
/// does not split. Handles monomial content, polynomials linear in some
/// variable, and quadrics; higher-degree cases that need more are reported
/// as not splitting. Throws on the zero polynomial.
std::optional<LinearFactorization> factor_linear(const HPolynomial& p);

}  // namespace affvoa
