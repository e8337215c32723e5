#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "affvoa/rational.hpp"

namespace affvoa {

/// Univariate polynomial over Q. Used both for coefficients in the
/// symbolic level k and for values of weight polynomials along a
/// one-parameter family t. Coefficients are stored low degree first and
/// the leading coefficient is never zero.
class UPoly {
 public:
  UPoly() = default;
  UPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  UPoly(long c) : UPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static UPoly variable();
  static UPoly from_coeffs(std::vector<Rational> coeffs);
  /// a + b x
  static UPoly linear(const Rational& a, const Rational& b);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  Rational coeff(int i) const;
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& leading() const { return c_.back(); }

  Rational operator()(const Rational& x) const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const UPoly& o);
  UPoly& operator*=(const Rational& s);

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(UPoly a, const UPoly& b) { return a *= b; }
  friend UPoly operator*(UPoly a, const Rational& s) { return a *= s; }
  friend UPoly operator*(const Rational& s, UPoly a) { return a *= s; }
  UPoly operator-() const;
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  UPoly monic() const;
  /// Quotient and remainder; throws std::domain_error on division by zero.
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const;
  /// Monic gcd; gcd(0, 0) = 0.
  static UPoly gcd(const UPoly& a, const UPoly& b);

  /// Distinct rational roots in increasing order.
  std::vector<Rational> rational_roots() const;

  /// Human-readable form, e.g. `k+2`, `-1/2*k^2+3`.
  std::string to_string(std::string_view var = "k") const;
  /// Inverse of to_string for a single variable name.
  static UPoly parse(std::string_view text, std::string_view var = "k");

 private:
  void trim();
  std::vector<Rational> c_;
};

}  // namespace affvoa
