#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "affvoa/hpoly.hpp"
#include "affvoa/upoly.hpp"

namespace affvoa {

/// c + d t with exact rationals.
struct AffineT {
  Rational c = 0;
  Rational d = 0;

  bool is_constant() const { return d == 0; }
  Rational at(const Rational& t) const { return c + d * t; }
  UPoly as_poly() const { return UPoly::linear(c, d); }
  /// `-2-t`, `t`, `3/2`, `1+2t`
  std::string to_string() const;
  friend bool operator==(const AffineT&, const AffineT&) = default;
  friend bool operator<(const AffineT& a, const AffineT& b) {
    if (a.d != b.d) return a.d < b.d;
    return a.c < b.c;
  }
};

/// Element of h^* in fundamental-weight coordinates, mu(h_i) for each i,
/// affine in at most one formal parameter t.
class WeightFunctional {
 public:
  WeightFunctional() = default;
  explicit WeightFunctional(std::vector<AffineT> coords) : c_(std::move(coords)) {}
  static WeightFunctional constant(std::span<const Rational> coords);
  static WeightFunctional constant(std::span<const int> coords);

  int rank() const { return static_cast<int>(c_.size()); }
  const std::vector<AffineT>& coords() const { return c_; }
  const AffineT& operator[](int i) const { return c_[i]; }
  bool is_parametric() const;

  /// The weight at a value of t.
  std::vector<Rational> at(const Rational& t) const;
  /// p(mu) as a polynomial in t.
  UPoly evaluate(const HPolynomial& p) const;

  /// Dominant integral at this t.
  bool dominant_integral_at(const Rational& t) const;

  /// Display form, e.g. `(-2-t)w1 + t w3`, `-w2`, `0`.
  std::string to_string() const;

  friend bool operator==(const WeightFunctional&, const WeightFunctional&) = default;
  /// Constant weights first, then coordinatewise.
  friend bool operator<(const WeightFunctional& a, const WeightFunctional& b) {
    if (a.is_parametric() != b.is_parametric()) return b.is_parametric();
    return a.c_ < b.c_;
  }

 private:
  std::vector<AffineT> c_;
};

}  // namespace affvoa
