#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "affvoa/root_datum.hpp"

namespace affvoa {

/// Element of g as a sparse combination of the Chevalley basis.
class LieElement {
 public:
  explicit LieElement(RootDatumPtr d) : d_(std::move(d)) {}
  static LieElement basis(RootDatumPtr d, int b, const Rational& c = 1);

  const RootDatumPtr& datum() const { return d_; }
  const std::map<int, Rational>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  Rational coeff(int b) const;

  LieElement& add(int b, const Rational& c);
  LieElement& operator+=(const LieElement& o);
  LieElement& operator-=(const LieElement& o);
  LieElement& operator*=(const Rational& s);
  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  friend LieElement operator*(const Rational& s, LieElement a) { return a *= s; }
  friend bool operator==(const LieElement& a, const LieElement& b);

  std::string to_string() const;

 private:
  void check_same(const LieElement& o) const;
  RootDatumPtr d_;
  std::map<int, Rational> t_;
};

LieElement bracket(const LieElement& x, const LieElement& y);

/// Common weight of all terms, or nullopt when the element mixes weights
/// (the zero element counts as not homogeneous).
std::optional<Weight> weight_of(const LieElement& x);

/// Lie algebra automorphism induced by a symmetry of the Dynkin diagram:
/// e_alpha -> sign(alpha) e_sigma(alpha), H(i) -> H(sigma(i)).
class DiagramAutomorphism {
 public:
  /// perm[i] is the image of simple root i (0-based). Throws when the
  /// permutation does not preserve the Cartan matrix.
  static DiagramAutomorphism from_simple_permutation(RootDatumPtr d, std::vector<int> perm);
  /// D_4 only: alpha_1 -> alpha_3 -> alpha_4 -> alpha_1, alpha_2 fixed.
  static DiagramAutomorphism triality(RootDatumPtr d);
  /// D_l: exchanges alpha_{l-1} and alpha_l.
  static DiagramAutomorphism spinor_swap(RootDatumPtr d);

  const RootDatumPtr& datum() const { return d_; }
  int image(int b) const { return image_[b]; }
  int sign(int b) const { return sign_[b]; }
  const std::vector<int>& simple_permutation() const { return perm_; }
  LieElement apply(const LieElement& x) const;
  Weight apply(const Weight& w) const;
  /// Smallest n > 0 with a^n = id on the basis.
  int order() const;

 private:
  DiagramAutomorphism(RootDatumPtr d, std::vector<int> perm);
  RootDatumPtr d_;
  std::vector<int> perm_;
  std::vector<int> image_;
  std::vector<int> sign_;
};

}  // namespace affvoa
