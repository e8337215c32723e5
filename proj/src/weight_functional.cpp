#include "affvoa/weight_functional.hpp"

namespace affvoa {

std::string AffineT::to_string() const {
  std::string out;
  if (c != 0 || d == 0) out = affvoa::to_string(c);
  if (d != 0) {
    const Rational mag = abs(d);
    if (d < 0) out += "-";
    else if (!out.empty()) out += "+";
    if (mag != 1) out += affvoa::to_string(mag);
    out += "t";
  }
  return out;
}

WeightFunctional WeightFunctional::constant(std::span<const Rational> coords) {
  std::vector<AffineT> c;
  for (const auto& x : coords) c.push_back({x, 0});
  return WeightFunctional(std::move(c));
}

WeightFunctional WeightFunctional::constant(std::span<const int> coords) {
  std::vector<AffineT> c;
  for (int x : coords) c.push_back({Rational(x), 0});
  return WeightFunctional(std::move(c));
}

bool WeightFunctional::is_parametric() const {
  for (const auto& a : c_)
    if (!a.is_constant()) return true;
  return false;
}

std::vector<Rational> WeightFunctional::at(const Rational& t) const {
  std::vector<Rational> v;
  for (const auto& a : c_) v.push_back(a.at(t));
  return v;
}

UPoly WeightFunctional::evaluate(const HPolynomial& p) const {
  std::vector<UPoly> vals;
  for (const auto& a : c_) vals.push_back(a.as_poly());
  return p.evaluate(vals);
}

bool WeightFunctional::dominant_integral_at(const Rational& t) const {
  for (const auto& a : c_) {
    const Rational v = a.at(t);
    if (v < 0 || !is_integer(v)) return false;
  }
  return true;
}

std::string WeightFunctional::to_string() const {
  std::string out;
  for (int i = 0; i < rank(); ++i) {
    const AffineT& a = c_[i];
    if (a.c == 0 && a.d == 0) continue;
    const std::string w = "w" + std::to_string(i + 1);
    std::string term;
    if (a.d == 0) {
      if (a.c == 1) term = w;
      else if (a.c == -1) term = "-" + w;
      else term = affvoa::to_string(a.c) + w;
    } else if (a.c == 0) {
      term = (a.d == 1 ? "" : a.d == -1 ? "-" : affvoa::to_string(a.d)) + "t " + w;
    } else {
      term = "(" + a.to_string() + ")" + w;
    }
    if (!out.empty()) {
      if (term.front() == '-') out += " - " + term.substr(1);
      else out += " + " + term;
    } else {
      out = term;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace affvoa
