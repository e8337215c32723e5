#include "affvoa/zhu.hpp"

#include <stdexcept>

namespace affvoa {

namespace {

EnvElement monomial_image(const RootDatumPtr& d, const ModeMonomial& m) {
  EnvElement r = EnvElement::one(d);
  int shift = 0;
  // x_m ... x_1: multiply each later factor on the left.
  for (auto k : m) {
    r = env_product(EnvElement::generator(d, key_basis(k)), r);
    shift += key_depth(k) - 1;
  }
  return shift % 2 == 0 ? r : Rational(-1) * r;
}

}  // namespace

EnvElement zhu_F(const NumericState& s) {
  EnvElement out(s.datum());
  for (const auto& [m, c] : s.terms()) out += c * monomial_image(s.datum(), m);
  return out;
}

EnvElement zhu_F(const SymbolicState& s, const std::optional<Rational>& k) {
  NumericState n(s.datum());
  for (const auto& [m, c] : s.terms()) {
    if (!c.is_constant() && !k)
      throw std::invalid_argument("zhu_F: coefficients depend on k; a numeric level is required");
    n.add(m, k ? c(*k) : c.coeff(0));
  }
  return zhu_F(n);
}

}  // namespace affvoa
