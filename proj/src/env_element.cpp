#include "affvoa/env_element.hpp"

#include <stdexcept>
#include <tuple>

#include "text_format.hpp"

namespace affvoa {

namespace {

using Terms = std::map<PBWMonomial, Rational>;

void accumulate(Terms& out, const PBWMonomial& m, const Rational& c) {
  auto [it, inserted] = out.try_emplace(m, 0);
  it->second += c;
  if (it->second == 0) out.erase(it);
}

// Normal form of x * m for a normal monomial m. Memoized per thread.
const Terms& left_multiply(const RootDatum& d, int x, const PBWMonomial& m) {
  using Key = std::tuple<int, int, int, PBWMonomial>;
  thread_local std::map<Key, Terms> memo;
  Key key{static_cast<int>(d.type()), d.rank(), x, m};
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  Terms out;
  if (m.empty() || x <= m.front()) {
    PBWMonomial r;
    r.reserve(m.size() + 1);
    r.push_back(static_cast<std::uint16_t>(x));
    r.insert(r.end(), m.begin(), m.end());
    out.emplace(std::move(r), 1);
  } else {
    // x y rest = y (x rest) + [x, y] rest
    const int y = m.front();
    PBWMonomial rest(m.begin() + 1, m.end());
    const Terms xr = left_multiply(d, x, rest);
    for (const auto& [mm, c] : xr)
      for (const auto& [m2, c2] : left_multiply(d, y, mm)) accumulate(out, m2, c * c2);
    for (const auto& t : d.bracket(x, y))
      for (const auto& [m2, c2] : left_multiply(d, t.index, rest)) accumulate(out, m2, c2 * t.coeff);
  }
  return memo.emplace(std::move(key), std::move(out)).first->second;
}

}  // namespace

EnvElement EnvElement::one(RootDatumPtr d) {
  EnvElement e(std::move(d));
  e.t_.emplace(PBWMonomial{}, 1);
  return e;
}

EnvElement EnvElement::generator(RootDatumPtr d, int b) {
  if (b < 0 || b >= d->dim()) throw std::out_of_range("EnvElement: basis index out of range");
  EnvElement e(std::move(d));
  e.t_.emplace(PBWMonomial{static_cast<std::uint16_t>(b)}, 1);
  return e;
}

EnvElement EnvElement::from_lie(const LieElement& x) {
  EnvElement e(x.datum());
  for (const auto& [b, c] : x.terms()) e.add({static_cast<std::uint16_t>(b)}, c);
  return e;
}

Rational EnvElement::coeff(const PBWMonomial& m) const {
  auto it = t_.find(m);
  return it == t_.end() ? Rational(0) : it->second;
}

EnvElement& EnvElement::add(const PBWMonomial& m, const Rational& c) {
  for (std::size_t i = 1; i < m.size(); ++i)
    if (m[i - 1] > m[i]) throw std::invalid_argument("EnvElement::add: monomial is not in PBW order");
  accumulate(t_, m, c);
  return *this;
}

void EnvElement::check_same(const EnvElement& o) const {
  if (!d_->same_as(*o.d_)) throw std::invalid_argument("enveloping-algebra elements over different root data");
}

EnvElement& EnvElement::operator+=(const EnvElement& o) {
  check_same(o);
  for (const auto& [m, c] : o.t_) accumulate(t_, m, c);
  return *this;
}

EnvElement& EnvElement::operator-=(const EnvElement& o) {
  check_same(o);
  for (const auto& [m, c] : o.t_) accumulate(t_, m, -c);
  return *this;
}

EnvElement& EnvElement::operator*=(const Rational& s) {
  if (s == 0) t_.clear();
  for (auto& [m, c] : t_) c *= s;
  return *this;
}

bool operator==(const EnvElement& a, const EnvElement& b) { return a.d_->same_as(*b.d_) && a.t_ == b.t_; }

int EnvElement::degree() const {
  int deg = -1;
  for (const auto& [m, c] : t_) deg = std::max(deg, static_cast<int>(m.size()));
  return deg;
}

std::string EnvElement::to_string() const {
  if (t_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : t_) {
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    Rational mag = abs(c);
    std::string factors;
    for (auto b : m) {
      if (!factors.empty()) factors += " ";
      factors += d_->label(b);
    }
    if (factors.empty()) {
      out += affvoa::to_string(mag);
    } else {
      if (mag != 1) out += affvoa::to_string(mag) + " ";
      out += factors;
    }
  }
  return out;
}

EnvElement EnvElement::parse(RootDatumPtr d, std::string_view text) {
  EnvElement total(d);
  for (const auto& term : text::parse_sum(text)) {
    if (term.vacuum) throw std::invalid_argument("'|0>' is not allowed in an enveloping-algebra element");
    Rational c = term.coeff.empty() ? Rational(1) : parse_rational(term.coeff);
    EnvElement prod = one(d);
    for (auto it = term.factors.rbegin(); it != term.factors.rend(); ++it) {
      if (it->mode) throw std::invalid_argument("mode indices are not allowed in an enveloping-algebra element");
      prod = env_product(generator(d, d->parse_label(it->label)), prod);
    }
    total += (c * term.sign) * prod;
  }
  return total;
}

EnvElement env_product(const EnvElement& a, const EnvElement& b) {
  if (!a.datum()->same_as(*b.datum())) throw std::invalid_argument("env_product: elements over different root data");
  const auto& d = *a.datum();
  Terms out;
  for (const auto& [ma, ca] : a.terms()) {
    Terms cur;
    for (const auto& [mb, cb] : b.terms()) accumulate(cur, mb, ca * cb);
    for (auto it = ma.rbegin(); it != ma.rend(); ++it) {
      Terms next;
      for (const auto& [m, c] : cur)
        for (const auto& [m2, c2] : left_multiply(d, *it, m)) accumulate(next, m2, c * c2);
      cur = std::move(next);
    }
    for (const auto& [m, c] : cur) accumulate(out, m, c);
  }
  EnvElement r(a.datum());
  for (const auto& [m, c] : out) r.add(m, c);
  return r;
}

EnvElement adjoint_act(const LieElement& x, const EnvElement& f) {
  EnvElement xe = EnvElement::from_lie(x);
  return env_product(xe, f) - env_product(f, xe);
}

EnvElement adjoint_act(int basis, const EnvElement& f) {
  return adjoint_act(LieElement::basis(f.datum(), basis), f);
}

Weight monomial_weight(const RootDatum& d, const PBWMonomial& m) {
  Weight w(d.rank(), 0);
  for (auto b : m)
    for (int k = 0; k < d.rank(); ++k) w[k] += d.weight(b)[k];
  return w;
}

std::optional<Weight> weight_of(const EnvElement& f) {
  if (f.is_zero()) return std::nullopt;
  const auto& d = *f.datum();
  Weight w = monomial_weight(d, f.terms().begin()->first);
  for (const auto& [m, c] : f.terms())
    if (monomial_weight(d, m) != w) return std::nullopt;
  return w;
}

EnvElement apply(const DiagramAutomorphism& a, const EnvElement& f) {
  if (!a.datum()->same_as(*f.datum())) throw std::invalid_argument("automorphism applied to an element of another algebra");
  const auto& d = f.datum();
  EnvElement out(d);
  for (const auto& [m, c] : f.terms()) {
    EnvElement prod = EnvElement::one(d);
    for (auto it = m.rbegin(); it != m.rend(); ++it)
      prod = env_product(EnvElement::generator(d, a.image(*it)), prod) ;
    int s = 1;
    for (auto b : m) s *= a.sign(b);
    out += (c * s) * prod;
  }
  return out;
}

}  // namespace affvoa
