#include "affvoa/hpoly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace affvoa {

bool DegLexGreater::operator()(const Exponents& a, const Exponents& b) const {
  const int da = std::accumulate(a.begin(), a.end(), 0);
  const int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da > db;
  return a > b;
}

HPolynomial HPolynomial::constant(int nvars, const Rational& c) {
  HPolynomial p(nvars);
  p.add(Exponents(nvars, 0), c);
  return p;
}

HPolynomial HPolynomial::variable(int nvars, int i) {
  if (i < 0 || i >= nvars) throw std::out_of_range("HPolynomial::variable: index out of range");
  HPolynomial p(nvars);
  Exponents e(nvars, 0);
  e[i] = 1;
  p.add(e, 1);
  return p;
}

HPolynomial HPolynomial::affine(const Rational& c0, std::span<const Rational> coeffs) {
  const int n = static_cast<int>(coeffs.size());
  HPolynomial p = constant(n, c0);
  for (int i = 0; i < n; ++i) {
    Exponents e(n, 0);
    e[i] = 1;
    p.add(e, coeffs[i]);
  }
  return p;
}

int HPolynomial::degree() const {
  if (t_.empty()) return -1;
  const auto& e = t_.begin()->first;
  return std::accumulate(e.begin(), e.end(), 0);
}

int HPolynomial::degree_in(int var) const {
  int d = t_.empty() ? -1 : 0;
  for (const auto& [e, c] : t_) d = std::max(d, e[var]);
  return d;
}

Rational HPolynomial::coeff(const Exponents& e) const {
  auto it = t_.find(e);
  return it == t_.end() ? Rational(0) : it->second;
}

Rational HPolynomial::constant_term() const { return coeff(Exponents(n_, 0)); }

Rational HPolynomial::linear_coeff(int i) const {
  Exponents e(n_, 0);
  e[i] = 1;
  return coeff(e);
}

HPolynomial& HPolynomial::add(const Exponents& e, const Rational& c) {
  if (static_cast<int>(e.size()) != n_) throw std::invalid_argument("HPolynomial: exponent vector has wrong length");
  auto [it, inserted] = t_.try_emplace(e, 0);
  it->second += c;
  if (it->second == 0) t_.erase(it);
  return *this;
}

HPolynomial& HPolynomial::operator+=(const HPolynomial& o) {
  if (o.n_ != n_) throw std::invalid_argument("HPolynomial: variable count mismatch");
  axpy(t_, Rational(1), o.t_);
  return *this;
}

HPolynomial& HPolynomial::operator-=(const HPolynomial& o) {
  if (o.n_ != n_) throw std::invalid_argument("HPolynomial: variable count mismatch");
  axpy(t_, Rational(-1), o.t_);
  return *this;
}

HPolynomial& HPolynomial::operator*=(const Rational& s) {
  if (s == 0) t_.clear();
  for (auto& [e, c] : t_) c *= s;
  return *this;
}

HPolynomial operator*(const HPolynomial& a, const HPolynomial& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("HPolynomial: variable count mismatch");
  HPolynomial r(a.n_);
  for (const auto& [ea, ca] : a.t_)
    for (const auto& [eb, cb] : b.t_) {
      Exponents e(a.n_);
      for (int i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
      r.add(e, ca * cb);
    }
  return r;
}

HPolynomial HPolynomial::monic() const {
  if (t_.empty()) return *this;
  return (1 / t_.begin()->second) * HPolynomial(*this);
}

UPoly HPolynomial::evaluate(std::span<const UPoly> values) const {
  if (static_cast<int>(values.size()) != n_) throw std::invalid_argument("HPolynomial::evaluate: wrong number of values");
  UPoly total;
  for (const auto& [e, c] : t_) {
    UPoly term(c);
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < e[i]; ++k) term *= values[i];
    total += term;
  }
  return total;
}

Rational HPolynomial::evaluate(std::span<const Rational> values) const {
  if (static_cast<int>(values.size()) != n_) throw std::invalid_argument("HPolynomial::evaluate: wrong number of values");
  Rational total = 0;
  for (const auto& [e, c] : t_) {
    Rational term = c;
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < e[i]; ++k) term *= values[i];
    total += term;
  }
  return total;
}

HPolynomial HPolynomial::substitute(std::span<const HPolynomial> images) const {
  if (static_cast<int>(images.size()) != n_) throw std::invalid_argument("HPolynomial::substitute: wrong number of images");
  const int m = images.empty() ? 0 : images[0].num_vars();
  HPolynomial total(m);
  for (const auto& [e, c] : t_) {
    HPolynomial term = constant(m, c);
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < e[i]; ++k) term = term * images[i];
    total += term;
  }
  return total;
}

std::optional<HPolynomial> HPolynomial::divide_exact(const HPolynomial& q) const {
  if (q.is_zero()) throw std::domain_error("HPolynomial: division by zero");
  HPolynomial quot(n_), rem = *this;
  const auto& [lq, cq] = *q.t_.begin();
  while (!rem.is_zero()) {
    const auto [lr, cr] = *rem.t_.begin();
    Exponents shift(n_);
    for (int i = 0; i < n_; ++i) {
      shift[i] = lr[i] - lq[i];
      if (shift[i] < 0) return std::nullopt;
    }
    HPolynomial mono(n_);
    mono.add(shift, cr / cq);
    quot += mono;
    rem -= mono * q;
  }
  return quot;
}

std::string HPolynomial::to_string() const {
  if (t_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : t_) {
    std::string mono;
    for (int i = 0; i < n_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "h" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? "-" : "+";
    }
    Rational mag = abs(c);
    if (mono.empty()) {
      out += affvoa::to_string(mag);
    } else {
      if (mag != 1) out += affvoa::to_string(mag) + "*";
      out += mono;
    }
  }
  return out;
}

std::string LinearFactorization::to_string() const {
  std::string out;
  if (unit != 1 || factors.empty()) out += affvoa::to_string(unit);
  for (const auto& f : factors) {
    if (!out.empty()) out += "*";
    if (f.terms().size() == 1) out += f.to_string();
    else out += "(" + f.to_string() + ")";
  }
  return out;
}

namespace {

// S with S^2 = d and S of degree <= 1, if one exists over Q.
std::optional<HPolynomial> affine_sqrt(const HPolynomial& d) {
  const int n = d.num_vars();
  if (d.is_zero()) return HPolynomial(n);
  auto rational_sqrt = [](const Rational& q) -> std::optional<Rational> {
    if (q < 0) return std::nullopt;
    if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) return std::nullopt;
    return Rational(sqrt(mpz_class(q.get_num())), sqrt(mpz_class(q.get_den())));
  };
  if (d.degree() == 0) {
    auto s = rational_sqrt(d.constant_term());
    if (!s) return std::nullopt;
    return HPolynomial::constant(n, *s);
  }
  if (d.degree() != 2) return std::nullopt;
  int y = -1;
  for (int i = 0; i < n && y < 0; ++i) {
    Exponents e(n, 0);
    e[i] = 2;
    if (d.coeff(e) != 0) y = i;
  }
  if (y < 0) return std::nullopt;
  Exponents ey(n, 0);
  ey[y] = 2;
  auto sy = rational_sqrt(d.coeff(ey));
  if (!sy) return std::nullopt;
  std::vector<Rational> lin(n, Rational(0));
  lin[y] = *sy;
  for (int j = 0; j < n; ++j) {
    if (j == y) continue;
    Exponents e(n, 0);
    e[y] = 1;
    e[j] = 1;
    lin[j] = d.coeff(e) / (2 * *sy);
  }
  Exponents e1(n, 0);
  e1[y] = 1;
  Rational c0 = d.coeff(e1) / (2 * *sy);
  HPolynomial s = HPolynomial::affine(c0, lin);
  if (!(s * s == d)) return std::nullopt;
  return s;
}

bool split_into(const HPolynomial& p, LinearFactorization& out);

// Splits p = x*B + C with B nonconstant as B * (x + C/B).
bool split_linear_variable(const HPolynomial& p, LinearFactorization& out) {
  const int n = p.num_vars();
  for (int x = 0; x < n; ++x) {
    if (p.degree_in(x) != 1) continue;
    HPolynomial b(n), c(n);
    for (const auto& [e, coef] : p.terms()) {
      if (e[x] == 1) {
        Exponents r = e;
        r[x] = 0;
        b.add(r, coef);
      } else {
        c.add(e, coef);
      }
    }
    if (b.degree() < 1) continue;
    auto q = c.divide_exact(b);
    if (!q || q->degree() > 1) continue;
    LinearFactorization sub{Rational(1), {}};
    if (!split_into(b, sub)) continue;
    out.unit *= sub.unit;
    for (auto& f : sub.factors) out.factors.push_back(std::move(f));
    out.factors.push_back(HPolynomial::variable(n, x) + *q);
    return true;
  }
  return false;
}

bool split_quadric(const HPolynomial& p, LinearFactorization& out) {
  const int n = p.num_vars();
  for (int x = 0; x < n; ++x) {
    if (p.degree_in(x) != 2) continue;
    Rational a = 0;
    HPolynomial b(n), c(n);
    for (const auto& [e, coef] : p.terms()) {
      Exponents r = e;
      r[x] = 0;
      if (e[x] == 2) a += coef;
      else if (e[x] == 1) b.add(r, coef);
      else c.add(e, coef);
    }
    HPolynomial disc = b * b - (4 * a) * c;
    auto s = affine_sqrt(disc);
    if (!s) return false;
    const Rational inv = 1 / (2 * a);
    HPolynomial xv = HPolynomial::variable(n, x);
    out.unit *= a;
    out.factors.push_back(xv + inv * (b - *s));
    out.factors.push_back(xv + inv * (b + *s));
    return true;
  }
  return false;
}

bool split_into(const HPolynomial& p0, LinearFactorization& out) {
  const int n = p0.num_vars();
  HPolynomial p = p0;
  // Monomial content.
  Exponents content(n, 0);
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    for (int i = 0; i < n; ++i) content[i] = first ? e[i] : std::min(content[i], e[i]);
    first = false;
  }
  if (std::any_of(content.begin(), content.end(), [](int k) { return k > 0; })) {
    HPolynomial mono(n);
    mono.add(content, 1);
    p = *p.divide_exact(mono);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < content[i]; ++k) out.factors.push_back(HPolynomial::variable(n, i));
  }
  if (p.degree() == 0) {
    out.unit *= p.constant_term();
    return true;
  }
  if (p.degree() == 1) {
    out.factors.push_back(p);
    return true;
  }
  if (split_linear_variable(p, out)) return true;
  if (p.degree() == 2) return split_quadric(p, out);
  return false;
}

}  // namespace

std::optional<LinearFactorization> factor_linear(const HPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("factor_linear: zero polynomial");
  LinearFactorization raw{Rational(1), {}};
  if (!split_into(p, raw)) return std::nullopt;
  LinearFactorization out{raw.unit, {}};
  for (auto& f : raw.factors) {
    const Rational lead = f.terms().begin()->second;
    out.unit *= lead;
    out.factors.push_back(f.monic());
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const HPolynomial& a, const HPolynomial& b) { return a.to_string() < b.to_string(); });
  return out;
}

}  // namespace affvoa
