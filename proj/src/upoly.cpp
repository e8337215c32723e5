#include "affvoa/upoly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace affvoa {

UPoly::UPoly(const Rational& c) {
  if (c != 0) c_.push_back(c);
}

UPoly UPoly::variable() { return from_coeffs({Rational(0), Rational(1)}); }

UPoly UPoly::from_coeffs(std::vector<Rational> coeffs) {
  UPoly p;
  p.c_ = std::move(coeffs);
  p.trim();
  return p;
}

UPoly UPoly::linear(const Rational& a, const Rational& b) { return from_coeffs({a, b}); }

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[i];
}

Rational UPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const UPoly& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  c_ = std::move(r);
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const Rational& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= s;
  return *this;
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

UPoly UPoly::monic() const {
  if (c_.empty()) return *this;
  Rational inv = 1 / c_.back();
  return *this * inv;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  UPoly q, r = *this;
  if (degree() < d.degree()) return {q, r};
  q.c_.assign(degree() - d.degree() + 1, Rational(0));
  while (!r.is_zero() && r.degree() >= d.degree()) {
    int shift = r.degree() - d.degree();
    Rational f = r.leading() / d.leading();
    q.c_[shift] = f;
    for (int i = 0; i <= d.degree(); ++i) r.c_[i + shift] -= f * d.c_[i];
    r.trim();
  }
  q.trim();
  return {q, r};
}

UPoly UPoly::gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = x.divmod(y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

namespace {

std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::vector<Rational> UPoly::rational_roots() const {
  if (c_.empty()) throw std::domain_error("the zero polynomial has every number as a root");
  std::vector<Rational> roots;
  // Strip the factor x^m.
  std::size_t low = 0;
  while (c_[low] == 0) ++low;
  if (low > 0) roots.push_back(0);
  std::vector<Rational> rest(c_.begin() + low, c_.end());
  if (rest.size() <= 1) return roots;

  UPoly p = from_coeffs(rest);
  if (p.degree() == 1) {
    roots.push_back(-p.c_[0] / p.c_[1]);
  } else if (p.degree() == 2) {
    Rational disc = p.c_[1] * p.c_[1] - 4 * p.c_[2] * p.c_[0];
    if (disc >= 0 && mpz_perfect_square_p(disc.get_num_mpz_t()) &&
        mpz_perfect_square_p(disc.get_den_mpz_t())) {
      Rational s(sqrt(mpz_class(disc.get_num())), sqrt(mpz_class(disc.get_den())));
      roots.push_back((-p.c_[1] + s) / (2 * p.c_[2]));
      roots.push_back((-p.c_[1] - s) / (2 * p.c_[2]));
    }
  } else {
    mpz_class scale = 1;
    for (const auto& x : p.c_) scale = lcm(scale, mpz_class(x.get_den()));
    mpz_class a0 = mpz_class(p.c_.front() * scale);
    mpz_class an = mpz_class(p.c_.back() * scale);
    for (const auto& num : divisors(a0))
      for (const auto& den : divisors(an))
        for (int sign : {1, -1}) {
          Rational cand(num * sign, den);
          cand.canonicalize();
          if (p(cand) == 0) roots.push_back(cand);
        }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

std::string UPoly::to_string(std::string_view var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? "-" : "+";
    }
    if (i == 0) {
      out += affvoa::to_string(mag);
      continue;
    }
    if (mag != 1) out += affvoa::to_string(mag) + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

UPoly UPoly::parse(std::string_view text, std::string_view var) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  auto bad = [&] { return std::invalid_argument("cannot parse polynomial in " + std::string(var) + ": '" + std::string(text) + "'"); };
  if (s.empty()) throw bad();
  UPoly result;
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      throw bad();
    }
    Rational coeff = 1;
    bool have_coeff = false;
    std::size_t j = i;
    while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/')) ++j;
    if (j > i) {
      coeff = parse_rational(s.substr(i, j - i));
      have_coeff = true;
      i = j;
    }
    int power = 0;
    if (i < s.size() && s[i] == '*') {
      if (!have_coeff) throw bad();
      ++i;
    }
    if (s.compare(i, var.size(), var) == 0) {
      i += var.size();
      power = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t k = i;
        while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
        if (k == i) throw bad();
        power = std::stoi(s.substr(i, k - i));
        i = k;
      }
    } else if (!have_coeff) {
      throw bad();
    }
    std::vector<Rational> term(power + 1);
    term[power] = coeff * sign;
    result += from_coeffs(std::move(term));
  }
  return result;
}

}  // namespace affvoa
