#include "affvoa/classifier.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace affvoa {

std::vector<HPolynomial> assemble_system(const std::vector<AdjointModule>& ideals) {
  if (ideals.empty()) return {};
  const int n = ideals.front().generator.datum()->rank();
  std::vector<HPolynomial> all;
  for (const auto& r : ideals) {
    if (r.generator.datum()->rank() != n) throw std::invalid_argument("assemble_system: modules of different rank");
    for (auto& p : zero_weight_polynomials(r)) all.push_back(std::move(p));
  }
  return polynomial_span(all, n);
}

WeightFunctional canonical_family(const WeightFunctional& f) {
  int j = -1;
  for (int i = 0; i < f.rank(); ++i)
    if (!f[i].is_constant()) j = i;
  if (j < 0) return f;
  // t_new = c_j + d_j t, so t = (t_new - c_j) / d_j.
  const Rational cj = f[j].c, dj = f[j].d;
  std::vector<AffineT> out;
  for (const auto& a : f.coords()) out.push_back({a.c - a.d * cj / dj, a.d / dj});
  return WeightFunctional(std::move(out));
}

bool same_family(const WeightFunctional& a, const WeightFunctional& b) {
  return canonical_family(a) == canonical_family(b);
}

bool lies_on(const std::vector<Rational>& w, const WeightFunctional& f) {
  if (static_cast<int>(w.size()) != f.rank()) return false;
  std::optional<Rational> t;
  for (int i = 0; i < f.rank(); ++i) {
    if (f[i].is_constant()) {
      if (f[i].c != w[i]) return false;
      continue;
    }
    const Rational ti = (w[i] - f[i].c) / f[i].d;
    if (t && *t != ti) return false;
    t = ti;
  }
  return true;
}

namespace {

// h = base + sum_j s_j dirs[j].
struct Param {
  std::vector<Rational> base;
  std::vector<std::vector<Rational>> dirs;
};

std::vector<HPolynomial> substituted(const std::vector<HPolynomial>& system, const Param& p) {
  const int n = static_cast<int>(p.base.size());
  const int m = static_cast<int>(p.dirs.size());
  std::vector<HPolynomial> images;
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> lin(m);
    for (int j = 0; j < m; ++j) lin[j] = p.dirs[j][i];
    images.push_back(HPolynomial::affine(p.base[i], lin));
  }
  std::vector<HPolynomial> out;
  for (const auto& q : system) {
    HPolynomial s = m == 0 ? HPolynomial::constant(0, q.evaluate(std::span<const Rational>(p.base)))
                           : q.substitute(images);
    if (!s.is_zero()) out.push_back(std::move(s));
  }
  return out;
}

// Restricts the parametrization to the hyperplane lin = 0 (lin affine in the
// current parameters, not constant).
Param restrict(const Param& p, const HPolynomial& lin) {
  const int m = static_cast<int>(p.dirs.size());
  int j = -1;
  for (int i = 0; i < m; ++i)
    if (lin.linear_coeff(i) != 0) j = i;
  const Rational aj = lin.linear_coeff(j);
  Param r;
  r.base = p.base;
  const Rational shift = -lin.constant_term() / aj;
  for (std::size_t i = 0; i < r.base.size(); ++i) r.base[i] += shift * p.dirs[j][i];
  for (int i = 0; i < m; ++i) {
    if (i == j) continue;
    const Rational f = lin.linear_coeff(i) / aj;
    std::vector<Rational> d = p.dirs[i];
    for (std::size_t c = 0; c < d.size(); ++c) d[c] -= f * p.dirs[j][c];
    r.dirs.push_back(std::move(d));
  }
  return r;
}

std::optional<LinearFactorization> best_split(const std::vector<HPolynomial>& polys) {
  std::optional<LinearFactorization> best;
  for (const auto& q : polys) {
    auto f = factor_linear(q);
    if (!f) continue;
    if (!best || f->factors.size() < best->factors.size()) best = std::move(f);
    if (best->factors.size() == 1) break;
  }
  return best;
}

void branch(const std::vector<HPolynomial>& system, const Param& p, std::vector<Param>& leaves) {
  const auto polys = substituted(system, p);
  for (const auto& q : polys)
    if (q.degree() == 0) return;  // inconsistent
  if (polys.empty()) {
    if (p.dirs.size() >= 2)
      throw std::runtime_error("solve_by_branching: a branch has " + std::to_string(p.dirs.size()) +
                               " free parameters (out of model)");
    leaves.push_back(p);
    return;
  }
  auto split = best_split(polys);
  if (!split) split = best_split(polynomial_span(polys, static_cast<int>(p.dirs.size())));
  if (!split) throw std::runtime_error("solve_by_branching: system does not split into linear factors at " +
                                       polys.front().to_string());
  std::vector<std::string> seen;
  for (const auto& f : split->factors) {
    const std::string key = f.to_string();
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
    seen.push_back(key);
    branch(system, restrict(p, f), leaves);
  }
}

WeightFunctional to_family(const Param& p) {
  std::vector<AffineT> c;
  for (std::size_t i = 0; i < p.base.size(); ++i) c.push_back({p.base[i], p.dirs.empty() ? Rational(0) : p.dirs[0][i]});
  return canonical_family(WeightFunctional(std::move(c)));
}

}  // namespace

ClassificationResult solve_by_branching(const std::vector<HPolynomial>& system, int rank) {
  for (const auto& q : system)
    if (q.num_vars() != rank) throw std::invalid_argument("solve_by_branching: polynomial has the wrong number of variables");
  Param start;
  start.base.assign(rank, 0);
  for (int i = 0; i < rank; ++i) {
    std::vector<Rational> e(rank, 0);
    e[i] = 1;
    start.dirs.push_back(std::move(e));
  }
  std::vector<Param> leaves;
  branch(system, start, leaves);

  ClassificationResult r;
  r.system = system;
  r.leaves = static_cast<int>(leaves.size());
  std::vector<WeightFunctional> lines, points;
  for (const auto& leaf : leaves) {
    WeightFunctional f = to_family(leaf);
    auto& bucket = f.is_parametric() ? lines : points;
    if (std::find(bucket.begin(), bucket.end(), f) == bucket.end()) bucket.push_back(std::move(f));
  }
  for (const auto& pt : points) {
    const auto w = pt.at(0);
    bool covered = std::any_of(lines.begin(), lines.end(), [&](const auto& l) { return lies_on(w, l); });
    if (!covered) r.families.push_back(pt);
  }
  r.families.insert(r.families.end(), lines.begin(), lines.end());
  std::sort(r.families.begin(), r.families.end());

  r.residual_check = true;
  for (const auto& f : r.families)
    for (const auto& q : system)
      if (!f.evaluate(q).is_zero()) r.residual_check = false;
  return r;
}

WeightFunctional closed_form_mu(int rank, const std::vector<int>& s, int variant) {
  if (variant != rank - 1 && variant != rank) throw std::invalid_argument("closed_form_mu: variant must be l-1 or l");
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (s[j] < 1 || s[j] > rank - 2) throw std::invalid_argument("closed_form_mu: S must lie in {1..l-2}");
    if (j > 0 && s[j] <= s[j - 1]) throw std::invalid_argument("closed_form_mu: S must be strictly increasing");
  }
  const int k = static_cast<int>(s.size());
  std::vector<AffineT> c(rank);
  for (int j = 1; j <= k; ++j) {
    Rational v = s[j - 1];
    for (int q = j + 1; q <= k; ++q) v += 2 * ((q - j) % 2 == 0 ? 1 : -1) * s[q - 1];
    const int sign = (k - j + 1) % 2 == 0 ? 1 : -1;
    c[s[j - 1] - 1] = {v + sign * (rank - 1), Rational(sign)};
  }
  c[variant - 1] = {0, 1};
  return WeightFunctional(std::move(c));
}

namespace {

mpz_class ceil_div(const Rational& q) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

mpz_class floor_div(const Rational& q) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

}  // namespace

OrdinaryPart ordinary_part(const WeightFunctional& family) {
  const WeightFunctional f = canonical_family(family);
  OrdinaryPart out{f, "", {}};
  if (!f.is_parametric()) {
    out.constraint = f.dominant_integral_at(0) ? "none" : "empty";
    if (out.constraint == "none") out.members.push_back(f);
    return out;
  }
  // In canonical form some coordinate equals t, so t ranges over Z>=0.
  mpz_class lo = 0;
  std::optional<mpz_class> hi;
  mpz_class period = 1;
  for (const auto& a : f.coords()) {
    if (a.is_constant()) {
      if (a.c < 0 || !is_integer(a.c)) {
        out.constraint = "empty";
        return out;
      }
      continue;
    }
    mpz_lcm(period.get_mpz_t(), period.get_mpz_t(), a.d.get_den_mpz_t());
    mpz_class den = a.c.get_den();
    mpz_lcm(period.get_mpz_t(), period.get_mpz_t(), den.get_mpz_t());
    // c + d t >= 0
    const Rational bound = -a.c / a.d;
    if (a.d > 0) {
      lo = std::max(lo, ceil_div(bound));
    } else {
      const mpz_class b = floor_div(bound);
      hi = hi ? std::min(*hi, b) : b;
    }
  }
  if (hi) {
    for (mpz_class t = lo; t <= *hi; ++t)
      if (f.dominant_integral_at(Rational(t))) out.members.push_back(WeightFunctional::constant(f.at(Rational(t))));
    out.constraint = out.members.empty() ? "empty" : "finite";
    return out;
  }
  std::vector<mpz_class> residues;
  for (mpz_class t = lo; t < lo + period; ++t)
    if (f.dominant_integral_at(Rational(t))) residues.push_back(t % period);
  if (residues.empty()) {
    out.constraint = "empty";
  } else if (lo == 0 && static_cast<mpz_class>(static_cast<long>(residues.size())) == period) {
    out.constraint = "t in Z>=0";
  } else {
    std::string s = "t in Z>=0, t >= " + lo.get_str();
    if (period != 1) {
      s += ", t mod " + period.get_str() + " in {";
      std::sort(residues.begin(), residues.end());
      for (std::size_t i = 0; i < residues.size(); ++i) s += (i ? "," : "") + residues[i].get_str();
      s += "}";
    }
    out.constraint = s;
  }
  return out;
}

std::vector<OrdinaryPart> filter_ordinary(const ClassificationResult& r) {
  std::vector<OrdinaryPart> out;
  for (const auto& f : r.families) {
    auto part = ordinary_part(f);
    if (!part.is_empty()) out.push_back(std::move(part));
  }
  return out;
}

}  // namespace affvoa
