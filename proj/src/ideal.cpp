#include "affvoa/ideal.hpp"

#include <climits>
#include <deque>
#include <stdexcept>

namespace affvoa {

namespace {

void enumerate(const RootDatum& d, int remaining, ModeKey min_key, ModeMonomial& cur,
               std::map<Weight, std::vector<ModeMonomial>>& out) {
  if (remaining == 0) {
    out[monomial_weight(d, cur)].push_back(cur);
    return;
  }
  for (int depth = remaining; depth >= 1; --depth) {
    for (int b = 0; b < d.dim(); ++b) {
      const ModeKey k = mode_key(b, depth);
      if (k < min_key) continue;
      cur.push_back(k);
      enumerate(d, remaining - depth, k, cur, out);
      cur.pop_back();
    }
  }
}

StateEchelon::Vec as_vec(const NumericState& s) { return {s.terms().begin(), s.terms().end()}; }

NumericState from_vec(const RootDatumPtr& d, const StateEchelon::Vec& v) {
  NumericState s(d);
  for (const auto& [m, c] : v) s.add(m, c);
  return s;
}

Weight shifted(const Weight& w, const Weight& by, int sign = 1) {
  Weight r = w;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += sign * by[i];
  return r;
}

}  // namespace

std::map<Weight, std::vector<ModeMonomial>> monomials_of_degree(const RootDatum& d, int degree) {
  if (degree < 0) throw std::invalid_argument("graded component: degree must be nonnegative");
  std::map<Weight, std::vector<ModeMonomial>> out;
  ModeMonomial cur;
  enumerate(d, degree, 0, cur, out);
  return out;
}

GradedComponent graded_component(const RootDatum& d, int degree, const Weight& weight) {
  auto all = monomials_of_degree(d, degree);
  GradedComponent g{degree, weight, {}};
  if (auto it = all.find(weight); it != all.end()) g.basis = std::move(it->second);
  return g;
}

IdealData::IdealData(RootDatumPtr d, Rational level, std::vector<NumericState> generators, int cutoff)
    : d_(d), level_(level), gens_(std::move(generators)), cutoff_(cutoff), modes_(d, level) {
  if (cutoff < 0) throw std::invalid_argument("ideal: cutoff must be nonnegative");
  const RootDatum& rd = *d_;

  // Close the generators under the positive part of the affine algebra.
  std::vector<std::map<Weight, StateEchelon>> top(cutoff + 1);
  std::deque<NumericState> work;
  auto add_top = [&](const NumericState& s) {
    if (s.is_zero()) return;
    auto deg = s.degree();
    auto w = s.weight();
    if (!deg || !w) throw std::invalid_argument("ideal: generator is not homogeneous");
    if (*deg > cutoff_) return;
    if (top[*deg][*w].insert(as_vec(s))) work.push_back(s);
  };
  for (const auto& g : gens_) {
    if (!g.datum()->same_as(rd)) throw std::invalid_argument("ideal: generator over a different root datum");
    add_top(g);
  }
  while (!work.empty()) {
    NumericState s = std::move(work.front());
    work.pop_front();
    for (int i = 0; i < rd.rank(); ++i) add_top(modes_.act(rd.simple_root(i), 0, s));
    add_top(modes_.act(rd.lowest_root(), 1, s));
  }

  comp_.resize(cutoff_ + 1);
  for (int deg = 0; deg <= cutoff_; ++deg) {
    auto& here = comp_[deg];
    std::deque<NumericState> fresh;
    auto insert = [&](const NumericState& s) {
      if (s.is_zero()) return;
      if (here[*s.weight()].insert(as_vec(s))) fresh.push_back(s);
    };
    for (const auto& [w, ech] : top[deg])
      for (const auto& row : ech.rows()) insert(from_vec(d_, row));
    if (deg > 0) {
      for (const auto& [w, ech] : comp_[deg - 1])
        for (const auto& row : ech.rows()) {
          const NumericState s = from_vec(d_, row);
          for (int x = 0; x < rd.dim(); ++x) insert(modes_.act(x, -1, s));
        }
    }
    // Closure under g(0), generated by the simple e_i(0) and f_i(0).
    while (!fresh.empty()) {
      NumericState s = std::move(fresh.front());
      fresh.pop_front();
      for (int i = 0; i < rd.rank(); ++i) {
        insert(modes_.act(rd.simple_root(i), 0, s));
        insert(modes_.act(rd.simple_lowering(i), 0, s));
      }
    }
  }
}

const StateEchelon& IdealData::component(int degree, const Weight& weight) const {
  if (degree < 0) return empty_;
  if (degree > cutoff_) throw std::out_of_range("ideal: degree above the cutoff");
  auto it = comp_[degree].find(weight);
  return it == comp_[degree].end() ? empty_ : it->second;
}

int IdealData::dimension(int degree) const {
  int n = 0;
  for (const auto& [w, e] : comp_.at(degree)) n += static_cast<int>(e.dimension());
  return n;
}

std::vector<NumericState> ideal_component(const IdealData& j, int degree, const Weight& weight) {
  std::vector<NumericState> out;
  for (const auto& row : j.component(degree, weight).rows()) out.push_back(from_vec(j.datum(), row));
  return out;
}

std::vector<SingularHit> search_singular(const IdealData& j, int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("search: max degree must be nonnegative");
  if (max_degree > j.cutoff()) throw std::invalid_argument("search: max degree exceeds the ideal cutoff");
  const RootDatum& d = *j.datum();
  const auto gens = annihilation_generators(d);
  auto& modes = j.modes();

  using AugKey = std::pair<int, ModeMonomial>;
  std::vector<SingularHit> hits;
  for (int deg = 0; deg <= max_degree; ++deg) {
    for (const auto& [w, monos] : monomials_of_degree(d, deg)) {
      const auto omega = d.to_omega(w);
      bool dominant = true;
      for (int c : omega) dominant = dominant && c >= 0;
      if (!dominant) continue;

      const auto& jw = j.component(deg, w);
      EchelonBasis<AugKey> ech;
      for (const auto& m : monos) {
        if (jw.is_pivot(m)) continue;  // non-pivot monomials span the quotient
        EchelonBasis<AugKey>::Vec row;
        NumericState s(j.datum());
        s.add(m, 1);
        for (std::size_t g = 0; g < gens.size(); ++g) {
          const auto [x, n] = gens[g];
          NumericState img = modes.act(x, n, s);
          if (img.is_zero()) continue;
          const int tdeg = deg - n;
          const Weight tw = shifted(w, d.weight(x));
          StateEchelon::Vec v = as_vec(img);
          j.component(tdeg, tw).reduce(v);
          for (auto& [mm, c] : v) row.emplace(AugKey{static_cast<int>(g), mm}, c);
        }
        row.emplace(AugKey{INT_MAX, m}, 1);
        ech.insert(std::move(row));
      }
      SingularHit hit{deg, w, {}};
      for (const auto& row : ech.rows()) {
        if (row.begin()->first.first != INT_MAX) continue;
        NumericState s(j.datum());
        for (const auto& [k, c] : row) s.add(k.second, c);
        hit.basis.push_back(std::move(s));
      }
      if (!hit.basis.empty()) hits.push_back(std::move(hit));
    }
  }
  return hits;
}

}  // namespace affvoa
