#include "affvoa/adjoint_module.hpp"

#include <deque>
#include <stdexcept>

#include "affvoa/echelon.hpp"

namespace affvoa {

namespace {

using EnvEchelon = EchelonBasis<PBWMonomial>;

EnvEchelon::Vec as_vec(const EnvElement& f) { return {f.terms().begin(), f.terms().end()}; }

EnvElement from_vec(const RootDatumPtr& d, const EnvEchelon::Vec& v) {
  EnvElement f(d);
  for (const auto& [m, c] : v) f.add(m, c);
  return f;
}

}  // namespace

int AdjointModule::dimension() const {
  int n = 0;
  for (const auto& [w, b] : weight_spaces) n += static_cast<int>(b.size());
  return n;
}

std::vector<int> AdjointModule::highest_weight_omega() const {
  return generator.datum()->to_omega(highest_weight);
}

std::vector<EnvElement> AdjointModule::zero_weight_space() const {
  auto it = weight_spaces.find(Weight(generator.datum()->rank(), 0));
  return it == weight_spaces.end() ? std::vector<EnvElement>{} : it->second;
}

std::map<Weight, int> AdjointModule::multiplicities() const {
  std::map<Weight, int> m;
  for (const auto& [w, b] : weight_spaces) m[w] = static_cast<int>(b.size());
  return m;
}

AdjointModule generate_adjoint_module(const EnvElement& u) {
  if (u.is_zero()) throw std::invalid_argument("adjoint module: generator is zero");
  const auto& dp = u.datum();
  const auto& d = *dp;
  auto hw = weight_of(u);
  if (!hw) throw std::invalid_argument("adjoint module: generator is not weight-homogeneous");
  for (int i = 0; i < d.rank(); ++i) {
    if (!adjoint_act(d.simple_root(i), u).is_zero())
      throw std::invalid_argument("adjoint module: generator is not a highest-weight vector; ad(" +
                                  d.label(d.simple_root(i)) + ") does not kill it");
  }

  std::map<Weight, EnvEchelon> spaces;
  spaces[*hw].insert(as_vec(u));
  std::deque<std::pair<Weight, EnvElement>> queue{{*hw, u}};
  while (!queue.empty()) {
    auto [w, v] = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < d.rank(); ++i) {
      const int f = d.simple_lowering(i);
      EnvElement next = adjoint_act(f, v);
      if (next.is_zero()) continue;
      Weight nw = w;
      for (std::size_t c = 0; c < nw.size(); ++c) nw[c] += d.weight(f)[c];
      if (spaces[nw].insert(as_vec(next))) queue.emplace_back(nw, std::move(next));
    }
  }

  AdjointModule r{u, *hw, {}};
  for (const auto& [w, ech] : spaces) {
    auto& basis = r.weight_spaces[w];
    for (const auto& row : ech.rows()) basis.push_back(from_vec(dp, row));
  }
  return r;
}

HPolynomial cartan_part(const EnvElement& r) {
  const auto& d = *r.datum();
  HPolynomial p(d.rank());
  for (const auto& [m, c] : r.terms()) {
    Exponents e(d.rank(), 0);
    bool pure = true;
    for (auto b : m) {
      if (!d.is_cartan(b)) {
        pure = false;
        break;
      }
      ++e[d.cartan_slot(b)];
    }
    if (pure) p.add(e, c);
  }
  return p;
}

std::vector<HPolynomial> polynomial_span(const std::vector<HPolynomial>& polys, int nvars) {
  EchelonBasis<Exponents, DegLexGreater> ech;
  for (const auto& p : polys) {
    if (p.num_vars() != nvars) throw std::invalid_argument("polynomial_span: variable count mismatch");
    ech.insert(p.terms());
  }
  std::vector<HPolynomial> out;
  for (const auto& row : ech.rows()) {
    HPolynomial p(nvars);
    for (const auto& [e, c] : row) p.add(e, c);
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<HPolynomial> zero_weight_polynomials(const AdjointModule& r) {
  std::vector<HPolynomial> polys;
  for (const auto& z : r.zero_weight_space()) polys.push_back(cartan_part(z));
  return polynomial_span(polys, r.generator.datum()->rank());
}

}  // namespace affvoa
