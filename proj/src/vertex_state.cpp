#include "affvoa/vertex_state.hpp"

#include <functional>
#include <stdexcept>

#include "text_format.hpp"

namespace affvoa {

namespace {

bool is_zero_coeff(const UPoly& c) { return c.is_zero(); }
bool is_zero_coeff(const Rational& c) { return c == 0; }

template <class Terms, class C>
void accumulate(Terms& t, const ModeMonomial& m, const C& c) {
  if (is_zero_coeff(c)) return;
  auto [it, inserted] = t.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (is_zero_coeff(it->second)) t.erase(it);
}

std::string factors_string(const RootDatum& d, const ModeMonomial& m) {
  std::string s;
  for (auto k : m) {
    s += d.label(key_basis(k)) + "(-" + std::to_string(key_depth(k)) + ") ";
  }
  return s + "|0>";
}

// Sign, magnitude text and whether the magnitude is exactly 1.
struct CoeffText {
  bool negative;
  std::string text;
  bool unit;
};

CoeffText coeff_text(const Rational& c) {
  Rational mag = abs(c);
  return {c < 0, to_string(mag), mag == 1};
}

CoeffText coeff_text(const UPoly& c) {
  if (c.is_constant()) return coeff_text(c.coeff(0));
  const bool neg = c.leading() < 0;
  UPoly mag = neg ? -c : c;
  return {neg, "(" + mag.to_string("k") + ")", false};
}

std::uint32_t pack(int x, int n) {
  return (static_cast<std::uint32_t>(x) << 10) | static_cast<std::uint32_t>(n + 512);
}

}  // namespace

ModeKey mode_key(int basis, int depth) {
  if (depth < 1 || depth > kMaxModeDepth) throw std::out_of_range("mode depth out of range");
  if (basis < 0 || basis > 0xFFFF) throw std::out_of_range("basis index out of range");
  return (static_cast<ModeKey>(kMaxModeDepth - depth) << 16) | static_cast<ModeKey>(basis);
}

int monomial_degree(const ModeMonomial& m) {
  int s = 0;
  for (auto k : m) s += key_depth(k);
  return s;
}

Weight monomial_weight(const RootDatum& d, const ModeMonomial& m) {
  Weight w(d.rank(), 0);
  for (auto k : m) {
    const auto& wb = d.weight(key_basis(k));
    for (std::size_t i = 0; i < w.size(); ++i) w[i] += wb[i];
  }
  return w;
}

// ---- VertexState ----

template <class C>
VertexState<C> VertexState<C>::vacuum(RootDatumPtr d) {
  VertexState s(std::move(d));
  s.t_.emplace(ModeMonomial{}, C(1));
  return s;
}

template <class C>
C VertexState<C>::coeff(const ModeMonomial& m) const {
  auto it = t_.find(m);
  return it == t_.end() ? C(0) : it->second;
}

template <class C>
VertexState<C>& VertexState<C>::add(const ModeMonomial& m, const C& c) {
  for (std::size_t i = 1; i < m.size(); ++i)
    if (m[i - 1] > m[i]) throw std::invalid_argument("VertexState::add: monomial is not normal-ordered");
  accumulate(t_, m, c);
  return *this;
}

template <class C>
void VertexState<C>::check_same(const VertexState& o) const {
  if (!d_->same_as(*o.d_)) throw std::invalid_argument("states over different root data");
}

template <class C>
VertexState<C>& VertexState<C>::operator+=(const VertexState& o) {
  check_same(o);
  for (const auto& [m, c] : o.t_) accumulate(t_, m, c);
  return *this;
}

template <class C>
VertexState<C>& VertexState<C>::operator-=(const VertexState& o) {
  check_same(o);
  for (const auto& [m, c] : o.t_) accumulate(t_, m, C(0) - c);
  return *this;
}

template <class C>
VertexState<C>& VertexState<C>::operator*=(const C& s) {
  if (is_zero_coeff(s)) {
    t_.clear();
    return *this;
  }
  for (auto& [m, c] : t_) c *= s;
  return *this;
}

template <class C>
std::optional<int> VertexState<C>::degree() const {
  if (t_.empty()) return 0;
  const int d = monomial_degree(t_.begin()->first);
  for (const auto& [m, c] : t_)
    if (monomial_degree(m) != d) return std::nullopt;
  return d;
}

template <class C>
std::optional<Weight> VertexState<C>::weight() const {
  if (t_.empty()) return std::nullopt;
  Weight w = monomial_weight(*d_, t_.begin()->first);
  for (const auto& [m, c] : t_)
    if (monomial_weight(*d_, m) != w) return std::nullopt;
  return w;
}

template <class C>
std::string VertexState<C>::to_string() const {
  if (t_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : t_) {
    const auto ct = coeff_text(c);
    if (!out.empty()) out += ct.negative ? " - " : " + ";
    else if (ct.negative) out += "-";
    if (!ct.unit) out += ct.text + " ";
    out += factors_string(*d_, m);
  }
  return out;
}

// ---- ModeAlgebra ----

template <class C>
std::size_t ModeAlgebra<C>::KeyHash::operator()(const std::pair<std::uint32_t, ModeMonomial>& k) const {
  std::size_t h = std::hash<std::uint32_t>{}(k.first);
  for (auto v : k.second) h ^= std::hash<std::uint32_t>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

template <class C>
ModeAlgebra<C>::ModeAlgebra(RootDatumPtr d, C level) : d_(std::move(d)), level_(std::move(level)) {}

template <class C>
const typename ModeAlgebra<C>::Terms& ModeAlgebra<C>::act(int x, int n, const ModeMonomial& m) {
  const std::pair<std::uint32_t, ModeMonomial> key{pack(x, n), m};
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  const RootDatum& d = *d_;
  Terms out;
  if (n < 0) {
    const ModeKey xk = mode_key(x, -n);
    if (m.empty() || xk <= m.front()) {
      ModeMonomial r;
      r.reserve(m.size() + 1);
      r.push_back(xk);
      r.insert(r.end(), m.begin(), m.end());
      out.emplace(std::move(r), C(1));
    } else {
      // x(-p) y(-q) rest = y(-q) x(-p) rest + [x,y](-p-q) rest
      const int y = key_basis(m.front());
      const int q = key_depth(m.front());
      const ModeMonomial rest(m.begin() + 1, m.end());
      const Terms& xr = act(x, n, rest);
      for (const auto& [mm, c] : xr) {
        const Terms& yr = act(y, -q, mm);
        for (const auto& [m2, c2] : yr) accumulate(out, m2, c * c2);
      }
      for (const auto& t : d.bracket(x, y)) {
        const Terms& br = act(t.index, n - q, rest);
        for (const auto& [m2, c2] : br) accumulate(out, m2, c2 * Rational(t.coeff));
      }
    }
  } else if (!m.empty()) {
    // x(n) y(-q) rest = y(-q) x(n) rest + [x,y](n-q) rest + n delta_{n,q} (x,y) k rest
    const int y = key_basis(m.front());
    const int q = key_depth(m.front());
    const ModeMonomial rest(m.begin() + 1, m.end());
    const Terms& xr = act(x, n, rest);
    for (const auto& [mm, c] : xr) {
      const Terms& yr = act(y, -q, mm);
      for (const auto& [m2, c2] : yr) accumulate(out, m2, c * c2);
    }
    for (const auto& t : d.bracket(x, y)) {
      const Terms& br = act(t.index, n - q, rest);
      for (const auto& [m2, c2] : br) accumulate(out, m2, c2 * Rational(t.coeff));
    }
    if (n == q && d.form(x, y) != 0) accumulate(out, rest, level_ * Rational(n * d.form(x, y)));
  }
  return memo_.emplace(key, std::move(out)).first->second;
}

template <class C>
VertexState<C> ModeAlgebra<C>::act(int x, int n, const VertexState<C>& s) {
  if (!s.datum()->same_as(*d_)) throw std::invalid_argument("mode action: state over a different root datum");
  VertexState<C> r(d_);
  typename VertexState<C>::Terms acc;
  for (const auto& [m, c] : s.terms())
    for (const auto& [m2, c2] : act(x, n, m)) accumulate(acc, m2, c * c2);
  for (const auto& [m, c] : acc) r.add(m, c);
  return r;
}

template <class C>
VertexState<C> ModeAlgebra<C>::act(const LieElement& x, int n, const VertexState<C>& s) {
  VertexState<C> r(d_);
  for (const auto& [b, c] : x.terms()) r += C(c) * act(b, n, s);
  return r;
}

template <class C>
VertexState<C> ModeAlgebra<C>::act_product(const std::vector<std::pair<int, int>>& factors,
                                           const VertexState<C>& s) {
  VertexState<C> r = s;
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) r = act(it->first, it->second, r);
  return r;
}

SymbolicState mode_act(int x, int n, const SymbolicState& s) {
  SymbolicModes alg(s.datum(), UPoly::variable());
  return alg.act(x, n, s);
}

SymbolicState parse_state(RootDatumPtr d, std::string_view text) {
  SymbolicModes alg(d, UPoly::variable());
  SymbolicState total(d);
  for (const auto& term : text::parse_sum(text)) {
    if (!term.vacuum) throw std::invalid_argument("state term must end with |0>");
    UPoly c(1);
    if (!term.coeff.empty()) {
      if (term.coeff.front() == '(') {
        c = UPoly::parse(std::string_view(term.coeff).substr(1, term.coeff.size() - 2), "k");
      } else {
        c = UPoly(parse_rational(term.coeff));
      }
    }
    std::vector<std::pair<int, int>> factors;
    for (const auto& f : term.factors) {
      if (!f.mode) throw std::invalid_argument("state factor '" + f.label + "' needs a mode index, e.g. (-1)");
      factors.emplace_back(d->parse_label(f.label), *f.mode);
    }
    total += (c * Rational(term.sign)) * alg.act_product(factors, SymbolicState::vacuum(d));
  }
  return total;
}

NumericState specialize(const SymbolicState& s, const Rational& k) {
  NumericState r(s.datum());
  for (const auto& [m, c] : s.terms()) r.add(m, c(k));
  return r;
}

namespace {

int root_of(const RootDatum& d, Weight w) {
  auto b = d.root_index(w);
  if (!b) throw std::logic_error("expected root is missing from the root system");
  return *b;
}

// sum_{i=2}^{l} e_{e1-ei}(-1) e_{e1+ei}(-1) applied to s.
SymbolicState apply_v_operator(SymbolicModes& alg, const SymbolicState& s) {
  const RootDatum& d = *alg.datum();
  SymbolicState r(alg.datum());
  for (int i = 1; i < d.rank(); ++i) {
    Weight minus(d.rank(), 0), plus(d.rank(), 0);
    minus[0] = plus[0] = 1;
    minus[i] = -1;
    plus[i] = 1;
    r += alg.act_product({{root_of(d, minus), -1}, {root_of(d, plus), -1}}, s);
  }
  return r;
}

}  // namespace

SymbolicState build_vn(RootDatumPtr d, int n) {
  if (d->type() != RootType::D) throw std::invalid_argument("build_vn: requires a root datum of type D");
  if (n < 1) throw std::invalid_argument("build_vn: n must be positive");
  SymbolicModes alg(d, UPoly::variable());
  SymbolicState s = SymbolicState::vacuum(d);
  for (int i = 0; i < n; ++i) s = apply_v_operator(alg, s);
  return s;
}

SymbolicState build_b_vector(RootDatumPtr d) {
  if (d->type() != RootType::B) throw std::invalid_argument("build_b_vector: requires a root datum of type B");
  SymbolicModes alg(d, UPoly::variable());
  const auto vac = SymbolicState::vacuum(d);
  Weight e1(d->rank(), 0);
  e1[0] = 1;
  const int s = root_of(*d, e1);
  return apply_v_operator(alg, vac) + UPoly(frac(-1, 4)) * alg.act_product({{s, -1}, {s, -1}}, vac);
}

template <class C>
VertexState<C> apply(const DiagramAutomorphism& a, const VertexState<C>& s) {
  if (!a.datum()->same_as(*s.datum())) throw std::invalid_argument("automorphism and state over different root data");
  ModeAlgebra<C> alg(s.datum(), C(0));
  VertexState<C> r(s.datum());
  for (const auto& [m, c] : s.terms()) {
    std::vector<std::pair<int, int>> factors;
    int sign = 1;
    for (auto k : m) {
      factors.emplace_back(a.image(key_basis(k)), -key_depth(k));
      sign *= a.sign(key_basis(k));
    }
    r += (c * Rational(sign)) * alg.act_product(factors, VertexState<C>::vacuum(s.datum()));
  }
  return r;
}

template class VertexState<UPoly>;
template class VertexState<Rational>;
template class ModeAlgebra<UPoly>;
template class ModeAlgebra<Rational>;
template VertexState<UPoly> apply(const DiagramAutomorphism&, const VertexState<UPoly>&);
template VertexState<Rational> apply(const DiagramAutomorphism&, const VertexState<Rational>&);

}  // namespace affvoa
