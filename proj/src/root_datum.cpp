#include "affvoa/root_datum.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "affvoa/dense.hpp"

namespace affvoa {

std::string to_string(RootType t) { return t == RootType::B ? "B" : "D"; }

RootType parse_root_type(std::string_view s) {
  if (s == "B" || s == "b") return RootType::B;
  if (s == "D" || s == "d") return RootType::D;
  throw std::invalid_argument("unsupported root system type '" + std::string(s) + "' (expected B or D)");
}

namespace {

int dot(const Weight& a, const Weight& b) {
  int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Weight negated(Weight w) {
  for (auto& x : w) x = -x;
  return w;
}

// Integer matrices of the defining representation, stored row-major.
struct IntMatrix {
  int n;
  std::vector<long> a;
  explicit IntMatrix(int size) : n(size), a(static_cast<std::size_t>(size) * size, 0) {}
  long& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  long at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

IntMatrix commutator(const IntMatrix& x, const IntMatrix& y) {
  const int n = x.n;
  IntMatrix r(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      long xik = x.at(i, k), yik = y.at(i, k);
      if (xik == 0 && yik == 0) continue;
      for (int j = 0; j < n; ++j) r.at(i, j) += xik * y.at(k, j) - yik * x.at(k, j);
    }
  return r;
}

long trace_product(const IntMatrix& x, const IntMatrix& y) {
  long t = 0;
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j) t += x.at(i, j) * y.at(j, i);
  return t;
}

// Root vector of so(2l) (resp. so(2l+1)) for a root given in epsilon
// coordinates. Indices 0..l-1 carry +eps, l..2l-1 carry -eps, and index 2l
// (type B only) is the extra coordinate, on which the invariant symmetric
// form takes the value -2.
IntMatrix root_matrix(const Weight& eps, int l, int n) {
  IntMatrix m(n);
  std::vector<int> idx;
  for (int k = 0; k < l; ++k)
    if (eps[k] != 0) idx.push_back(k);
  if (idx.size() == 2) {
    int i = idx[0], j = idx[1];
    int si = eps[i], sj = eps[j];
    if (si > 0 && sj < 0) {
      m.at(i, j) = 1;
      m.at(j + l, i + l) = -1;
    } else if (si < 0 && sj > 0) {
      m.at(j, i) = 1;
      m.at(i + l, j + l) = -1;
    } else if (si > 0 && sj > 0) {
      m.at(i, j + l) = 1;
      m.at(j, i + l) = -1;
    } else {
      m.at(j + l, i) = 1;
      m.at(i + l, j) = -1;
    }
  } else {
    const int i = idx.at(0);
    const int z = 2 * l;
    if (eps[i] > 0) {
      m.at(i, z) = 2;
      m.at(z, i + l) = 1;
    } else {
      m.at(z, i) = 1;
      m.at(i + l, z) = 2;
    }
  }
  return m;
}

}  // namespace

RootDatum::RootDatum(RootType type, int rank) : type_(type), rank_(rank) {
  if (type == RootType::D && rank < 3)
    throw std::invalid_argument("type D requires rank >= 3, got " + std::to_string(rank));
  if (type == RootType::B && rank < 2)
    throw std::invalid_argument("type B requires rank >= 2, got " + std::to_string(rank));
  if (rank > 16) throw std::invalid_argument("rank " + std::to_string(rank) + " is larger than supported (16)");
  const int l = rank;

  // Simple roots.
  for (int i = 0; i + 1 < l; ++i) {
    Weight a(l, 0);
    a[i] = 1;
    a[i + 1] = -1;
    simple_eps_.push_back(a);
  }
  Weight last(l, 0);
  if (type == RootType::D) {
    last[l - 2] = 1;
    last[l - 1] = 1;
  } else {
    last[l - 1] = 1;
  }
  simple_eps_.push_back(last);

  // Positive roots eps_i +- eps_j and, for B, eps_i.
  std::vector<Weight> positive;
  for (int i = 0; i < l; ++i)
    for (int j = i + 1; j < l; ++j) {
      Weight a(l, 0), b(l, 0);
      a[i] = 1;
      a[j] = -1;
      b[i] = 1;
      b[j] = 1;
      positive.push_back(a);
      positive.push_back(b);
    }
  if (type == RootType::B)
    for (int i = 0; i < l; ++i) {
      Weight a(l, 0);
      a[i] = 1;
      positive.push_back(a);
    }

  DenseMatrix simple_cols(l, std::vector<Rational>(l));
  for (int r = 0; r < l; ++r)
    for (int c = 0; c < l; ++c) simple_cols[r][c] = simple_eps_[c][r];
  auto height_of = [&](const Weight& w) {
    std::vector<Rational> rhs(w.begin(), w.end());
    auto coeffs = solve_unique(simple_cols, rhs);
    Rational h = 0;
    for (auto& c : coeffs) h += c;
    return static_cast<int>(h.get_num().get_si());
  };
  std::vector<std::pair<int, Weight>> keyed;
  for (auto& w : positive) keyed.emplace_back(height_of(w), w);
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first < y.first;
    return x.second > y.second;
  });

  const int np = static_cast<int>(keyed.size());
  dim_ = 2 * np + l;
  weights_.assign(dim_, Weight(l, 0));
  heights_.assign(dim_, 0);
  for (int p = 0; p < np; ++p) {
    const int pos = np + l + p;
    weights_[pos] = keyed[p].second;
    heights_[pos] = keyed[p].first;
    weights_[opposite(pos)] = negated(keyed[p].second);
    heights_[opposite(pos)] = -keyed[p].first;
  }
  for (int i = 0; i < l; ++i) {
    auto found = root_index(simple_eps_[i]);
    simple_.push_back(*found);
  }

  // Coroots 2 alpha / (alpha, alpha), expressed in the simple coroots.
  DenseMatrix coroot_cols(l, std::vector<Rational>(l));
  for (int c = 0; c < l; ++c) {
    const int n2 = dot(simple_eps_[c], simple_eps_[c]);
    for (int r = 0; r < l; ++r) coroot_cols[r][c] = frac(2 * simple_eps_[c][r], n2);
  }
  coroots_.assign(dim_, {});
  for (int b = 0; b < dim_; ++b) {
    if (is_cartan(b)) continue;
    const int n2 = dot(weights_[b], weights_[b]);
    std::vector<Rational> rhs;
    for (int r = 0; r < l; ++r) rhs.push_back(frac(2 * weights_[b][r], n2));
    auto c = solve_unique(coroot_cols, rhs);
    for (auto& x : c) {
      if (!is_integer(x)) throw std::logic_error("non-integral coroot coefficient");
      coroots_[b].push_back(static_cast<int>(x.get_num().get_si()));
    }
  }

  cartan_.assign(l * l, 0);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) cartan_[i * l + j] = pairing(simple_eps_[i], j);
}

std::optional<int> RootDatum::root_index(const Weight& eps) const {
  if (static_cast<int>(eps.size()) != rank_) return std::nullopt;
  bool zero = std::all_of(eps.begin(), eps.end(), [](int x) { return x == 0; });
  if (zero) return std::nullopt;
  for (int b = 0; b < dim_; ++b)
    if (!is_cartan(b) && weights_[b] == eps) return b;
  return std::nullopt;
}

int RootDatum::coroot_squared_norm(int i) const {
  const int n2 = dot(simple_eps_[i], simple_eps_[i]);
  return 4 / n2;
}

int RootDatum::pairing(const Weight& mu, int i) const {
  const int n2 = dot(simple_eps_[i], simple_eps_[i]);
  return 2 * dot(mu, simple_eps_[i]) / n2;
}

int RootDatum::eval_on_coroot(int b, int i) const { return pairing(weights_[b], i); }

std::vector<int> RootDatum::to_omega(const Weight& mu) const {
  std::vector<int> out(rank_);
  for (int i = 0; i < rank_; ++i) out[i] = pairing(mu, i);
  return out;
}

Weight RootDatum::from_omega(std::span<const int> omega) const {
  if (static_cast<int>(omega.size()) != rank_) throw std::invalid_argument("from_omega: wrong number of coordinates");
  DenseMatrix m(rank_, std::vector<Rational>(rank_));
  for (int i = 0; i < rank_; ++i) {
    const int n2 = dot(simple_eps_[i], simple_eps_[i]);
    for (int k = 0; k < rank_; ++k) m[i][k] = frac(2 * simple_eps_[i][k], n2);
  }
  std::vector<Rational> rhs(omega.begin(), omega.end());
  auto eps = solve_unique(m, rhs);
  Weight w;
  for (auto& x : eps) {
    if (!is_integer(x)) throw std::invalid_argument("weight is not in the integral epsilon lattice");
    w.push_back(static_cast<int>(x.get_num().get_si()));
  }
  return w;
}

int RootDatum::dual_coxeter() const {
  const auto& c = coroots_[highest_root()];
  return 1 + std::accumulate(c.begin(), c.end(), 0);
}

int RootDatum::structure_constant(int a, int b) const {
  if (is_cartan(a) || is_cartan(b)) return 0;
  return structure_[a * dim_ + b];
}

void RootDatum::compute_structure_from_matrices() {
  const int l = rank_;
  const int n = type_ == RootType::D ? 2 * l : 2 * l + 1;
  std::vector<IntMatrix> mats;
  mats.reserve(dim_);
  for (int b = 0; b < dim_; ++b) {
    if (is_cartan(b)) {
      IntMatrix h(n);
      // Simple coroot as a diagonal matrix.
      const int slot = cartan_slot(b);
      const int n2 = dot(simple_eps_[slot], simple_eps_[slot]);
      for (int k = 0; k < l; ++k) {
        h.at(k, k) = 2 * simple_eps_[slot][k] / n2;
        h.at(k + l, k + l) = -h.at(k, k);
      }
      mats.push_back(h);
    } else {
      mats.push_back(root_matrix(weights_[b], l, n));
    }
  }

  // The first nonzero entry of each root vector identifies it uniquely.
  std::vector<std::pair<int, int>> key(dim_);
  for (int b = 0; b < dim_; ++b) {
    if (is_cartan(b)) continue;
    bool found = false;
    for (int i = 0; i < n && !found; ++i)
      for (int j = 0; j < n && !found; ++j)
        if (mats[b].at(i, j) != 0) {
          key[b] = {i, j};
          found = true;
        }
    for (int o = 0; o < dim_; ++o)
      if (o != b && mats[o].at(key[b].first, key[b].second) != 0)
        throw std::logic_error("matrix realization: root vectors do not have distinct key entries");
  }

  DenseMatrix coroot_cols(l, std::vector<Rational>(l));
  for (int c = 0; c < l; ++c)
    for (int r = 0; r < l; ++r) coroot_cols[r][c] = mats[cartan(c)].at(r, r);

  structure_.assign(static_cast<std::size_t>(dim_) * dim_, 0);
  for (int a = 0; a < dim_; ++a) {
    if (is_cartan(a)) continue;
    for (int b = 0; b < dim_; ++b) {
      if (is_cartan(b)) continue;
      IntMatrix c = commutator(mats[a], mats[b]);
      std::vector<std::pair<int, long>> comps;
      for (int o = 0; o < dim_; ++o) {
        if (is_cartan(o)) continue;
        auto [ki, kj] = key[o];
        long v = c.at(ki, kj);
        if (v == 0) continue;
        long base = mats[o].at(ki, kj);
        if (v % base != 0) throw std::logic_error("matrix realization: non-integral structure constant");
        comps.emplace_back(o, v / base);
      }
      for (auto [o, coeff] : comps)
        for (std::size_t t = 0; t < c.a.size(); ++t) c.a[t] -= coeff * mats[o].a[t];
      // What is left must be diagonal.
      std::vector<Rational> diag(l);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j && c.at(i, j) != 0) throw std::logic_error("matrix realization: bracket left the span of the basis");
      for (int k = 0; k < l; ++k) diag[k] = c.at(k, k);
      auto h = solve_unique(coroot_cols, diag);

      if (b == opposite(a)) {
        if (!comps.empty()) throw std::logic_error("matrix realization: [e_a, e_-a] has root components");
        for (int i = 0; i < l; ++i)
          if (h[i] != coroots_[a][i]) throw std::logic_error("matrix realization: [e_a, e_-a] is not the coroot");
        continue;
      }
      for (auto& x : h)
        if (x != 0) throw std::logic_error("matrix realization: unexpected Cartan component");
      if (comps.empty()) continue;
      Weight sum(l);
      for (int k = 0; k < l; ++k) sum[k] = weights_[a][k] + weights_[b][k];
      if (comps.size() != 1 || weights_[comps[0].first] != sum)
        throw std::logic_error("matrix realization: bracket violates weight additivity");
      structure_[a * dim_ + b] = static_cast<int>(comps[0].second);
    }
  }

  finish_from_constants();

  // Cross-check the normalized form against the rescaled trace form.
  const long theta_trace = trace_product(mats[highest_root()], mats[lowest_root()]);
  for (int a = 0; a < dim_; ++a)
    for (int b = 0; b < dim_; ++b) {
      const long t = trace_product(mats[a], mats[b]);
      if (frac(t, theta_trace) != form(a, b)) throw std::logic_error("matrix realization: invariant form mismatch");
    }
}

void RootDatum::finish_from_constants() {
  const int l = rank_;
  brackets_.assign(static_cast<std::size_t>(dim_) * dim_, {});
  form_.assign(static_cast<std::size_t>(dim_) * dim_, 0);
  for (int a = 0; a < dim_; ++a)
    for (int b = 0; b < dim_; ++b) {
      auto& out = brackets_[a * dim_ + b];
      if (is_cartan(a) && is_cartan(b)) continue;
      if (is_cartan(a)) {
        int v = eval_on_coroot(b, cartan_slot(a));
        if (v != 0) out.push_back({b, v});
      } else if (is_cartan(b)) {
        int v = eval_on_coroot(a, cartan_slot(b));
        if (v != 0) out.push_back({a, -v});
      } else if (b == opposite(a)) {
        for (int i = 0; i < l; ++i)
          if (coroots_[a][i] != 0) out.push_back({cartan(i), coroots_[a][i]});
      } else if (int nab = structure_[a * dim_ + b]; nab != 0) {
        Weight sum(l);
        for (int k = 0; k < l; ++k) sum[k] = weights_[a][k] + weights_[b][k];
        out.push_back({*root_index(sum), nab});
      }
    }
  for (int a = 0; a < dim_; ++a) {
    if (is_cartan(a)) {
      for (int j = 0; j < l; ++j) {
        const int i = cartan_slot(a);
        // (h_i, h_j) = (alpha_i^vee, alpha_j^vee) with (eps_a, eps_b) = delta_ab.
        const int ni = dot(simple_eps_[i], simple_eps_[i]);
        const int nj = dot(simple_eps_[j], simple_eps_[j]);
        form_[a * dim_ + cartan(j)] = 4 * dot(simple_eps_[i], simple_eps_[j]) / (ni * nj);
      }
    } else {
      form_[a * dim_ + opposite(a)] = 2 / dot(weights_[a], weights_[a]);
    }
  }
}

std::shared_ptr<const RootDatum> RootDatum::build(RootType type, int rank) {
  std::shared_ptr<RootDatum> d(new RootDatum(type, rank));
  d->compute_structure_from_matrices();
  return d;
}

std::string RootDatum::to_table() const {
  std::ostringstream os;
  os << "# affvoa structure constants: alpha beta N with [e_alpha, e_beta] = N e_(alpha+beta)\n";
  os << "version " << kTableVersion << "\n";
  os << "type " << to_string(type_) << "\n";
  os << "rank " << rank_ << "\n";
  int count = 0;
  for (int a = 0; a < dim_; ++a)
    for (int b = 0; b < dim_; ++b)
      if (structure_constant(a, b) != 0) ++count;
  os << "constants " << count << "\n";
  for (int a = 0; a < dim_; ++a)
    for (int b = 0; b < dim_; ++b)
      if (int nab = structure_constant(a, b); nab != 0) os << label(a) << ' ' << label(b) << ' ' << nab << "\n";
  return os.str();
}

std::shared_ptr<const RootDatum> RootDatum::from_table(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string line;
  std::map<std::string, std::string> header;
  std::vector<std::string> body;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string first;
    ls >> first;
    if (first == "version" || first == "type" || first == "rank" || first == "constants") {
      std::string value;
      ls >> value;
      header[first] = value;
    } else {
      body.push_back(line);
    }
  }
  for (const char* k : {"version", "type", "rank", "constants"})
    if (!header.count(k)) throw std::runtime_error(std::string("structure-constant table: missing '") + k + "'");
  if (std::stoi(header["version"]) != kTableVersion)
    throw std::runtime_error("structure-constant table: unsupported version " + header["version"]);
  std::shared_ptr<RootDatum> d(new RootDatum(parse_root_type(header["type"]), std::stoi(header["rank"])));
  d->structure_.assign(static_cast<std::size_t>(d->dim_) * d->dim_, 0);
  if (static_cast<int>(body.size()) != std::stoi(header["constants"]))
    throw std::runtime_error("structure-constant table: wrong number of entries");
  for (const auto& entry : body) {
    std::istringstream ls(entry);
    std::string la, lb;
    int n = 0;
    if (!(ls >> la >> lb >> n)) throw std::runtime_error("structure-constant table: bad line '" + entry + "'");
    const int a = d->parse_label(la), b = d->parse_label(lb);
    if (d->is_cartan(a) || d->is_cartan(b)) throw std::runtime_error("structure-constant table: Cartan label in '" + entry + "'");
    Weight sum(d->rank_);
    for (int k = 0; k < d->rank_; ++k) sum[k] = d->weights_[a][k] + d->weights_[b][k];
    if (!d->root_index(sum) || n == 0) throw std::runtime_error("structure-constant table: alpha+beta is not a root in '" + entry + "'");
    d->structure_[a * d->dim_ + b] = n;
  }
  for (int a = 0; a < d->dim_; ++a)
    for (int b = 0; b < d->dim_; ++b)
      if (d->structure_[a * d->dim_ + b] != -d->structure_[b * d->dim_ + a])
        throw std::runtime_error("structure-constant table: not antisymmetric");
  d->finish_from_constants();
  return d;
}

std::string RootDatum::label(int b) const {
  if (b < 0 || b >= dim_) throw std::out_of_range("basis index out of range");
  if (is_cartan(b)) return "H(" + std::to_string(cartan_slot(b) + 1) + ")";
  std::string s = "E(";
  bool first = true;
  for (int k = 0; k < rank_; ++k) {
    if (weights_[b][k] == 0) continue;
    if (!first) s += ",";
    s += weights_[b][k] > 0 ? "+" : "-";
    s += std::to_string(k + 1);
    first = false;
  }
  return s + ")";
}

int RootDatum::parse_label(std::string_view text) const {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  auto bad = [&](const std::string& why) {
    return std::invalid_argument("bad basis label '" + s + "': " + why);
  };
  if (s.size() < 4 || s[1] != '(' || s.back() != ')') throw bad("expected E(...), F(...) or H(i)");
  const char head = s[0];
  std::string inner = s.substr(2, s.size() - 3);
  if (head == 'H') {
    int i = 0;
    try {
      std::size_t used = 0;
      i = std::stoi(inner, &used);
      if (used != inner.size()) throw bad("trailing characters");
    } catch (const std::logic_error&) {
      throw bad("coroot index is not an integer");
    }
    if (i < 1 || i > rank_) throw bad("coroot index out of range");
    return cartan(i - 1);
  }
  if (head != 'E' && head != 'F') throw bad("unknown generator");
  Weight w(rank_, 0);
  std::istringstream parts(inner);
  std::string tok;
  while (std::getline(parts, tok, ',')) {
    int sign = 1;
    std::size_t p = 0;
    if (!tok.empty() && (tok[0] == '+' || tok[0] == '-')) {
      sign = tok[0] == '-' ? -1 : 1;
      p = 1;
    }
    int idx = 0;
    try {
      std::size_t used = 0;
      idx = std::stoi(tok.substr(p), &used);
      if (used + p != tok.size()) throw bad("trailing characters");
    } catch (const std::logic_error&) {
      throw bad("epsilon index is not an integer");
    }
    if (idx < 1 || idx > rank_) throw bad("epsilon index out of range");
    if (w[idx - 1] != 0) throw bad("repeated epsilon index");
    w[idx - 1] = sign;
  }
  if (head == 'F') w = negated(w);
  auto r = root_index(w);
  if (!r) throw bad("not a root of " + to_string(type_) + std::to_string(rank_));
  return *r;
}

mpz_class weyl_dimension(const RootDatum& d, std::span<const int> omega) {
  if (static_cast<int>(omega.size()) != d.rank()) throw std::invalid_argument("weyl_dimension: wrong number of coordinates");
  for (int x : omega)
    if (x < 0) throw std::invalid_argument("weyl_dimension: weight is not dominant");
  Rational prod = 1;
  for (int b = d.num_positive() + d.rank(); b < d.dim(); ++b) {
    const auto& c = d.coroot(b);
    long num = 0, den = 0;
    for (int i = 0; i < d.rank(); ++i) {
      num += static_cast<long>(omega[i] + 1) * c[i];
      den += c[i];
    }
    prod *= frac(num, den);
  }
  if (!is_integer(prod)) throw std::logic_error("weyl_dimension: non-integral result");
  return prod.get_num();
}

}  // namespace affvoa
