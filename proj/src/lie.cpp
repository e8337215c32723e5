#include "affvoa/lie.hpp"

#include <stdexcept>

namespace affvoa {

LieElement LieElement::basis(RootDatumPtr d, int b, const Rational& c) {
  LieElement x(std::move(d));
  x.add(b, c);
  return x;
}

Rational LieElement::coeff(int b) const {
  auto it = t_.find(b);
  return it == t_.end() ? Rational(0) : it->second;
}

LieElement& LieElement::add(int b, const Rational& c) {
  if (b < 0 || b >= d_->dim()) throw std::out_of_range("LieElement: basis index out of range");
  auto [it, inserted] = t_.try_emplace(b, 0);
  it->second += c;
  if (it->second == 0) t_.erase(it);
  return *this;
}

void LieElement::check_same(const LieElement& o) const {
  if (!d_->same_as(*o.d_)) throw std::invalid_argument("Lie elements over different root data");
}

LieElement& LieElement::operator+=(const LieElement& o) {
  check_same(o);
  for (const auto& [b, c] : o.t_) add(b, c);
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) {
  check_same(o);
  for (const auto& [b, c] : o.t_) add(b, -c);
  return *this;
}

LieElement& LieElement::operator*=(const Rational& s) {
  if (s == 0) t_.clear();
  for (auto& [b, c] : t_) c *= s;
  return *this;
}

bool operator==(const LieElement& a, const LieElement& b) { return a.d_->same_as(*b.d_) && a.t_ == b.t_; }

std::string LieElement::to_string() const {
  if (t_.empty()) return "0";
  std::string out;
  for (const auto& [b, c] : t_) {
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    Rational mag = abs(c);
    if (mag != 1) out += affvoa::to_string(mag) + " ";
    out += d_->label(b);
  }
  return out;
}

LieElement bracket(const LieElement& x, const LieElement& y) {
  if (!x.datum()->same_as(*y.datum())) throw std::invalid_argument("bracket: elements over different root data");
  LieElement r(x.datum());
  const auto& d = *x.datum();
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms())
      for (const auto& t : d.bracket(a, b)) r.add(t.index, ca * cb * t.coeff);
  return r;
}

std::optional<Weight> weight_of(const LieElement& x) {
  if (x.is_zero()) return std::nullopt;
  const auto& d = *x.datum();
  const Weight& w = d.weight(x.terms().begin()->first);
  for (const auto& [b, c] : x.terms())
    if (d.weight(b) != w) return std::nullopt;
  return w;
}

DiagramAutomorphism::DiagramAutomorphism(RootDatumPtr d, std::vector<int> perm)
    : d_(std::move(d)), perm_(std::move(perm)) {
  const auto& rd = *d_;
  const int l = rd.rank();
  if (static_cast<int>(perm_.size()) != l) throw std::invalid_argument("diagram automorphism: permutation has wrong length");
  std::vector<bool> seen(l, false);
  for (int p : perm_) {
    if (p < 0 || p >= l || seen[p]) throw std::invalid_argument("diagram automorphism: not a permutation");
    seen[p] = true;
  }
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      if (rd.cartan_matrix(perm_[i], perm_[j]) != rd.cartan_matrix(i, j))
        throw std::invalid_argument("diagram automorphism: permutation does not preserve the Cartan matrix");

  image_.assign(rd.dim(), -1);
  sign_.assign(rd.dim(), 1);
  for (int i = 0; i < l; ++i) image_[rd.cartan(i)] = rd.cartan(perm_[i]);

  // Positive (and mirrored negative) root vectors in order of height:
  // e_alpha = [e_i, e_beta] / N with alpha = alpha_i + beta.
  auto simple_slot = [&](int b) {
    for (int i = 0; i < l; ++i)
      if (rd.simple_root(i) == b) return i;
    return -1;
  };
  const int first_pos = rd.num_positive() + l;
  for (int b = first_pos; b < rd.dim(); ++b) {
    for (int neg : {0, 1}) {
      const int target = neg ? rd.opposite(b) : b;
      if (int s = simple_slot(b); s >= 0) {
        image_[target] = neg ? rd.simple_lowering(perm_[s]) : rd.simple_root(perm_[s]);
        continue;
      }
      bool done = false;
      for (int i = 0; i < l && !done; ++i) {
        const int gen = neg ? rd.simple_lowering(i) : rd.simple_root(i);
        Weight rest(l);
        for (int k = 0; k < l; ++k) rest[k] = rd.weight(target)[k] - rd.weight(gen)[k];
        auto beta = rd.root_index(rest);
        if (!beta || image_[*beta] < 0) continue;
        const int n = rd.structure_constant(gen, *beta);
        const int n_img = rd.structure_constant(image_[gen], image_[*beta]);
        const int s = sign_[gen] * sign_[*beta] * n_img;
        if (s != n && s != -n) throw std::logic_error("diagram automorphism: inconsistent extension");
        Weight img(l);
        for (int k = 0; k < l; ++k) img[k] = rd.weight(image_[gen])[k] + rd.weight(image_[*beta])[k];
        image_[target] = *rd.root_index(img);
        sign_[target] = s / n;
        done = true;
      }
      if (!done) throw std::logic_error("diagram automorphism: could not decompose a root");
    }
  }

  // The extension must preserve every bracket.
  for (int a = 0; a < rd.dim(); ++a)
    for (int b = 0; b < rd.dim(); ++b) {
      LieElement lhs = apply(bracket(LieElement::basis(d_, a), LieElement::basis(d_, b)));
      LieElement rhs = bracket(apply(LieElement::basis(d_, a)), apply(LieElement::basis(d_, b)));
      if (!(lhs == rhs)) throw std::logic_error("diagram automorphism: bracket not preserved");
    }
}

DiagramAutomorphism DiagramAutomorphism::from_simple_permutation(RootDatumPtr d, std::vector<int> perm) {
  return DiagramAutomorphism(std::move(d), std::move(perm));
}

DiagramAutomorphism DiagramAutomorphism::triality(RootDatumPtr d) {
  if (d->type() != RootType::D || d->rank() != 4)
    throw std::invalid_argument("triality is only defined for D4, not " + to_string(d->type()) + std::to_string(d->rank()));
  return DiagramAutomorphism(std::move(d), {2, 1, 3, 0});
}

DiagramAutomorphism DiagramAutomorphism::spinor_swap(RootDatumPtr d) {
  if (d->type() != RootType::D)
    throw std::invalid_argument("type " + to_string(d->type()) + " has no diagram automorphism");
  const int l = d->rank();
  std::vector<int> perm(l);
  for (int i = 0; i < l; ++i) perm[i] = i;
  std::swap(perm[l - 2], perm[l - 1]);
  return DiagramAutomorphism(std::move(d), std::move(perm));
}

LieElement DiagramAutomorphism::apply(const LieElement& x) const {
  if (!x.datum()->same_as(*d_)) throw std::invalid_argument("automorphism applied to an element of another algebra");
  LieElement r(d_);
  for (const auto& [b, c] : x.terms()) r.add(image_[b], c * sign_[b]);
  return r;
}

Weight DiagramAutomorphism::apply(const Weight& w) const {
  // Linear on the root lattice; go through fundamental-weight coordinates.
  auto om = d_->to_omega(w);
  std::vector<int> out(om.size());
  for (std::size_t i = 0; i < om.size(); ++i) out[perm_[i]] = om[i];
  return d_->from_omega(out);
}

int DiagramAutomorphism::order() const {
  const int n = d_->dim();
  std::vector<int> cur(n), sgn(n, 1);
  for (int b = 0; b < n; ++b) cur[b] = b;
  for (int k = 1; k <= 720; ++k) {
    bool identity = true;
    for (int b = 0; b < n; ++b) {
      sgn[b] *= sign_[cur[b]];
      cur[b] = image_[cur[b]];
      if (cur[b] != b || sgn[b] != 1) identity = false;
    }
    if (identity) return k;
  }
  throw std::logic_error("diagram automorphism: order not found");
}

}  // namespace affvoa
