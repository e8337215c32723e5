#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "affvoa/lie.hpp"
#include "affvoa/upoly.hpp"

namespace affvoa {

/// One factor x(-n) of a state, n >= 1, packed so that ascending key order
/// is the normal order: deeper modes first, ties by basis index.
using ModeKey = std::uint32_t;
using ModeMonomial = std::vector<ModeKey>;

inline constexpr int kMaxModeDepth = 255;

ModeKey mode_key(int basis, int depth);
inline int key_basis(ModeKey k) { return static_cast<int>(k & 0xFFFFu); }
inline int key_depth(ModeKey k) { return kMaxModeDepth - static_cast<int>(k >> 16); }

/// Conformal degree: sum of the depths.
int monomial_degree(const ModeMonomial& m);
Weight monomial_weight(const RootDatum& d, const ModeMonomial& m);

/// Element of the universal affine vertex algebra: normal-ordered
/// negative-mode monomials on the vacuum. C is UPoly for a symbolic level k
/// and Rational once k has been fixed.
template <class C>
class VertexState {
 public:
  using Terms = std::map<ModeMonomial, C>;

  explicit VertexState(RootDatumPtr d) : d_(std::move(d)) {}
  static VertexState vacuum(RootDatumPtr d);

  const RootDatumPtr& datum() const { return d_; }
  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  C coeff(const ModeMonomial& m) const;
  /// Adds c times a normal-ordered monomial.
  VertexState& add(const ModeMonomial& m, const C& c);

  VertexState& operator+=(const VertexState& o);
  VertexState& operator-=(const VertexState& o);
  VertexState& operator*=(const C& s);
  friend VertexState operator+(VertexState a, const VertexState& b) { return a += b; }
  friend VertexState operator-(VertexState a, const VertexState& b) { return a -= b; }
  friend VertexState operator*(const C& s, VertexState a) { return a *= s; }
  friend bool operator==(const VertexState& a, const VertexState& b) {
    return a.d_->same_as(*b.d_) && a.t_ == b.t_;
  }

  /// Common conformal degree, nullopt if mixed (0 for the zero state).
  std::optional<int> degree() const;
  /// Common h-weight, nullopt if mixed or zero.
  std::optional<Weight> weight() const;

  /// `E(+1,-2)(-1) E(+1,+2)(-1) |0> - (k+2) H(1)(-2) |0>`
  std::string to_string() const;

 private:
  void check_same(const VertexState& o) const;
  RootDatumPtr d_;
  Terms t_;
};

using SymbolicState = VertexState<UPoly>;
using NumericState = VertexState<Rational>;

/// Parses the state grammar. Factors are applied right to left, so any
/// mode index is accepted and the result is normal-ordered.
SymbolicState parse_state(RootDatumPtr d, std::string_view text);

/// Substitutes a value for k.
NumericState specialize(const SymbolicState& s, const Rational& k);

/// Mode action of the affine algebra on states, at a fixed level (the
/// variable k when C = UPoly). Results on monomials are memoized, so one
/// instance should be reused across a computation. Not thread-safe.
template <class C>
class ModeAlgebra {
 public:
  using Terms = typename VertexState<C>::Terms;

  ModeAlgebra(RootDatumPtr d, C level);

  const RootDatumPtr& datum() const { return d_; }
  const C& level() const { return level_; }

  /// x(n) applied to a normal-ordered monomial.
  const Terms& act(int x, int n, const ModeMonomial& m);
  VertexState<C> act(int x, int n, const VertexState<C>& s);
  VertexState<C> act(const LieElement& x, int n, const VertexState<C>& s);
  /// x_1(n_1) ... x_m(n_m) applied to s, rightmost first.
  VertexState<C> act_product(const std::vector<std::pair<int, int>>& factors, const VertexState<C>& s);

  std::size_t cache_size() const { return memo_.size(); }
  void clear_cache() { memo_.clear(); }

 private:
  struct KeyHash {
    std::size_t operator()(const std::pair<std::uint32_t, ModeMonomial>& k) const;
  };
  RootDatumPtr d_;
  C level_;
  std::unordered_map<std::pair<std::uint32_t, ModeMonomial>, Terms, KeyHash> memo_;
};

using SymbolicModes = ModeAlgebra<UPoly>;
using NumericModes = ModeAlgebra<Rational>;

/// One-off x(n) s at symbolic level.
SymbolicState mode_act(int x, int n, const SymbolicState& s);

/// (sum_{i=2}^{l} e_{e1-ei}(-1) e_{e1+ei}(-1))^n |0>, type D only.
SymbolicState build_vn(RootDatumPtr d, int n);
/// -1/4 e_{e1}(-1)^2 |0> + sum_{i=2}^{l} e_{e1-ei}(-1) e_{e1+ei}(-1) |0>, type B only.
SymbolicState build_b_vector(RootDatumPtr d);

/// Applies a diagram automorphism factorwise and renormalizes.
template <class C>
VertexState<C> apply(const DiagramAutomorphism& a, const VertexState<C>& s);

}  // namespace affvoa
