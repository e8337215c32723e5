#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "affvoa/rational.hpp"

namespace affvoa {

enum class RootType { B, D };

std::string to_string(RootType t);
RootType parse_root_type(std::string_view s);

/// A weight of the root lattice in epsilon coordinates.
using Weight = std::vector<int>;

/// One term of a bracket [x_a, x_b] = sum coeff * x_index.
struct BasisTerm {
  int index;
  int coeff;
};

/// Finite root system of type B_l or D_l together with a Chevalley basis of
/// the corresponding orthogonal Lie algebra.
///
/// Basis indices run over [0, dim). The order is the PBW order used
/// throughout the library: negative root vectors (lowest root first), then
/// the simple coroots H(1)..H(l), then positive root vectors by increasing
/// height. Negative root vectors are listed as the mirror image of the
/// positive ones, so index(-alpha) = dim - 1 - index(alpha).
///
/// Structure constants are read off an explicit matrix realization of
/// so(2l) / so(2l+1) at construction, or loaded from a table written by
/// to_table(). Instances are immutable.
class RootDatum {
 public:
  static std::shared_ptr<const RootDatum> build(RootType type, int rank);
  /// Rebuilds a datum from the text produced by to_table(); throws
  /// std::runtime_error on malformed input.
  static std::shared_ptr<const RootDatum> from_table(std::string_view text);
  std::string to_table() const;

  static constexpr int kTableVersion = 1;

  RootType type() const { return type_; }
  int rank() const { return rank_; }
  int dim() const { return dim_; }
  int num_roots() const { return dim_ - rank_; }
  int num_positive() const { return num_roots() / 2; }

  bool is_cartan(int b) const { return b >= num_positive() && b < num_positive() + rank_; }
  bool is_root(int b) const { return !is_cartan(b); }
  bool is_positive(int b) const { return b >= num_positive() + rank_; }
  bool is_negative(int b) const { return b < num_positive(); }
  /// Basis index of H(i), i in [0, rank).
  int cartan(int i) const { return num_positive() + i; }
  /// Which simple coroot a Cartan basis index is.
  int cartan_slot(int b) const { return b - num_positive(); }
  /// Basis index of the root vector for -alpha.
  int opposite(int b) const { return dim_ - 1 - b; }

  /// Epsilon coordinates of the weight of a basis element (zero for H(i)).
  const Weight& weight(int b) const { return weights_[b]; }
  /// Sum of simple-root coefficients; negative for negative roots, 0 for H(i).
  int height(int b) const { return heights_[b]; }
  std::optional<int> root_index(const Weight& eps) const;

  int simple_root(int i) const { return simple_[i]; }
  int simple_lowering(int i) const { return opposite(simple_[i]); }
  int highest_root() const { return dim_ - 1; }
  int lowest_root() const { return 0; }

  /// [x_a, x_b] in the basis. Integer coefficients (Chevalley basis).
  const std::vector<BasisTerm>& bracket(int a, int b) const { return brackets_[a * dim_ + b]; }
  /// N_{alpha,beta} with [e_alpha, e_beta] = N e_{alpha+beta}; 0 when alpha+beta is not a root.
  int structure_constant(int a, int b) const;
  /// Normalized invariant form, (theta, theta) = 2.
  int form(int a, int b) const { return form_[a * dim_ + b]; }

  /// Coefficients of the coroot h_alpha = [e_alpha, e_-alpha] in H(1)..H(l).
  const std::vector<int>& coroot(int b) const { return coroots_[b]; }
  /// alpha(h_i) for the weight of basis element b.
  int eval_on_coroot(int b, int i) const;
  /// mu(h_i) for an arbitrary epsilon-coordinate weight.
  int pairing(const Weight& mu, int i) const;
  /// Fundamental-weight coordinates (mu(h_1), ..., mu(h_l)).
  std::vector<int> to_omega(const Weight& mu) const;
  /// Inverse of to_omega; throws if the weight is not in the root lattice.
  Weight from_omega(std::span<const int> omega) const;

  /// a_ij = alpha_i(h_j), so that [h_i, e_{alpha_j}] = a_ji e_{alpha_j}.
  int cartan_matrix(int i, int j) const { return cartan_[i * rank_ + j]; }
  int dual_coxeter() const;

  /// `E(+1,-2)`, `E(-3)`, `H(2)` ...
  std::string label(int b) const;
  /// Accepts E(...), H(i) and F(...) as a synonym for E of the negated root.
  int parse_label(std::string_view text) const;

  bool same_as(const RootDatum& o) const { return type_ == o.type_ && rank_ == o.rank_; }

 private:
  RootDatum(RootType type, int rank);
  void compute_structure_from_matrices();
  void finish_from_constants();
  int coroot_squared_norm(int i) const;

  RootType type_;
  int rank_;
  int dim_ = 0;
  std::vector<Weight> weights_;
  std::vector<int> heights_;
  std::vector<int> simple_;
  std::vector<Weight> simple_eps_;
  std::vector<std::vector<int>> coroots_;
  std::vector<int> cartan_;
  std::vector<int> structure_;  // N_{a,b} for root pairs, dense dim x dim
  std::vector<std::vector<BasisTerm>> brackets_;
  std::vector<int> form_;
};

using RootDatumPtr = std::shared_ptr<const RootDatum>;

/// Weyl dimension formula for the irreducible module with dominant integral
/// highest weight given in fundamental-weight coordinates.
mpz_class weyl_dimension(const RootDatum& d, std::span<const int> omega);

}  // namespace affvoa
