#pragma once

#include <optional>
#include <vector>

#include "affvoa/rational.hpp"

namespace affvoa {

using DenseMatrix = std::vector<std::vector<Rational>>;

/// In-place reduced row echelon form; returns the pivot column of each
/// nonzero row.
std::vector<int> rref(DenseMatrix& m);

/// Solution set {particular + sum_i s_i directions[i]} of A x = b.
struct AffineSolution {
  std::vector<Rational> particular;
  std::vector<std::vector<Rational>> directions;
};

/// std::nullopt when the system is inconsistent. `columns` is the number of
/// unknowns (needed when A has no rows).
std::optional<AffineSolution> solve_affine(const DenseMatrix& a, const std::vector<Rational>& b, int columns);

/// Solves a square nonsingular system; throws std::domain_error otherwise.
std::vector<Rational> solve_unique(const DenseMatrix& a, const std::vector<Rational>& b);

}  // namespace affvoa
