#include <gtest/gtest.h>

#include <random>

#include "affvoa/ideal.hpp"

using namespace affvoa;

namespace {

std::vector<NumericState> triality_generators(const RootDatumPtr& d, const Rational& k) {
  auto th = DiagramAutomorphism::triality(d);
  const auto v = build_vn(d, 1);
  const auto v2 = apply(th, v);
  return {specialize(v, k), specialize(v2, k), specialize(apply(th, v2), k)};
}

bool contains(const IdealData& j, const NumericState& s) {
  if (s.is_zero()) return true;
  StateEchelon::Vec v(s.terms().begin(), s.terms().end());
  return j.component(*s.degree(), *s.weight()).contains(v);
}

}  // namespace

TEST(GradedComponent, SmallDegrees) {
  auto d = RootDatum::build(RootType::D, 4);
  const Weight zero(4, 0);
  EXPECT_EQ(graded_component(*d, 0, zero).dimension(), 1);
  EXPECT_EQ(graded_component(*d, 1, zero).dimension(), 4);
  // h_i(-2): rank; x(-1) y(-1) of weight 0: one per pair {alpha, -alpha}
  // plus symmetric pairs of Cartan elements.
  const int rank = d->rank(), pairs = d->num_positive(), sym = rank * (rank + 1) / 2;
  EXPECT_EQ(graded_component(*d, 2, zero).dimension(), rank + pairs + sym);
  EXPECT_EQ(graded_component(*d, 2, zero).dimension(), 26);
}

TEST(GradedComponent, TotalsMatchPartitionCounts) {
  auto d = RootDatum::build(RootType::B, 2);
  const int n = d->dim();  // 10
  // Coefficients of prod_m (1 - q^m)^{-n} up to q^3.
  const int expect[4] = {1, n, n + n * (n + 1) / 2, n + n * n + n * (n + 1) * (n + 2) / 6};
  for (int deg = 0; deg <= 3; ++deg) {
    int total = 0;
    for (const auto& [w, monos] : monomials_of_degree(*d, deg)) {
      total += static_cast<int>(monos.size());
      for (const auto& m : monos) {
        EXPECT_EQ(monomial_degree(m), deg);
        EXPECT_EQ(monomial_weight(*d, m), w);
        EXPECT_TRUE(std::is_sorted(m.begin(), m.end()));
      }
    }
    EXPECT_EQ(total, expect[deg]);
  }
}

TEST(Ideal, SingleGenerator) {
  auto d = RootDatum::build(RootType::D, 4);
  const auto v = specialize(build_vn(d, 1), Rational(-2));
  IdealData j(d, -2, {v}, 2);
  EXPECT_EQ(j.dimension(0), 0);
  EXPECT_EQ(j.dimension(1), 0);
  EXPECT_EQ(j.dimension(2), 35);
  EXPECT_TRUE(contains(j, v));
  EXPECT_TRUE(ideal_component(j, 1, Weight(4, 0)).empty());
  EXPECT_EQ(ideal_component(j, 2, *v.weight()).size(), 1u);
}

TEST(Ideal, TripleGeneratorsAndClosure) {
  auto d = RootDatum::build(RootType::D, 4);
  IdealData j(d, -2, triality_generators(d, -2), 3);
  EXPECT_GE(j.dimension(2), 3);
  EXPECT_EQ(j.dimension(2), 105);
  for (const auto& g : j.generators()) EXPECT_TRUE(contains(j, g));
  // J is stable under modes that stay within the cutoff.
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> basis(0, d->dim() - 1), mode(-1, 1);
  for (const auto& [w, monos] : monomials_of_degree(*d, 2)) {
    for (const auto& s : ideal_component(j, 2, w)) {
      const int x = basis(rng), n = mode(rng);
      ASSERT_TRUE(contains(j, j.modes().act(x, n, s)));
    }
  }
}

TEST(Search, QuotientBySingleGeneratorFindsTrialityImages) {
  auto d = RootDatum::build(RootType::D, 4);
  IdealData j(d, -2, {specialize(build_vn(d, 1), Rational(-2))}, 2);
  const auto hits = search_singular(j, 2);
  ASSERT_EQ(hits.size(), 3u);
  EXPECT_EQ(hits[0].degree, 0);
  std::vector<std::vector<int>> weights;
  for (std::size_t i = 1; i < hits.size(); ++i) {
    EXPECT_EQ(hits[i].degree, 2);
    EXPECT_EQ(hits[i].basis.size(), 1u);
    weights.push_back(d->to_omega(hits[i].weight));
  }
  std::sort(weights.begin(), weights.end());
  EXPECT_EQ(weights, (std::vector<std::vector<int>>{{0, 0, 0, 2}, {0, 0, 2, 0}}));
}

TEST(Search, VacuumOnlyAtDegreeZeroAndForTheTripleIdeal) {
  auto d = RootDatum::build(RootType::D, 4);
  IdealData j(d, -2, triality_generators(d, -2), 2);
  for (int deg : {0, 2}) {
    const auto hits = search_singular(j, deg);
    ASSERT_EQ(hits.size(), 1u);
    EXPECT_EQ(hits[0].degree, 0);
    EXPECT_EQ(hits[0].basis[0], NumericState::vacuum(d));
  }
  EXPECT_THROW(search_singular(j, 3), std::invalid_argument);
}
