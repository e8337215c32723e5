#include <gtest/gtest.h>

#include <random>

#include "affvoa/hpoly.hpp"
#include "affvoa/weight_functional.hpp"

using namespace affvoa;

namespace {

HPolynomial h(int n, int i) { return HPolynomial::variable(n, i); }
HPolynomial c(int n, long v) { return HPolynomial::constant(n, Rational(v)); }

HPolynomial random_poly(int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> e(0, 2), co(-4, 4), nt(1, 4);
  HPolynomial p(n);
  const int terms = nt(rng);
  for (int t = 0; t < terms; ++t) {
    Exponents ex(n);
    for (auto& x : ex) x = e(rng);
    p.add(ex, co(rng));
  }
  return p;
}

HPolynomial expand(const LinearFactorization& f, int n) {
  HPolynomial p = HPolynomial::constant(n, f.unit);
  for (const auto& x : f.factors) p = p * x;
  return p;
}

}  // namespace

TEST(HPoly, OrderAndPrinting) {
  const int n = 3;
  auto p = h(n, 0) * h(n, 1) + Rational(2) * h(n, 0) - c(n, 3) + h(n, 2) * h(n, 2);
  EXPECT_EQ(p.to_string(), "h1*h2+h3^2+2*h1-3");
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p.degree_in(2), 2);
  EXPECT_EQ(p.constant_term(), -3);
  EXPECT_EQ(p.monic().terms().begin()->second, 1);
  EXPECT_TRUE((p - p).is_zero());
}

TEST(HPoly, DivideExact) {
  const int n = 2;
  auto a = h(n, 0) + c(n, 2), b = h(n, 0) - h(n, 1);
  auto q = (a * b).divide_exact(b);
  ASSERT_TRUE(q);
  EXPECT_EQ(*q, a);
  EXPECT_FALSE((a * b + c(n, 1)).divide_exact(b));
}

TEST(HPoly, FactorLinearRecoversProducts) {
  const int n = 4;
  std::vector<HPolynomial> linear = {h(n, 0), h(n, 0) + Rational(2) * h(n, 1) + h(n, 2) + h(n, 3) + c(n, 2),
                                     h(n, 1) - h(n, 3), h(n, 2) + h(n, 3) + c(n, 2), h(n, 3) + c(n, 1)};
  for (std::size_t i = 0; i < linear.size(); ++i)
    for (std::size_t j = i; j < linear.size(); ++j) {
      const auto p = Rational(-3) * linear[i] * linear[j];
      auto f = factor_linear(p);
      ASSERT_TRUE(f) << p.to_string();
      EXPECT_EQ(f->factors.size(), 2u);
      EXPECT_EQ(expand(*f, n), p);
    }
  auto cubic = h(n, 0) * h(n, 1) * (h(n, 2) - h(n, 3) + c(n, 1));
  auto f = factor_linear(cubic);
  ASSERT_TRUE(f);
  EXPECT_EQ(f->factors.size(), 3u);
  EXPECT_EQ(expand(*f, n), cubic);
}

TEST(HPoly, NonSplittingAndConstants) {
  const int n = 2;
  EXPECT_FALSE(factor_linear(h(n, 0) * h(n, 0) + c(n, 1)));
  EXPECT_FALSE(factor_linear(h(n, 0) * h(n, 0) - c(n, 2)));
  EXPECT_FALSE(factor_linear(h(n, 0) * h(n, 1) + c(n, 1)));
  auto k = factor_linear(c(n, 5));
  ASSERT_TRUE(k);
  EXPECT_TRUE(k->factors.empty());
  EXPECT_EQ(k->unit, 5);
  EXPECT_THROW(factor_linear(HPolynomial(n)), std::invalid_argument);
}

TEST(HPoly, EvaluationAlongFamilies) {
  const int n = 4;
  // p_3 = h3 (h3 + h4) vanishes identically at t w4.
  auto p3 = h(n, 2) * (h(n, 2) + h(n, 3));
  WeightFunctional tw4({{0, 0}, {0, 0}, {0, 0}, {0, 1}});
  EXPECT_TRUE(tw4.evaluate(p3).is_zero());
  // p_1 = h1 (h1 + 2h2 + h3 + h4 + 2) at t w1 gives t (t + 2).
  auto p1 = h(n, 0) * HPolynomial::affine(Rational(2), std::vector<Rational>{1, 2, 1, 1});
  WeightFunctional tw1({{0, 1}, {0, 0}, {0, 0}, {0, 0}});
  const UPoly t = UPoly::variable();
  EXPECT_EQ(tw1.evaluate(p1), t * (t + 2));
  // At mu = 0 only the constant term survives.
  WeightFunctional zero = WeightFunctional::constant(std::vector<int>{0, 0, 0, 0});
  EXPECT_EQ(zero.evaluate(p1 + c(n, 7)), UPoly(7));
}

TEST(HPoly, EvaluationIsARingHomomorphism) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> v(-5, 5);
  for (int i = 0; i < 50; ++i) {
    auto p = random_poly(3, rng), q = random_poly(3, rng);
    std::vector<Rational> at = {Rational(v(rng)), frac(v(rng), 3), Rational(v(rng))};
    EXPECT_EQ((p * q).evaluate(std::span<const Rational>(at)),
              p.evaluate(std::span<const Rational>(at)) * q.evaluate(std::span<const Rational>(at)));
    EXPECT_EQ((p + q).evaluate(std::span<const Rational>(at)),
              p.evaluate(std::span<const Rational>(at)) + q.evaluate(std::span<const Rational>(at)));
  }
}

TEST(WeightFunctional, Display) {
  WeightFunctional f({{-2, -1}, {0, 0}, {0, 1}, {0, 0}});
  EXPECT_EQ(f.to_string(), "(-2-t)w1 + t w3");
  EXPECT_EQ(WeightFunctional::constant(std::vector<int>{0, -1, 0, 0}).to_string(), "-w2");
  EXPECT_EQ(WeightFunctional::constant(std::vector<int>{-2, 0, 0, 0}).to_string(), "-2w1");
  EXPECT_EQ(WeightFunctional::constant(std::vector<int>{0, 0, 0, 0}).to_string(), "0");
  EXPECT_EQ((AffineT{1, 2}).to_string(), "1+2t");
  EXPECT_EQ((AffineT{frac(1, 2), -1}).to_string(), "1/2-t");
}
