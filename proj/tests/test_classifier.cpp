#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "affvoa/classifier.hpp"
#include "affvoa/zhu.hpp"
#include "oracles/branch_enum.hpp"
#include "oracles/coroots.hpp"

using namespace affvoa;

namespace {

AdjointModule module_of(const SymbolicState& v) { return generate_adjoint_module(zhu_F(v)); }

ClassificationResult classify_single(int l) {
  auto d = RootDatum::build(RootType::D, l);
  return solve_by_branching(assemble_system({module_of(build_vn(d, 1))}), l);
}

std::vector<std::vector<int>> subsets(int max) {
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < (1 << max); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < max; ++i)
      if (mask & (1 << i)) s.push_back(i + 1);
    out.push_back(s);
  }
  return out;
}

bool has_family(const ClassificationResult& r, const WeightFunctional& f) {
  return std::any_of(r.families.begin(), r.families.end(), [&](const auto& g) { return same_family(f, g); });
}

// h_alpha as an affine form c[0] + sum c[i] h_i, alpha in epsilon coordinates.
oracle::Linear coroot_form(int l, std::vector<int> eps, long shift) {
  auto co = oracle::simple_coefficients_d(l, eps);
  oracle::Linear f{Rational(shift)};
  f.insert(f.end(), co.begin(), co.end());
  return f;
}

HPolynomial to_poly(const oracle::Linear& f) {
  return HPolynomial::affine(f[0], std::vector<Rational>(f.begin() + 1, f.end()));
}

// The nine quadratic equations for the triple ideal, as pairs of factors.
std::vector<std::vector<oracle::Linear>> nine_equations() {
  const int l = 4;
  auto h = [&](std::vector<int> e, long s = 0) { return coroot_form(l, e, s); };
  return {
      {h({1, -1, 0, 0}), h({1, 1, 0, 0}, 2)}, {h({0, 1, -1, 0}), h({0, 1, 1, 0}, 1)},
      {h({0, 0, 1, -1}), h({0, 0, 1, 1})},    {h({0, 0, 1, -1}), h({1, 1, 0, 0}, 2)},
      {h({0, 1, -1, 0}), h({1, 0, 0, 1}, 1)}, {h({0, 0, 1, 1}), h({1, -1, 0, 0})},
      {h({0, 0, 1, 1}), h({1, 1, 0, 0}, 2)},  {h({0, 1, -1, 0}), h({1, 0, 0, -1}, 1)},
      {h({1, -1, 0, 0}), h({0, 0, 1, -1})},
  };
}

std::vector<AdjointModule> triple_modules() {
  auto d = RootDatum::build(RootType::D, 4);
  auto th = DiagramAutomorphism::triality(d);
  const auto v = build_vn(d, 1);
  const auto v2 = apply(th, v);
  return {module_of(v), module_of(v2), module_of(apply(th, v2))};
}

}  // namespace

TEST(Classifier, EmptySystem) {
  EXPECT_TRUE(assemble_system({}).empty());
  EXPECT_THROW(solve_by_branching({}, 2), std::runtime_error);  // two free parameters
}

TEST(Classifier, D4SingleIdealGivesEightFamilies) {
  const auto r = classify_single(4);
  EXPECT_TRUE(r.residual_check);
  std::vector<std::string> got;
  for (const auto& f : r.families) got.push_back(f.to_string());
  std::sort(got.begin(), got.end());
  std::vector<std::string> expect = {"t w3",
                                     "t w4",
                                     "(-2-t)w1 + t w3",
                                     "(-2-t)w1 + t w4",
                                     "(-1-t)w2 + t w3",
                                     "(-1-t)w2 + t w4",
                                     "t w1 + (-1-t)w2 + t w3",
                                     "t w1 + (-1-t)w2 + t w4"};
  std::sort(expect.begin(), expect.end());
  EXPECT_EQ(got, expect);
}

TEST(Classifier, ClosedFormExamples) {
  EXPECT_EQ(closed_form_mu(4, {1}, 3).to_string(), "(-2-t)w1 + t w3");
  EXPECT_EQ(closed_form_mu(4, {1, 2}, 3).to_string(), "t w1 + (-1-t)w2 + t w3");
  EXPECT_EQ(closed_form_mu(4, {}, 3).to_string(), "t w3");
  EXPECT_EQ(closed_form_mu(6, {}, 6).to_string(), "t w6");
  EXPECT_THROW(closed_form_mu(4, {2, 1}, 3), std::invalid_argument);
  EXPECT_THROW(closed_form_mu(4, {3}, 3), std::invalid_argument);
  EXPECT_THROW(closed_form_mu(4, {1}, 2), std::invalid_argument);
}

TEST(Classifier, ClosedFormAppearsForEverySubset) {
  for (int l = 4; l <= 6; ++l) {
    const auto r = classify_single(l);
    EXPECT_TRUE(r.residual_check);
    EXPECT_EQ(static_cast<int>(r.families.size()), 2 * (1 << (l - 2)));
    for (const auto& s : subsets(l - 2))
      for (int variant : {l - 1, l}) EXPECT_TRUE(has_family(r, closed_form_mu(l, s, variant))) << "l=" << l;
  }
}

TEST(Classifier, QuadraticGeneratorsSpanP0) {
  for (int l = 4; l <= 5; ++l) {
    auto d = RootDatum::build(RootType::D, l);
    const auto full = assemble_system({module_of(build_vn(d, 1))});
    std::vector<HPolynomial> quadratics;
    for (int i = 1; i <= l - 1; ++i) {
      Weight w(l, 0);
      w[i - 1] = w[i] = 1;
      const auto& co = d->coroot(*d->root_index(w));
      quadratics.push_back(HPolynomial::variable(l, i - 1) *
                          HPolynomial::affine(Rational(l - i - 1), std::vector<Rational>(co.begin(), co.end())));
    }
    EXPECT_EQ(polynomial_span(quadratics, l), full);
    const auto a = solve_by_branching(quadratics, l), b = solve_by_branching(full, l);
    EXPECT_EQ(a.families, b.families);
  }
}

TEST(Classifier, BranchOrderIndependence) {
  auto d = RootDatum::build(RootType::D, 5);
  auto system = assemble_system({module_of(build_vn(d, 1))});
  const auto base = solve_by_branching(system, 5).families;
  std::mt19937 rng(1);
  for (int i = 0; i < 5; ++i) {
    std::shuffle(system.begin(), system.end(), rng);
    EXPECT_EQ(solve_by_branching(system, 5).families, base);
  }
}

TEST(Classifier, TripleIdeal) {
  const auto system = assemble_system(triple_modules());
  EXPECT_EQ(system.size(), 9u);
  for (const auto& eq : nine_equations()) {
    auto with = system;
    with.push_back(to_poly(eq[0]) * to_poly(eq[1]));
    EXPECT_EQ(polynomial_span(with, 4).size(), 9u);
  }
  const auto r = solve_by_branching(system, 4);
  EXPECT_TRUE(r.residual_check);
  std::vector<std::string> got;
  for (const auto& f : r.families) got.push_back(f.to_string());
  EXPECT_EQ(got, (std::vector<std::string>{"-2w1", "-w2", "-2w3", "-2w4", "0"}));
  const auto ord = filter_ordinary(r);
  ASSERT_EQ(ord.size(), 1u);
  EXPECT_EQ(ord[0].family.to_string(), "0");
  EXPECT_EQ(ord[0].constraint, "none");

  // Exhaustive 2^9 enumeration over the linear factors.
  std::set<oracle::Point> brute = oracle::enumerate_branches(nine_equations(), 4);
  std::set<oracle::Point> emitted;
  for (const auto& f : r.families) emitted.insert(f.at(0));
  EXPECT_EQ(brute, emitted);
}

TEST(Classifier, OrdinaryFilter) {
  for (int l = 4; l <= 6; ++l) {
    const auto ord = filter_ordinary(classify_single(l));
    ASSERT_EQ(ord.size(), 2u);
    std::vector<std::string> names;
    for (const auto& p : ord) {
      EXPECT_EQ(p.constraint, "t in Z>=0");
      names.push_back(p.family.to_string());
    }
    std::sort(names.begin(), names.end());
    EXPECT_EQ(names, (std::vector<std::string>{"t w" + std::to_string(l - 1), "t w" + std::to_string(l)}));
  }
  EXPECT_EQ(ordinary_part(closed_form_mu(4, {1}, 3)).constraint, "empty");
  EXPECT_EQ(ordinary_part(WeightFunctional::constant(std::vector<int>{0, -1, 0, 0})).constraint, "empty");
  // First coordinate t/2 must be an integer: t even.
  WeightFunctional half({{0, frac(1, 2)}, {0, 1}});
  EXPECT_EQ(ordinary_part(half).constraint, "t in Z>=0, t >= 0, t mod 2 in {0}");
  // Bounded family: 3 - t >= 0.
  WeightFunctional bounded({{3, -1}, {0, 1}});
  const auto part = ordinary_part(bounded);
  EXPECT_EQ(part.constraint, "finite");
  EXPECT_EQ(part.members.size(), 4u);
}

TEST(Classifier, FamilyIdentification) {
  WeightFunctional a({{-2, -1}, {0, 0}, {0, 1}, {0, 0}});
  // t -> 3 - t
  WeightFunctional b({{-5, 1}, {0, 0}, {3, -1}, {0, 0}});
  EXPECT_TRUE(same_family(a, b));
  EXPECT_EQ(canonical_family(b), a);
  WeightFunctional c({{-2, -1}, {0, 0}, {0, 1}, {1, 0}});
  EXPECT_FALSE(same_family(a, c));
  EXPECT_TRUE(lies_on({Rational(-5), 0, 3, 0}, a));
  EXPECT_FALSE(lies_on({Rational(-5), 0, 2, 0}, a));
}

TEST(Classifier, Errors) {
  const int n = 2;
  const auto x = HPolynomial::variable(n, 0), y = HPolynomial::variable(n, 1);
  EXPECT_THROW(solve_by_branching({x * x + HPolynomial::constant(n, 1) + y * y}, n), std::runtime_error);
  EXPECT_THROW(solve_by_branching({x}, 3), std::invalid_argument);
  const auto z = HPolynomial::variable(3, 0);
  EXPECT_THROW(solve_by_branching({z}, 3), std::runtime_error);
  // Inconsistent branches are dropped: x (x - 1) = 0 and x = 1 leaves x = 1.
  const auto r = solve_by_branching({x * (x - HPolynomial::constant(n, 1)), x - HPolynomial::constant(n, 1)}, n);
  ASSERT_EQ(r.families.size(), 1u);
  EXPECT_EQ(r.families[0].to_string(), "w1 + t w2");
}
