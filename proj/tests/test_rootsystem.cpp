#include <gtest/gtest.h>

#include "affvoa/lie.hpp"
#include "affvoa/root_datum.hpp"
#include "oracles/so_matrix.hpp"

using namespace affvoa;

namespace {

std::vector<RootDatumPtr> small_data() {
  return {RootDatum::build(RootType::D, 3), RootDatum::build(RootType::D, 4), RootDatum::build(RootType::D, 5),
          RootDatum::build(RootType::B, 2), RootDatum::build(RootType::B, 3)};
}

LieElement bracket_basis(const RootDatumPtr& d, int a, int b) {
  return bracket(LieElement::basis(d, a), LieElement::basis(d, b));
}

// Matrix image of a basis element under the oracle realization.
oracle::IntMatrix image(const RootDatum& d, int b) {
  const bool btype = d.type() == RootType::B;
  if (d.is_root(b)) return oracle::root_matrix(d.weight(b), btype);
  const int s = d.simple_root(d.cartan_slot(b));
  return oracle::commutator(oracle::root_matrix(d.weight(s), btype),
                            oracle::root_matrix(d.weight(d.opposite(s)), btype));
}

}  // namespace

TEST(RootSystem, CountsAndDualCoxeter) {
  for (int l = 3; l <= 7; ++l) {
    auto d = RootDatum::build(RootType::D, l);
    EXPECT_EQ(d->num_roots(), 2 * l * (l - 1));
    EXPECT_EQ(d->dim(), 2 * l * l - l);
    EXPECT_EQ(d->dual_coxeter(), 2 * l - 2);
  }
  for (int l = 2; l <= 6; ++l) {
    auto d = RootDatum::build(RootType::B, l);
    EXPECT_EQ(d->num_roots(), 2 * l * l);
    EXPECT_EQ(d->dim(), 2 * l * l + l);
    EXPECT_EQ(d->dual_coxeter(), 2 * l - 1);
  }
  auto d4 = RootDatum::build(RootType::D, 4);
  EXPECT_EQ(d4->num_roots(), 24);
  EXPECT_EQ(d4->dim(), 28);
  EXPECT_EQ(d4->dual_coxeter(), 6);
}

TEST(RootSystem, RankOutOfRangeIsRejected) {
  EXPECT_THROW(RootDatum::build(RootType::D, 2), std::invalid_argument);
  EXPECT_THROW(RootDatum::build(RootType::B, 1), std::invalid_argument);
  EXPECT_THROW(RootDatum::build(RootType::D, 0), std::invalid_argument);
}

TEST(RootSystem, MatrixRealizationIsARepresentation) {
  for (const auto& d : small_data()) {
    for (int a = 0; a < d->dim(); ++a)
      for (int b = 0; b < d->dim(); ++b) {
        auto expect = oracle::commutator(image(*d, a), image(*d, b));
        auto got = oracle::zero_matrix(static_cast<int>(expect.size()));
        for (const auto& t : d->bracket(a, b)) {
          const auto m = image(*d, t.index);
          for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t j = 0; j < m.size(); ++j) got[i][j] += t.coeff * m[i][j];
        }
        ASSERT_EQ(got, expect) << d->label(a) << " , " << d->label(b);
      }
  }
}

TEST(RootSystem, KillingFormIsTwiceDualCoxeterTimesForm) {
  for (const auto& d : small_data()) {
    const int n = d->dim();
    // ad matrices: ad[a][i][j] = coefficient of x_i in [x_a, x_j]
    std::vector<std::vector<std::vector<long>>> ad(n, std::vector<std::vector<long>>(n, std::vector<long>(n, 0)));
    for (int a = 0; a < n; ++a)
      for (int j = 0; j < n; ++j)
        for (const auto& t : d->bracket(a, j)) ad[a][t.index][j] += t.coeff;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        long tr = 0;
        for (int i = 0; i < n; ++i)
          for (int k = 0; k < n; ++k) tr += ad[a][i][k] * ad[b][k][i];
        ASSERT_EQ(tr, 2L * d->dual_coxeter() * d->form(a, b)) << d->label(a) << " " << d->label(b);
      }
  }
}

TEST(RootSystem, ChevalleyIntegersAreRootStringLengths) {
  for (const auto& d : small_data()) {
    for (int a = 0; a < d->dim(); ++a)
      for (int b = 0; b < d->dim(); ++b) {
        if (!d->is_root(a) || !d->is_root(b)) continue;
        Weight sum = d->weight(a);
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += d->weight(b)[i];
        const int n = d->structure_constant(a, b);
        if (!d->root_index(sum)) {
          EXPECT_EQ(n, 0);
          continue;
        }
        int p = 0;
        Weight w = d->weight(b);
        while (true) {
          for (std::size_t i = 0; i < w.size(); ++i) w[i] -= d->weight(a)[i];
          if (!d->root_index(w)) break;
          ++p;
        }
        EXPECT_EQ(std::abs(n), p + 1);
        EXPECT_EQ(n, -d->structure_constant(b, a));
        if (std::abs(n) == 2) EXPECT_EQ(d->type(), RootType::B);
      }
  }
}

TEST(RootSystem, JacobiAndFormInvariance) {
  for (const auto& d : {RootDatum::build(RootType::D, 4), RootDatum::build(RootType::B, 2)}) {
    const int n = d->dim();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          const auto x = LieElement::basis(d, a), y = LieElement::basis(d, b), z = LieElement::basis(d, c);
          const auto j = bracket(bracket(x, y), z) + bracket(bracket(y, z), x) + bracket(bracket(z, x), y);
          ASSERT_TRUE(j.is_zero());
          const auto xy = bracket(x, y), yz = bracket(y, z);
          Rational lhs = 0, rhs = 0;
          for (const auto& [k, v] : xy.terms()) lhs += v * d->form(k, c);
          for (const auto& [k, v] : yz.terms()) rhs += v * d->form(a, k);
          ASSERT_EQ(lhs, rhs);
        }
  }
}

TEST(RootSystem, CartanMatrixAndNormalization) {
  auto d = RootDatum::build(RootType::D, 4);
  const int expected[4][4] = {{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) EXPECT_EQ(d->cartan_matrix(i, j), expected[i][j]);
  // [h_i, e_{alpha_j}] = a_ji e_{alpha_j}
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      auto r = bracket_basis(d, d->cartan(i), d->simple_root(j));
      EXPECT_EQ(r, LieElement::basis(d, d->simple_root(j), d->cartan_matrix(j, i)));
    }
  // (theta, theta) = 2 means (e_theta, f_theta) = 1 in the simply laced case.
  EXPECT_EQ(d->form(d->highest_root(), d->lowest_root()), 1);
  auto b = RootDatum::build(RootType::B, 3);
  EXPECT_EQ(b->form(b->highest_root(), b->lowest_root()), 1);
  const int short_root = b->parse_label("E(+1)");
  EXPECT_EQ(b->form(short_root, b->opposite(short_root)), 2);
}

TEST(RootSystem, CorootOfEpsilonOnePlusEpsilonTwo) {
  for (int l = 4; l <= 6; ++l) {
    auto d = RootDatum::build(RootType::D, l);
    const int e = d->parse_label("E(+1,+2)");
    LieElement expect(d);
    expect.add(d->cartan(0), 1);
    for (int i = 1; i <= l - 3; ++i) expect.add(d->cartan(i), 2);
    expect.add(d->cartan(l - 2), 1);
    expect.add(d->cartan(l - 1), 1);
    EXPECT_EQ(bracket_basis(d, e, d->opposite(e)), expect);
  }
}

TEST(RootSystem, WeightOf) {
  auto d = RootDatum::build(RootType::D, 4);
  const int a1 = d->parse_label("E(+1,-2)"), a2 = d->parse_label("E(+2,-3)");
  EXPECT_EQ(*weight_of(LieElement::basis(d, a1)), d->weight(d->simple_root(0)));
  EXPECT_EQ(*weight_of(LieElement::basis(d, d->cartan(2))), Weight(4, 0));
  EXPECT_FALSE(weight_of(LieElement::basis(d, a1) + LieElement::basis(d, a2)));
  auto x = LieElement::basis(d, a1, 3) + LieElement::basis(d, d->cartan(1), -2);
  EXPECT_TRUE(bracket(x, x).is_zero());
}

TEST(RootSystem, LabelsRoundTrip) {
  for (const auto& d : small_data()) {
    for (int b = 0; b < d->dim(); ++b) EXPECT_EQ(d->parse_label(d->label(b)), b);
    EXPECT_EQ(d->opposite(d->opposite(3)), 3);
  }
  auto d = RootDatum::build(RootType::D, 4);
  EXPECT_EQ(d->parse_label("F(+1,-2)"), d->parse_label("E(-1,+2)"));
  EXPECT_THROW(d->parse_label("E(+1,+1)"), std::invalid_argument);
  EXPECT_THROW(d->parse_label("E(+1)"), std::invalid_argument);
  EXPECT_THROW(d->parse_label("H(5)"), std::invalid_argument);
}

TEST(RootSystem, TableRoundTrip) {
  for (const auto& d : small_data()) {
    auto e = RootDatum::from_table(d->to_table());
    ASSERT_EQ(e->dim(), d->dim());
    for (int a = 0; a < d->dim(); ++a)
      for (int b = 0; b < d->dim(); ++b) {
        EXPECT_EQ(e->structure_constant(a, b), d->structure_constant(a, b));
        EXPECT_EQ(e->form(a, b), d->form(a, b));
        ASSERT_EQ(e->bracket(a, b).size(), d->bracket(a, b).size());
      }
    EXPECT_EQ(e->to_table(), d->to_table());
  }
  EXPECT_THROW(RootDatum::from_table("garbage"), std::runtime_error);
}

TEST(Automorphism, TrialityOnSimpleRoots) {
  auto d = RootDatum::build(RootType::D, 4);
  auto th = DiagramAutomorphism::triality(d);
  EXPECT_EQ(th.order(), 3);
  auto img = [&](const char* s) { return d->label(th.image(d->parse_label(s))); };
  EXPECT_EQ(img("E(+1,-2)"), "E(+3,-4)");
  EXPECT_EQ(img("E(+2,-3)"), "E(+2,-3)");
  EXPECT_EQ(img("E(+3,-4)"), "E(+3,+4)");
  EXPECT_EQ(img("E(+3,+4)"), "E(+1,-2)");
  for (int a = 0; a < d->dim(); ++a)
    for (int b = 0; b < d->dim(); ++b) {
      const auto x = LieElement::basis(d, a), y = LieElement::basis(d, b);
      ASSERT_EQ(th.apply(bracket(x, y)), bracket(th.apply(x), th.apply(y)));
    }
  for (int b = 0; b < d->dim(); ++b) {
    const auto x = LieElement::basis(d, b);
    EXPECT_EQ(th.apply(th.apply(th.apply(x))), x);
  }
  // Cartan part: H(i) -> H(sigma(i)).
  EXPECT_EQ(th.apply(LieElement::basis(d, d->cartan(0))), LieElement::basis(d, d->cartan(2)));
  // On weights: 2w1 -> 2w3.
  EXPECT_EQ(d->to_omega(th.apply(d->from_omega(std::vector<int>{2, 0, 0, 0}))), (std::vector<int>{0, 0, 2, 0}));
}

TEST(Automorphism, RejectedWhereUndefined) {
  EXPECT_THROW(DiagramAutomorphism::triality(RootDatum::build(RootType::D, 5)), std::invalid_argument);
  EXPECT_THROW(DiagramAutomorphism::spinor_swap(RootDatum::build(RootType::B, 3)), std::invalid_argument);
  auto d = RootDatum::build(RootType::D, 4);
  EXPECT_THROW(DiagramAutomorphism::from_simple_permutation(d, {1, 0, 2, 3}), std::invalid_argument);
  auto sw = DiagramAutomorphism::spinor_swap(RootDatum::build(RootType::D, 5));
  EXPECT_EQ(sw.order(), 2);
}

TEST(Weyl, Dimensions) {
  auto d4 = RootDatum::build(RootType::D, 4);
  EXPECT_EQ(weyl_dimension(*d4, std::vector<int>{2, 0, 0, 0}), 35);  // Sym^2(8) - 1
  EXPECT_EQ(weyl_dimension(*d4, std::vector<int>{0, 0, 0, 0}), 1);
  EXPECT_EQ(weyl_dimension(*d4, std::vector<int>{1, 0, 0, 0}), 8);
  EXPECT_EQ(weyl_dimension(*d4, std::vector<int>{0, 1, 0, 0}), 28);
  for (int l = 4; l <= 7; ++l) {
    auto d = RootDatum::build(RootType::D, l);
    std::vector<int> w(l, 0);
    w[0] = 2;
    EXPECT_EQ(weyl_dimension(*d, w), (2 * l) * (2 * l + 1) / 2 - 1);
  }
  auto b3 = RootDatum::build(RootType::B, 3);
  EXPECT_EQ(weyl_dimension(*b3, std::vector<int>{0, 0, 1}), 8);  // spin representation
  EXPECT_THROW(weyl_dimension(*d4, std::vector<int>{-1, 0, 0, 0}), std::invalid_argument);
}
