#include <gtest/gtest.h>

#include "holeforge/lifting.hpp"
#include "test_support.hpp"

namespace holeforge {
namespace {

using testing::L;
using testing::P;
using testing::uniform;

const LiftStep& step1() {
  static const LiftStep s = lift_lambda(L({5, 9, 43}), 1);
  return s;
}

TEST(LiftLambda, Examples) {
  EXPECT_EQ(step1().ell, 387);
  EXPECT_EQ(step1().lambda_after, L({392, 9, 43}));
  auto s2 = lift_lambda(L({5, 9, 43}), 2);
  EXPECT_EQ(s2.ell, 215);
  EXPECT_EQ(s2.lambda_after, L({5, 224, 43}));
  auto s3 = lift_lambda(L({1, 1}), 1);
  EXPECT_EQ(s3.ell, 1);
  EXPECT_EQ(s3.lambda_after, L({2, 1}));
}

TEST(LiftLambda, Errors) {
  EXPECT_THROW(lift_lambda(L({5, 9, 43}), 0), ArgumentError);
  EXPECT_THROW(lift_lambda(L({5, 9, 43}), 4), ArgumentError);
  EXPECT_THROW(lift_lambda(L({5}), 1), ArgumentError);
}

TEST(LiftLambda, QuotientIdentity) {
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<BigInt> lam;
    const int n = static_cast<int>(uniform(2, 5));
    for (int k = 0; k < n; ++k) lam.push_back(uniform(1, 40));
    const std::size_t i = uniform(1, n);
    auto s = lift_lambda(lam, i);
    EXPECT_EQ(lcm_all(s.lambda_before) / s.lambda_before[i - 1], lcm_all(s.lambda_after) / s.lambda_after[i - 1]);
  }
}

TEST(Beta, Examples) {
  EXPECT_EQ(beta(step1(), P({4, 7, 18, 2})), 311);
  EXPECT_EQ(BigInt(774 - 43 * 7 - 9 * 18), 311);
  const auto s = make_simplex(L({5, 9, 43}));
  EXPECT_EQ(beta(step1(), s.vertex(2)), 0);
  EXPECT_EQ(beta(step1(), s.vertex(3)), 0);
  EXPECT_EQ(beta(step1(), s.vertex(0)), 387);
}

TEST(Alpha, Examples) {
  const auto image = alpha(step1(), P({4, 7, 18, 2}));
  EXPECT_EQ(image, P({315, 7, 18, 2}));
  const auto lifted = make_simplex(step1().lambda_after);
  EXPECT_EQ(lifted.lcm(), 151704);
  EXPECT_EQ(lifted.skew_height(image), 7);
  EXPECT_EQ(alpha(step1(), P({0, 0, 0, 0})), P({0, 0, 0, 0}));
  EXPECT_EQ(alpha(step1(), P({0, 0, 0, 1})), P({387, 0, 0, 1}));
}

TEST(AlphaInverse, Examples) {
  EXPECT_EQ(alpha_inverse(step1(), P({315, 7, 18, 2})), P({4, 7, 18, 2}));
  EXPECT_EQ(alpha_inverse(step1(), P({0, 0, 0, 0})), P({0, 0, 0, 0}));
  for (int trial = 0; trial < 200; ++trial) {
    auto z = P({uniform(-500, 500), uniform(-500, 500), uniform(-500, 500), uniform(-5, 5)});
    EXPECT_EQ(alpha_inverse(step1(), alpha(step1(), z)), z);
    EXPECT_EQ(alpha(step1(), alpha_inverse(step1(), z)), z);
  }
}

TEST(Properties, HeightPreservation) {
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<BigInt> lam;
    for (int k = 0; k < 3; ++k) lam.push_back(uniform(1, 60));
    const std::size_t i = uniform(1, 3);
    auto st = lift_lambda(lam, i);
    const auto before = make_simplex(st.lambda_before), after = make_simplex(st.lambda_after);
    auto z = P({uniform(-100, 100), uniform(-100, 100), uniform(-100, 100), uniform(-4, 4)});
    const auto a = alpha(st, z);
    EXPECT_EQ(after.skew_height(a), before.skew_height(z));
    for (std::size_t j = 1; j <= 4; ++j)
      if (j != i) EXPECT_EQ(a.coord(j), z.coord(j));
  }
}

TEST(Properties, StrictIncreaseOnHoles) {
  for (auto lam : {L({5, 9, 43}), L({7, 13, 89}), L({5, 8, 19})}) {
    const auto s = make_simplex(lam);
    const auto holes = enumerate_holes(s, 40).holes;
    ASSERT_FALSE(holes.empty());
    for (std::size_t i = 1; i <= 3; ++i) {
      auto st = lift_lambda(lam, i);
      for (const auto& h : holes) {
        EXPECT_GE(beta(st, h.point), 1);
        EXPECT_GT(alpha(st, h.point).coord(i), h.point.coord(i));
      }
    }
  }
}

TEST(Properties, SemigroupMapsIntoLiftedSemigroup) {
  // Q(2,3,5) lifted on facet 3: (2,3,11), small enough for the oracle.
  const auto base = make_simplex(L({2, 3, 5}));
  for (std::size_t i = 1; i <= 3; ++i) {
    auto st = lift_lambda(base.lambdas(), i);
    SemigroupOracle src(base), dst(make_simplex(st.lambda_after));
    const auto& gens = src.generators();
    for (int trial = 0; trial < 60; ++trial) {
      auto z = LatticePoint::zero(4);
      const long d = uniform(1, 4);
      for (long k = 0; k < d; ++k) z += gens[uniform(0, static_cast<long>(gens.size()) - 1)];
      EXPECT_TRUE(dst.contains(alpha(st, z))) << z;
    }
  }
  // and for the good triple, degree <= 2, via the kernel-structure test
  auto st = lift_lambda(L({5, 9, 43}), 1);
  SemigroupOracle src(make_simplex(L({5, 9, 43})));
  const auto lifted = make_simplex(st.lambda_after);
  const auto& gens = src.generators();
  for (int trial = 0; trial < 200; ++trial) {
    auto z = gens[uniform(0, 507)] + gens[uniform(0, 507)];
    EXPECT_TRUE(degree_two_member(lifted, alpha(st, z)));
  }
}

TEST(Properties, HoleTransport) {
  // Every degree <= 2 hole of Q(392,9,43) with skew height <= 200 pulls back
  // to a hole of Q(5,9,43).
  const auto base = make_simplex(L({5, 9, 43}));
  auto st = lift_lambda(base.lambdas(), 1);
  const auto lifted = make_simplex(st.lambda_after);
  SemigroupOracle src(base);
  int holes_seen = 0;
  // Degree-2 points of skew height h >= 1 are u_h (if it has degree 2) or
  // u_h + v_j (if u_h has degree 1).
  for (BigInt h = 1; h <= 200; ++h) {
    const auto u = unique_reduced_element(lifted, h);
    std::vector<LatticePoint> candidates;
    if (u.degree() == 2) candidates.push_back(u);
    if (u.degree() == 1)
      for (std::size_t j = 1; j <= 3; ++j) candidates.push_back(u + lifted.vertex(j));
    for (const auto& z : candidates) {
      if (degree_two_member(lifted, z)) continue;
      ++holes_seen;
      const auto pre = alpha_inverse(st, z);
      EXPECT_TRUE(in_saturation(base, pre)) << z;
      EXPECT_FALSE(src.contains(pre)) << z;
    }
  }
  EXPECT_GT(holes_seen, 0);
}

TEST(DeepHoleConstruction, KZero) {
  auto c = deep_hole_construction(0);
  EXPECT_EQ(c.base.lambdas(), L({5, 9, 43}));
  EXPECT_TRUE(c.trace.empty());
  EXPECT_EQ(c.simplex.lambdas(), L({5, 9, 43}));
  EXPECT_EQ(c.certificate.transported_hole.point, P({4, 7, 18, 2}));
  EXPECT_EQ(c.certificate.claims.min_height_all_facets, 1);
}

TEST(DeepHoleConstruction, KOne) {
  auto c = deep_hole_construction(1);
  EXPECT_TRUE(c.trace.empty());
  EXPECT_EQ(c.certificate.claims.min_skew_height, 7);
  EXPECT_EQ(c.certificate.claims.min_coordinate_heights, L({1, 1, 1}));
}

TEST(DeepHoleConstruction, KThree) {
  auto c = deep_hole_construction(3);
  ASSERT_EQ(c.trace.size(), 6u);
  for (std::size_t t = 0; t < 6; ++t) EXPECT_EQ(c.trace[t].facet_index, t / 2 + 1);
  for (std::size_t t = 1; t < 6; ++t) EXPECT_EQ(c.trace[t].lambda_before, c.trace[t - 1].lambda_after);
  // Frozen from an independent script applying the lift formulas.
  EXPECT_EQ(c.simplex.lambdas(), L({779, 67003, 104390717}));
  const auto q = transport(c.trace, P({4, 7, 18, 2}));
  EXPECT_EQ(q, P({626, 52115, 43698440, 2}));
  EXPECT_EQ(c.certificate.transported_hole.point, q);
  for (auto f : c.simplex.facets()) EXPECT_GE(height(c.simplex, f, q), 3);
  EXPECT_EQ(c.simplex.skew_height(q), 7);
  EXPECT_FALSE(degree_two_member(c.simplex, q));
  EXPECT_EQ(c.certificate.claims.min_coordinate_heights, L({3, 3, 3}));
}

TEST(DeepHoleConstruction, LargerKPicksLargerBase) {
  EXPECT_EQ(construction_lambda1(7), 5);
  EXPECT_EQ(construction_lambda1(8), 7);
  EXPECT_EQ(construction_lambda1(9), 7);
  EXPECT_EQ(construction_lambda1(10), 9);
  EXPECT_THROW(deep_hole_construction(-1), ArgumentError);
}

}  // namespace
}  // namespace holeforge
