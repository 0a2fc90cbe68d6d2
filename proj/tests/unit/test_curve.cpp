#include <gtest/gtest.h>

#include "lefschetz/curve.hpp"
#include "lefschetz/error.hpp"
#include "oracles/oracles.hpp"

using namespace lefschetz;

namespace {

EllipticCurve curve(std::uint32_t p, int D, std::int64_t c2, std::int64_t c1, std::int64_t c0) {
  const FiniteField f = build_field(p, D);
  return EllipticCurve(f, f.from_int(c0), f.from_int(c1), f.from_int(c2));
}

}  // namespace

TEST(Curve, SingularCubicRejected) {
  EXPECT_THROW(curve(5, 1, 0, 0, 0), DomainError);
  EXPECT_THROW(curve(3, 1, 0, 0, 2), DomainError);  // x^3 + 2 = (x - 1)^3 in char 3
  EXPECT_THROW(curve(2, 1, 0, 1, 1), DomainError);
}

TEST(Curve, OrdinaryCurveOverF5) {
  // y^2 = x^3 + x + 1: 9 points, t = -3, Hasse invariant 2
  const EllipticCurve e = curve(5, 1, 0, 1, 1);
  EXPECT_EQ(point_count(e), 9);
  EXPECT_EQ(trace_t(e), -3);
  EXPECT_EQ(hasse_invariant(e), build_field(5, 1).from_int(2));
  EXPECT_FALSE(is_supersingular(e));
  EXPECT_EQ(rational_points(e).size(), 9u);
}

TEST(Curve, SupersingularCurveOverF7) {
  const EllipticCurve e = curve(7, 1, 0, 1, 0);
  EXPECT_TRUE(hasse_invariant(e).is_zero());
  EXPECT_TRUE(is_supersingular(e));
  EXPECT_EQ(point_count(e), 8);
  EXPECT_EQ(point_count(e, 2), 64);
}

TEST(Curve, ExtensionCountsMatchEnumeration) {
  for (const auto& e : {curve(5, 1, 0, 1, 1), curve(7, 1, 1, 0, 3), curve(3, 1, 1, 0, 1)}) {
    for (int s = 1; s <= 3; ++s) EXPECT_EQ(point_count(e, s), enumerated_point_count(e, s)) << e.to_string();
  }
}

TEST(Curve, CountsMatchLegendreOracle) {
  for (std::int64_t c1 = 0; c1 < 7; ++c1) {
    for (std::int64_t c0 = 0; c0 < 7; ++c0) {
      if (oracle::cubic_discriminant(7, 2, c1, c0) == 0) continue;
      const EllipticCurve e = curve(7, 1, 2, c1, c0);
      EXPECT_EQ(point_count(e), oracle::count_fp(7, 2, c1, c0));
      EXPECT_EQ(point_count(e, 2), oracle::count_fp2(7, 2, c1, c0));
      EXPECT_EQ(hasse_invariant(e).index(), static_cast<std::uint64_t>(oracle::hasse_invariant(7, 2, c1, c0)));
    }
  }
}

TEST(Curve, GroupLaw) {
  const EllipticCurve e = curve(7, 1, 0, 3, 2);
  const auto pts = rational_points(e);
  for (const auto& a : pts) {
    EXPECT_EQ(e.add(a, e.negate(a)), CurvePoint::at_infinity());
    EXPECT_EQ(e.multiply(static_cast<std::int64_t>(pts.size()), a), CurvePoint::at_infinity());
    for (const auto& b : pts) {
      EXPECT_EQ(e.add(a, b), e.add(b, a));
      EXPECT_TRUE(e.contains(e.add(a, b)));
      for (const auto& c : pts) EXPECT_EQ(e.add(e.add(a, b), c), e.add(a, e.add(b, c)));
    }
  }
}

TEST(Curve, CharacteristicThreeHasseInvariantIsC2) {
  EXPECT_TRUE(is_supersingular(curve(3, 1, 0, 2, 1)));
  EXPECT_FALSE(is_supersingular(curve(3, 1, 1, 0, 1)));
}

TEST(Curve, H1ActionOfNegationIsMinusOne) {
  const EllipticCurve e = curve(5, 1, 0, 1, 1);
  const EllipticEndomorphism neg{CurvePoint::at_infinity(), -1, 1};
  EXPECT_EQ(h1_action(e, neg), build_field(5, 1).from_int(-1));
  const EllipticEndomorphism tr{rational_points(e)[1], 1, 1};
  EXPECT_TRUE(h1_action(e, tr).is_one());
}

TEST(Curve, EtaleH1RankIsOneIffOrdinary) {
  EXPECT_EQ(etale_h1(curve(5, 1, 0, 1, 1)).fixed.free_rank(), 1);
  EXPECT_EQ(etale_h1(curve(7, 1, 0, 1, 0)).fixed.free_rank(), 0);
}

TEST(Curve, CohomologyRanks) {
  const EllipticCurve e = curve(5, 1, 0, 1, 1);
  const EllipticEndomorphism id{CurvePoint::at_infinity(), 1, 1};
  EXPECT_EQ(cohomology_profile(Space::AffineLine, nullptr, nullptr).ranks(), (std::array<int, 3>{0, 0, 0}));
  EXPECT_EQ(cohomology_profile(Space::ProperElliptic, &e, &id).ranks(), (std::array<int, 3>{1, 1, 0}));
}

TEST(Curve, HyperellipticHasseWitt) {
  // y^2 = x^5 + 1 over F_7 (genus 2)
  const FiniteField f = build_field(7, 1);
  std::vector<FieldElement> c(6, f.zero());
  c[0] = f.one();
  c[5] = f.one();
  const HyperellipticCurve h(f, Polynomial(f, c));
  EXPECT_EQ(h.genus(), 2);
  const FieldMatrix hw = hasse_witt(h);
  ASSERT_EQ(hw.size(), 2u);
  // f^3 = x^15 + 3 x^10 + 3 x^5 + 1; entries x^{7i - j}: x^6, x^5, x^13, x^12
  EXPECT_TRUE(hw[0][0].is_zero());
  EXPECT_EQ(hw[0][1], f.from_int(3));
  EXPECT_TRUE(hw[1][0].is_zero());
  EXPECT_TRUE(hw[1][1].is_zero());
}
