#include <gtest/gtest.h>

#include "lefschetz/correspondence.hpp"
#include "lefschetz/error.hpp"

using namespace lefschetz;

namespace {

EllipticCurve curve(std::uint32_t p, std::int64_t c2, std::int64_t c1, std::int64_t c0) {
  const FiniteField f = build_field(p, 1);
  return EllipticCurve(f, f.from_int(c0), f.from_int(c1), f.from_int(c2));
}

}  // namespace

TEST(Correspondence, AffineFixedPointsMatchClosedForm) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const FiniteField f = build_field(p, 1);
    for (std::int64_t a = 1; a < p; ++a) {
      const Correspondence c = Correspondence::affine(f.from_int(a), f.one());
      for (int m = 1; m <= 3; ++m) {
        const FixedPointSet s = brute_force_fixed_points(c, m);
        ASSERT_TRUE(s.complete);
        EXPECT_EQ(s.count, fix_count(c, m));
      }
    }
  }
  EXPECT_THROW(Correspondence::affine(build_field(3, 1).zero(), build_field(3, 1).one()), DomainError);
}

TEST(Correspondence, TranslationCountIsIndependentOfPoint) {
  const EllipticCurve e = curve(7, 0, 1, 0);
  for (int m = 1; m <= 2; ++m) {
    const TranslationCheck tc = translation_independence_check(e, m);
    EXPECT_TRUE(tc.ok);
    EXPECT_EQ(tc.expected, m == 1 ? 8 : 64);
    EXPECT_EQ(tc.counts.size(), 8u);
  }
}

TEST(Correspondence, NegationFixedPoints) {
  // Fix(Fr o [-1]) = #E + 2 - ... closed form k^2 q^m + t_m + 1 for sign -1, k = 1
  const EllipticCurve e = curve(5, 0, 1, 1);
  const Correspondence c = Correspondence::elliptic(e, {CurvePoint::at_infinity(), -1, 1});
  for (int m = 1; m <= 2; ++m) {
    const FixedPointSet s = brute_force_fixed_points(c, m);
    ASSERT_TRUE(s.complete);
    EXPECT_EQ(s.count, fix_count(c, m));
  }
  EXPECT_EQ(fix_count(c, 1), 5 + (-3) + 1);
}

TEST(Correspondence, MultiplicationByTwo) {
  const EllipticCurve e = curve(5, 0, 1, 1);
  const Correspondence c = Correspondence::elliptic(e, {CurvePoint::at_infinity(), 1, 2});
  // 4 q - 2 t + 1 = 20 + 6 + 1
  EXPECT_EQ(fix_count(c, 1), 27);
  // Fixed points may lie in large extensions; a small budget must not claim
  // completeness with the wrong count.
  const FixedPointSet s = brute_force_fixed_points(c, 1, OracleBudget{12});
  if (s.complete) EXPECT_EQ(s.count, 27);
}

TEST(Correspondence, LocalTerms) {
  SheafDatum sheaf = SheafDatum::identity(3, 2, 2);
  EXPECT_EQ(local_term_sum(sheaf, std::int64_t{5}), 1);  // 5 * 2 mod 9
  FixedPointSet incomplete;
  EXPECT_THROW(local_term_sum(sheaf, incomplete), DomainError);
}

TEST(Correspondence, EndomorphismsCommuteWithFrobenius) {
  const EllipticCurve e = curve(7, 1, 0, 3);
  for (const auto& pt : rational_points(e)) {
    EXPECT_TRUE(commutes_with_frobenius(e, {pt, 1, 1}, 2));
    EXPECT_TRUE(commutes_with_frobenius(e, {pt, -1, 3}, 1));
  }
  EXPECT_TRUE(origin_fixed(Correspondence::elliptic(e, {CurvePoint::at_infinity(), 1, 1})));
}
