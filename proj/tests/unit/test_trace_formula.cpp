#include <gtest/gtest.h>

#include "lefschetz/cli.hpp"
#include "lefschetz/trace_formula.hpp"

using namespace lefschetz;

namespace {

Scenario data(const std::string& name) { return load_scenario(std::string(LEFSCHETZ_TEST_DATA) + "/data/" + name); }

}  // namespace

TEST(TraceFormula, AffineLineBothSidesVanish) {
  for (const char* f : {"affine_line_p2.scn", "affine_line_p3.scn", "affine_line_p5.scn"}) {
    const VerificationReport r = verify(data(f));
    EXPECT_TRUE(r.all_ok()) << r.diagnostics();
    for (const auto& row : r.rows) {
      EXPECT_EQ(row.lhs, 0);
      EXPECT_EQ(row.rhs, 0);
    }
  }
}

TEST(TraceFormula, NegativeControlFailsAtFirstTwist) {
  const Scenario s = data("negative_control.scn");
  const VerificationReport r = verify(s);
  ASSERT_EQ(r.rows.size(), 3u);
  EXPECT_EQ(r.rows[0].lhs, 0);
  EXPECT_EQ(r.rows[0].rhs, 2);
  EXPECT_FALSE(r.rows[0].ok());
  EXPECT_TRUE(r.rows[1].ok());
  EXPECT_THROW(verify_or_throw(s), ScenarioMismatch);
}

TEST(TraceFormula, OrdinaryCurveTraces) {
  const Scenario s = data("ordinary_f5.scn");
  const VerificationReport r = verify(s);
  EXPECT_TRUE(r.all_ok()) << r.diagnostics();
  ASSERT_GE(r.rows.size(), 2u);
  EXPECT_EQ(r.rows[0].fix_count, 9);
  EXPECT_EQ(r.rows[0].lhs, 3);
  EXPECT_EQ(r.rows[1].fix_count, 27);
  EXPECT_EQ(r.rows[1].lhs, 1);
}

TEST(TraceFormula, ScaledRightSideIsCaught) {
  VerifyOptions o;
  o.rhs_u_scale = 2;
  EXPECT_FALSE(verify(data("ordinary_f5.scn"), o).all_ok());
}

TEST(TraceFormula, ScenarioCorpusVerifies) {
  for (const char* f : {"supersingular_f7.scn", "supersingular_f11.scn", "ordinary_f5_proper.scn", "f9_curve.scn",
                        "affine_line_p2_z4_u2.scn"}) {
    const VerificationReport r = verify(data(f));
    EXPECT_TRUE(r.all_ok()) << f << "\n" << r.diagnostics();
  }
}

TEST(TraceFormula, WoodsHoleOnOrdinaryCurve) {
  const FiniteField f = build_field(5, 1);
  const EllipticCurve e(f, f.one(), f.one(), f.zero());
  for (const auto& pt : rational_points(e)) {
    for (int m = 1; m <= 3; ++m) {
      const WoodsHoleResult w = woods_hole_verify(e, {pt, 1, 1}, m);
      EXPECT_TRUE(w.ok) << pt.to_string() << " m = " << m;
    }
  }
}

TEST(TraceFormula, ZpLimitsDiffer) {
  const auto rows = zp_counterexample(9, {1, 2});
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].lhs, 0);
  EXPECT_EQ(rows[0].rhs, 9);
  EXPECT_EQ(rows[0].valuation, 2);
  EXPECT_FALSE(rows[0].equal_in_zp);
  ASSERT_EQ(rows[0].congruences.size(), 3u);
  EXPECT_TRUE(rows[0].congruences[1].second);
  EXPECT_FALSE(rows[0].congruences[2].second);
}
