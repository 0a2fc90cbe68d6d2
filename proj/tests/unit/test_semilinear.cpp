#include <gtest/gtest.h>

#include "lefschetz/error.hpp"
#include "lefschetz/semilinear.hpp"

using namespace lefschetz;

namespace {

RingMatrix diag(const WittRing& w, std::vector<WittVector> d) {
  RingMatrix m(w, static_cast<int>(d.size()));
  for (int i = 0; i < static_cast<int>(d.size()); ++i) m.set(i, i, d[static_cast<std::size_t>(i)]);
  return m;
}

}  // namespace

TEST(Semilinear, WittBasisRoundTrip) {
  const WittRing w = WittRing::get(build_field(3, 2), 2);
  const WittBasis b(w);
  EXPECT_EQ(b.dimension(), 2);
  const FiniteField f = w.residue_field();
  for (std::uint64_t i = 0; i < 9; ++i) {
    const WittVector x = w.from_components({f.element(i), f.element(8 - i)});
    EXPECT_EQ(b.from_coordinates(b.coordinates(x)), x);
  }
}

TEST(Semilinear, UnitRootFixedModuleIsFree) {
  // Phi = sigma on W_2(F_4): fixed module is W_2(F_2) = Z/4, free of rank 1.
  const WittRing w = WittRing::get(build_field(2, 2), 2);
  const SemilinearModule m(RingMatrix::identity(w, 1), 1, 1);
  const StabilizedFixedModule s = stabilize_fixed_module(m);
  EXPECT_EQ(s.extension_degree, 1);
  EXPECT_TRUE(s.fixed.is_free());
  EXPECT_EQ(s.fixed.free_rank(), 1);
  EXPECT_TRUE(fixed_image(s).injective);
}

TEST(Semilinear, NilpotentFixedModuleIsZero) {
  const WittRing w = WittRing::get(build_field(5, 1), 2);
  const SemilinearModule m(diag(w, {w.from_int(5)}), 1, 1);
  const StabilizedFixedModule s = stabilize_fixed_module(m);
  EXPECT_EQ(s.fixed.free_rank(), 0);
  EXPECT_EQ(trace_on_fixed(s, RingMatrix::identity(w, 1), 1, 1), 0);
}

TEST(Semilinear, FixedModuleNeedsExtension) {
  // Phi(v) = -sigma(v) over F_3: fixed vectors need sqrt(-1), in F_9.
  const WittRing w = WittRing::get(build_field(3, 1), 1);
  const SemilinearModule m(diag(w, {w.from_int(-1)}), 1, 1);
  EXPECT_EQ(fixed_module(m).free_rank(), 0);
  const StabilizedFixedModule s = stabilize_fixed_module(m);
  EXPECT_EQ(s.extension_degree, 2);
  EXPECT_EQ(s.fixed.free_rank(), 1);
  // F = -1, so Tr(F^m | fixed) = (-1)^m
  EXPECT_EQ(trace_on_fixed(s, RingMatrix::identity(w, 1), 1, 1), 2);
  EXPECT_EQ(trace_on_fixed(s, RingMatrix::identity(w, 1), 2, 1), 1);
}

TEST(Semilinear, TraceAgreesWithModuleTraceForUnitRoot) {
  const WittRing w = WittRing::get(build_field(5, 1), 3);
  RingMatrix a(w, 2);
  a.set(0, 0, w.teichmuller(w.residue_field().from_int(2)));
  a.set(0, 1, w.from_int(1));
  a.set(1, 1, w.from_int(25));
  const SemilinearModule m(a, 1, 1);
  const RingMatrix phi = RingMatrix::identity(w, 2);
  const auto th = trace_threshold(m, phi, 1);
  for (int k = th.threshold; k < th.threshold + 3; ++k) {
    const ModuleTrace full = trace_on_module(m, phi, k, 1);
    ASSERT_TRUE(full.prime);
    EXPECT_EQ(trace_on_fixed(m, phi, k, 1), *full.prime) << "m = " << k;
  }
}

TEST(Semilinear, SolveOneMinusPhi) {
  const WittRing w = WittRing::get(build_field(2, 1), 2);
  const SemilinearModule m(RingMatrix::identity(w, 1), 1, 1);
  // x - sigma(x) = 1 has no solution over F_2 but has one over F_4 (Artin-Schreier)
  EXPECT_FALSE(solve_one_minus_phi_at(m, {w.one()}, 1));
  const OneMinusPhiSolution sol = solve_one_minus_phi(m, {w.one()});
  EXPECT_GT(sol.extension_degree, 1);
  const WittRing big = sol.x[0].ring();
  const SemilinearModule mb = m.base_change(sol.extension_degree);
  const ModuleVector img = mb.apply(sol.x);
  EXPECT_EQ(sol.x[0] - img[0], big.one());
}

TEST(Semilinear, EntriesMustLieOverDefinitionField) {
  const WittRing w = WittRing::get(build_field(3, 2), 1);
  RingMatrix a(w, 1);
  a.set(0, 0, w.teichmuller(w.residue_field().generator()));
  EXPECT_THROW(SemilinearModule(a, 1, 1), DomainError);
  EXPECT_NO_THROW(SemilinearModule(a, 1, 2));
}

TEST(Semilinear, InverseOverLocalRing) {
  const WittRing w = WittRing::get(build_field(3, 1), 2);
  RingMatrix a(w, 2);
  a.set(0, 0, w.from_int(1));
  a.set(0, 1, w.from_int(3));
  a.set(1, 0, w.from_int(2));
  a.set(1, 1, w.from_int(4));
  const auto inv = inverse(a);
  ASSERT_TRUE(inv);
  EXPECT_EQ(a * *inv, RingMatrix::identity(w, 2));
  a.set(1, 1, w.from_int(6));  // det = 0 mod 3
  EXPECT_FALSE(inverse(a));
}
