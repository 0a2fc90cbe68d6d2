#include <gtest/gtest.h>

#include "lefschetz/error.hpp"
#include "lefschetz/field.hpp"

using namespace lefschetz;

TEST(Field, ModulusIsSmallestIrreducible) {
  // a^2 + 1 over F_3, a^2 + 2 over F_5, a^3 + a + 1 over F_2
  const auto m9 = build_field(3, 2).modulus();
  EXPECT_EQ(std::vector<std::uint32_t>(m9.begin(), m9.end()), (std::vector<std::uint32_t>{1, 0, 1}));
  const auto m25 = build_field(5, 2).modulus();
  EXPECT_EQ(std::vector<std::uint32_t>(m25.begin(), m25.end()), (std::vector<std::uint32_t>{2, 0, 1}));
  const auto m8 = build_field(2, 3).modulus();
  EXPECT_EQ(std::vector<std::uint32_t>(m8.begin(), m8.end()), (std::vector<std::uint32_t>{1, 1, 0, 1}));
}

TEST(Field, Interned) {
  EXPECT_EQ(build_field(7, 3), build_field(7, 3));
  EXPECT_THROW(build_field(6, 1), DomainError);
  EXPECT_THROW(build_field(2, 17), BudgetExceeded);
}

// Every element of a small field against the axioms, with inverses checked
// by multiplication.
class FieldAxioms : public ::testing::TestWithParam<std::pair<std::uint32_t, int>> {};

TEST_P(FieldAxioms, Exhaustive) {
  const auto [p, r] = GetParam();
  const FiniteField f = build_field(p, r);
  const auto all = all_elements(f);
  ASSERT_EQ(all.size(), f.size());
  for (const auto& a : all) {
    EXPECT_EQ(f.element(a.index()), a);
    EXPECT_EQ(a.pow(f.size()), a);
    if (!a.is_zero()) {
      EXPECT_TRUE((a * a.inverse()).is_one());
    }
    EXPECT_EQ(frobenius_pow(a, static_cast<std::uint64_t>(r)), a);
    for (const auto& b : all) {
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ((a + b) - b, a);
      EXPECT_EQ(frobenius_pow(a + b, 1), frobenius_pow(a, 1) + frobenius_pow(b, 1));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Small, FieldAxioms,
                         ::testing::Values(std::pair{2u, 1}, std::pair{2u, 3}, std::pair{3u, 2}, std::pair{5u, 2},
                                           std::pair{7u, 1}));

TEST(Field, NormOfPrimitiveCubeRootInF4) {
  // omega^2 + omega + 1 = 0, so N(omega) = omega^3 = 1 and Tr(omega) = 1.
  const FiniteField f4 = build_field(2, 2);
  const FieldElement w = f4.generator();
  EXPECT_TRUE(rel_norm(w, 1).is_one());
  EXPECT_TRUE(rel_trace(w, 1).is_one());
}

TEST(Field, TraceAndNormLandInSubfield) {
  const FiniteField f = build_field(3, 4);
  for (std::uint64_t i = 0; i < f.size(); i += 7) {
    const FieldElement x = f.element(i);
    EXPECT_TRUE(in_subfield(rel_trace(x, 2), 2));
    EXPECT_TRUE(in_subfield(rel_norm(x, 1), 1));
  }
}

TEST(Field, EmbeddingIsAHomomorphism) {
  const FiniteField small = build_field(5, 2);
  const FiniteField big = build_field(5, 4);
  const Embedding e = embed(small, big);
  for (std::uint64_t i = 0; i < small.size(); ++i) {
    const FieldElement a = small.element(i);
    const FieldElement b = small.element((i * 7 + 3) % small.size());
    EXPECT_EQ(e(a * b), e(a) * e(b));
    EXPECT_EQ(e(a + b), e(a) + e(b));
    EXPECT_TRUE(in_subfield(e(a), 2));
  }
}

TEST(Field, CountRoots) {
  // x^q - x has every element of F_q as a root
  const FiniteField f3 = build_field(3, 1);
  std::vector<FieldElement> poly(10, f3.zero());
  poly[1] = f3.from_int(-1);
  poly[9] = f3.one();
  EXPECT_EQ(count_roots(poly, build_field(3, 2)), 9u);
  EXPECT_EQ(count_roots(poly, build_field(3, 3)), 3u);
}

TEST(Field, MixedParentsRejected) {
  const FieldElement a = build_field(3, 1).one();
  const FieldElement b = build_field(3, 2).one();
  EXPECT_THROW(a + b, DomainError);
}
