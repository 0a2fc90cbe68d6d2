#include <gtest/gtest.h>

#include "lefschetz/lemma_suite.hpp"

using namespace lefschetz;

TEST(LemmaSuite, SmallRunHasNoFailures) {
  const auto results = run_lemma_suite(default_lemma_configs(), 5, 7);
  ASSERT_EQ(results.size(), 18u);
  for (const auto& r : results) {
    EXPECT_EQ(r.modules, 5);
    EXPECT_EQ(r.failures, 0) << (r.failure_details.empty() ? "" : r.failure_details.front());
  }
}

TEST(LemmaSuite, DeterministicAcrossThreadCounts) {
  const std::vector<LemmaConfig> cfg{{3, 2, 1}, {2, 3, 2}};
  const auto a = run_lemma_suite(cfg, 6, 11, 3, 1);
  const auto b = run_lemma_suite(cfg, 6, 11, 3, 2);
  for (std::size_t i = 0; i < cfg.size(); ++i) {
    EXPECT_EQ(a[i].structured, b[i].structured);
    EXPECT_EQ(a[i].max_threshold, b[i].max_threshold);
    EXPECT_EQ(a[i].max_extension, b[i].max_extension);
  }
}

TEST(LemmaSuite, LengthOneThresholdIsOne) {
  std::mt19937_64 rng(1);
  int replaced = 0;
  for (int i = 0; i < 10; ++i) {
    const LemmaCase c = random_lemma_case({5, 1, 2}, rng, 3, replaced);
    const LemmaCaseOutcome o = check_lemma_case(c);
    EXPECT_TRUE(o.ok()) << o.failures();
    EXPECT_EQ(o.threshold, 1);
  }
}
