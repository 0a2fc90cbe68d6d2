#include <gtest/gtest.h>

#include "lefschetz/arith.hpp"

using namespace lefschetz;

TEST(Arith, Primes) {
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(65521));
  EXPECT_FALSE(is_prime(65523));
}

TEST(Arith, CheckedPowStopsAtCap) {
  EXPECT_EQ(checked_pow(5, 3, 1000), 125u);
  EXPECT_FALSE(checked_pow(2, 63, std::uint64_t{1} << 62));
}

TEST(Arith, ValuationAndLog) {
  EXPECT_EQ(valuation(729, 3), 6);
  EXPECT_EQ(valuation(10, 3), 0);
  EXPECT_EQ(log_exact(81, 3), 4);
  EXPECT_FALSE(log_exact(12, 2));
  EXPECT_EQ(mod_floor(-7, 5), 3);
  EXPECT_EQ(pow_mod(3, 200, 1000003), pow_mod(9, 100, 1000003));
}
