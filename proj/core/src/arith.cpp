#include "lefschetz/arith.hpp"

namespace lefschetz {

__extension__ using u128 = unsigned __int128;

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp, std::uint64_t cap) {
  u128 acc = 1;
  for (unsigned i = 0; i < exp; ++i) {
    acc *= base;
    if (acc > cap) return std::nullopt;
  }
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

int valuation(std::uint64_t value, std::uint64_t p) {
  int v = 0;
  while (value != 0 && value % p == 0) {
    value /= p;
    ++v;
  }
  return v;
}

std::optional<int> log_exact(std::uint64_t q, std::uint64_t p) {
  if (q == 0 || p < 2) return std::nullopt;
  int e = 0;
  while (q % p == 0) {
    q /= p;
    ++e;
  }
  if (q != 1) return std::nullopt;
  return e;
}

}  // namespace lefschetz
