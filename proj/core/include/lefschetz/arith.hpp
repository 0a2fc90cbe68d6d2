#pragma once

#include <cstdint>
#include <optional>

namespace lefschetz {

bool is_prime(std::uint64_t n);

/// base^exp, or nullopt if the result does not fit below `cap`.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp,
                                         std::uint64_t cap = UINT64_MAX);

/// Non-negative residue of a modulo m (m > 0).
inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// p-adic valuation of a nonzero integer.
int valuation(std::uint64_t value, std::uint64_t p);

/// Largest e with p^e dividing q exactly; returns nullopt unless q is a power of p.
std::optional<int> log_exact(std::uint64_t q, std::uint64_t p);

}  // namespace lefschetz
