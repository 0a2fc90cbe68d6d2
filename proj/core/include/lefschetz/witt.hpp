#pragma once

// Truncated Witt vectors W_n(F_{p^r}), n <= 3.
//
// Addition, subtraction and multiplication evaluate the universal integral
// Witt polynomials reduced mod p. The polynomials are derived once per (p, n)
// from the ghost-component recursion with exact big-integer division.

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lefschetz/field.hpp"

namespace lefschetz {

inline constexpr int kMaxWittLength = 3;

using BigInt = boost::multiprecision::cpp_int;

/// Exponents of X_0..X_{n-1} followed by Y_0..Y_{n-1}.
using WittMonomial = std::array<std::uint16_t, 2 * kMaxWittLength>;

/// Integral polynomial in the Witt variables.
struct IntegralPoly {
  std::map<WittMonomial, BigInt> terms;

  BigInt evaluate(const std::array<BigInt, 2 * kMaxWittLength>& point) const;
};

struct WittPolynomials {
  std::uint32_t p = 0;
  int n = 0;
  std::vector<IntegralPoly> sum;
  std::vector<IntegralPoly> diff;
  std::vector<IntegralPoly> prod;
};

/// Universal sum/difference/product polynomials S_i, D_i, P_i for i < n.
/// Cached and safe to call concurrently. Throws InternalInconsistency if a
/// ghost division is inexact.
std::shared_ptr<const WittPolynomials> witt_polynomials(std::uint32_t p, int n);

/// Integer ghost components w_i(x) = sum_{j<=i} p^j x_j^{p^{i-j}}.
std::vector<BigInt> ghost_components(std::span<const BigInt> x, std::uint32_t p);
/// Inverse of ghost_components over the integers; throws if not integral.
std::vector<BigInt> from_ghost_components(std::span<const BigInt> ghost, std::uint32_t p);

struct WittRingData;
class WittVector;

class WittRing {
 public:
  WittRing() = default;
  /// W_n(residue); cached per (residue, n).
  static WittRing get(const FiniteField& residue, int n);

  std::uint32_t p() const;
  int n() const;
  const FiniteField& residue_field() const;
  /// p^n.
  std::int64_t char_modulus() const;
  const WittPolynomials& polynomials() const;

  WittVector zero() const;
  WittVector one() const;
  /// Image of the integer k under Z -> W_n(F_p) -> W_n(residue).
  WittVector from_int(std::int64_t k) const;
  WittVector teichmuller(const FieldElement& a) const;
  WittVector from_components(const std::vector<FieldElement>& comps) const;

  const WittRingData* data() const { return data_.get(); }
  std::string name() const;

  friend bool operator==(const WittRing& a, const WittRing& b) { return a.data_ == b.data_; }

 private:
  explicit WittRing(std::shared_ptr<const WittRingData> d) : data_(std::move(d)) {}
  std::shared_ptr<const WittRingData> data_;
  friend class WittVector;
};

class WittVector {
 public:
  WittVector() = default;

  WittRing ring() const { return WittRing(ring_); }
  int length() const;
  const FieldElement& component(int i) const { return c_[static_cast<std::size_t>(i)]; }
  bool is_zero() const;
  bool is_unit() const { return !c_[0].is_zero(); }

  friend WittVector witt_add(const WittVector& u, const WittVector& v);
  friend WittVector witt_sub(const WittVector& u, const WittVector& v);
  friend WittVector witt_mul(const WittVector& u, const WittVector& v);

  friend WittVector operator+(const WittVector& u, const WittVector& v) { return witt_add(u, v); }
  friend WittVector operator-(const WittVector& u, const WittVector& v) { return witt_sub(u, v); }
  friend WittVector operator*(const WittVector& u, const WittVector& v) { return witt_mul(u, v); }
  WittVector operator-() const;
  WittVector& operator+=(const WittVector& v) { return *this = *this + v; }
  WittVector& operator*=(const WittVector& v) { return *this = *this * v; }

  /// k * x for an integer k.
  WittVector times(std::int64_t k) const;

  /// Same ring and equal components 0..n-1.
  friend bool operator==(const WittVector& a, const WittVector& b);

  std::string to_string() const;

 private:
  std::shared_ptr<const WittRingData> ring_;
  std::array<FieldElement, kMaxWittLength> c_{};
  friend class WittRing;
  friend WittVector witt_frobenius_pow(const WittVector& x, std::uint64_t e);
  friend WittVector verschiebung(const WittVector& x);
  friend WittVector witt_embed(const WittVector& x, const Embedding& e);
  friend WittVector reduce_length(const WittVector& x, int n);
};

/// sigma: componentwise p-th power.
WittVector witt_frobenius(const WittVector& x);
/// sigma^e.
WittVector witt_frobenius_pow(const WittVector& x, std::uint64_t e);
WittVector teichmuller(const WittRing& ring, const FieldElement& a);
/// Multiplicative inverse of a unit, by lifting one Witt coordinate at a time.
WittVector invert(const WittVector& x);
/// V(x_0, ..., x_{n-2}) = (0, x_0, ..., x_{n-2}). Used by the test suites.
WittVector verschiebung(const WittVector& x);
/// Componentwise image under a field embedding.
WittVector witt_embed(const WittVector& x, const Embedding& e);
/// Image in W_n' for n' <= n (drop trailing components).
WittVector reduce_length(const WittVector& x, int n);

}  // namespace lefschetz
