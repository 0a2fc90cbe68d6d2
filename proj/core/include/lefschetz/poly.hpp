#pragma once

// Dense univariate polynomials over a finite field.

#include <cstdint>
#include <vector>

#include "lefschetz/field.hpp"

namespace lefschetz {

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(FiniteField field) : field_(field) {}
  /// Coefficients constant term first; trailing zeros are trimmed.
  Polynomial(FiniteField field, std::vector<FieldElement> coeffs);

  static Polynomial monomial(FiniteField field, FieldElement coeff, std::size_t degree);
  static Polynomial constant(const FieldElement& c);
  /// x - a
  static Polynomial linear_root(const FieldElement& a);

  const FiniteField& field() const { return field_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<FieldElement>& coeffs() const { return c_; }
  FieldElement coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }
  FieldElement leading() const { return c_.back(); }

  FieldElement operator()(const FieldElement& x) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const FieldElement& s) const;
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  Polynomial monic() const;
  Polynomial derivative() const;

 private:
  void trim();
  FiniteField field_;
  std::vector<FieldElement> c_;
};

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

DivMod divmod(const Polynomial& a, const Polynomial& b);
Polynomial operator%(const Polynomial& a, const Polynomial& b);
Polynomial operator/(const Polynomial& a, const Polynomial& b);

/// Monic gcd (zero if both inputs are zero).
Polynomial gcd(Polynomial a, Polynomial b);

/// base^exponent mod modulus.
Polynomial powmod(Polynomial base, std::uint64_t exponent, const Polynomial& modulus);

/// x^{p^k} mod modulus, by k successive p-th powers.
Polynomial frobenius_powmod(const Polynomial& modulus, std::uint64_t k);

/// Product of the distinct irreducible factors (monic).
Polynomial radical(const Polynomial& f);

/// Number of distinct roots of f in an algebraic closure: deg radical(f).
int distinct_root_count(const Polynomial& f);

/// All distinct roots of f in its coefficient field, sorted by index.
/// Uses gcd with x^{|F|} - x and equal-degree splitting (no enumeration).
std::vector<FieldElement> find_roots(const Polynomial& f);

}  // namespace lefschetz
