#pragma once

// Finite fields F_{p^r} in a polynomial basis.
//
// Fields are interned: build_field(p, r) always returns a handle to the same
// immutable FieldData, so handles compare by identity and elements can hold a
// raw pointer to their parent.

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace lefschetz {

inline constexpr int kMaxDegree = 16;
/// Largest field that may be enumerated element by element.
inline constexpr std::uint64_t kEnumerationCap = std::uint64_t{1} << 24;
/// Largest field that may be constructed for structured (linear-algebra) use.
inline constexpr std::uint64_t kConstructionCap = std::uint64_t{1} << 62;

struct FieldData;
class FieldElement;

class FiniteField {
 public:
  FiniteField() = default;

  std::uint32_t p() const;
  int degree() const;
  /// p^degree.
  std::uint64_t size() const;
  /// Monic modulus, constant term first, length degree + 1.
  std::span<const std::uint32_t> modulus() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(std::int64_t value) const;
  /// Element whose base-p digits (constant coefficient least significant) are `index`.
  FieldElement element(std::uint64_t index) const;
  FieldElement from_coeffs(std::span<const std::int64_t> coeffs) const;
  /// Residue class of x modulo the modulus.
  FieldElement generator() const;

  bool valid() const { return data_ != nullptr; }
  const FieldData* data() const { return data_; }
  std::string name() const;

  friend bool operator==(const FiniteField& a, const FiniteField& b) { return a.data_ == b.data_; }

 private:
  explicit FiniteField(const FieldData* data) : data_(data) {}
  const FieldData* data_ = nullptr;

  friend FiniteField build_field(std::uint32_t p, int degree);
  friend class FieldElement;
};

/// F_{p^degree} with the modulus whose lower coefficients, read as a base-p
/// integer, are smallest among monic irreducibles. Prime fields use modulus x.
FiniteField build_field(std::uint32_t p, int degree);

class FieldElement {
 public:
  FieldElement() = default;

  FiniteField field() const { return FiniteField(f_); }
  std::uint32_t p() const;
  int degree() const;
  std::uint32_t coeff(int i) const { return c_[static_cast<std::size_t>(i)]; }
  std::span<const std::uint32_t> coeffs() const;
  bool is_zero() const;
  bool is_one() const;
  std::uint64_t index() const;

  FieldElement pow(std::uint64_t exponent) const;
  FieldElement inverse() const;

  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator-=(const FieldElement& rhs);
  FieldElement& operator*=(const FieldElement& rhs);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    return a * b.inverse();
  }
  FieldElement operator-() const;
  FieldElement scaled(std::int64_t k) const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.f_ == b.f_ && a.c_ == b.c_;
  }
  /// Orders by index; only meaningful within one field.
  friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) {
    return a.index() <=> b.index();
  }

  std::string to_string() const;

 private:
  FieldElement(const FieldData* f) : f_(f) {}
  const FieldData* f_ = nullptr;
  std::array<std::uint32_t, kMaxDegree> c_{};

  friend class FiniteField;
  friend FieldElement frobenius_pow(const FieldElement& x, std::uint64_t e);
};

/// x^{p^e}.
FieldElement frobenius_pow(const FieldElement& x, std::uint64_t e);

/// True when x lies in the subfield F_{p^sub_degree}.
bool in_subfield(const FieldElement& x, int sub_degree);

/// Trace and norm down to F_{p^sub_degree}; sub_degree must divide the degree.
FieldElement rel_trace(const FieldElement& x, int sub_degree);
FieldElement rel_norm(const FieldElement& x, int sub_degree);

/// Ring homomorphism F_{p^r} -> F_{p^{rs}} fixed by the image of the generator.
class Embedding {
 public:
  Embedding() = default;
  Embedding(FiniteField source, FiniteField target, FieldElement generator_image);

  const FiniteField& source() const { return source_; }
  const FiniteField& target() const { return target_; }
  const FieldElement& generator_image() const { return generator_image_; }

  FieldElement operator()(const FieldElement& x) const;

 private:
  FiniteField source_;
  FiniteField target_;
  FieldElement generator_image_;
  std::vector<FieldElement> basis_images_;
};

/// The canonical embedding: the generator goes to the root of the source
/// modulus with the smallest index in the target. Cached.
Embedding embed(const FiniteField& source, const FiniteField& target);

/// Every element of `field`, in index order. Enforces kEnumerationCap.
std::vector<FieldElement> all_elements(const FiniteField& field);

/// Number of distinct roots in `field` of the polynomial with the given
/// coefficients (constant first), found by exhaustive evaluation. The
/// coefficients may live in any subfield; they are embedded first.
std::uint64_t count_roots(std::span<const FieldElement> poly, const FiniteField& field);

}  // namespace lefschetz
