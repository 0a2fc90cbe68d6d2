#pragma once

// Dense matrices over Z/p^n and the Howell normal form.
//
// Submodules of (Z/p^n)^w are carried as generator rows. Howell form gives
// a canonical generating set with the property that membership can be
// decided by forward reduction, which Hermite/Smith forms do not give over a
// ring with zero divisors.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lefschetz {

class ZpnMatrix {
 public:
  ZpnMatrix() = default;
  ZpnMatrix(std::int64_t p, int n, std::size_t rows, std::size_t cols);

  static ZpnMatrix identity(std::int64_t p, int n, std::size_t size);

  std::int64_t p() const { return p_; }
  int n() const { return n_; }
  std::int64_t modulus() const { return mod_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::int64_t operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::int64_t v);
  std::span<const std::int64_t> row(std::size_t r) const { return {a_.data() + r * cols_, cols_}; }
  void append_row(std::span<const std::int64_t> row);

  ZpnMatrix transpose() const;
  ZpnMatrix pow(std::uint64_t k) const;
  /// Entries reduced into Z/p^m, m <= n.
  ZpnMatrix reduced(int m) const;
  bool is_zero() const;
  std::int64_t trace() const;
  /// y = A x.
  std::vector<std::int64_t> apply(std::span<const std::int64_t> x) const;

  friend ZpnMatrix operator*(const ZpnMatrix& a, const ZpnMatrix& b);
  friend ZpnMatrix operator+(const ZpnMatrix& a, const ZpnMatrix& b);
  friend ZpnMatrix operator-(const ZpnMatrix& a, const ZpnMatrix& b);
  ZpnMatrix scaled(std::int64_t k) const;

  friend bool operator==(const ZpnMatrix& a, const ZpnMatrix& b) {
    return a.mod_ == b.mod_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  std::string to_string() const;

 private:
  std::int64_t p_ = 0;
  int n_ = 0;
  std::int64_t mod_ = 1;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> a_;
};

/// p-adic valuation in Z/p^n; n for zero.
int zpn_valuation(std::int64_t x, std::int64_t p, int n);

/// Howell normal form of the row span: echelon rows with pivots p^v, entries
/// above each pivot reduced below it, zero rows removed.
ZpnMatrix howell_form(const ZpnMatrix& generators);

/// Exponents e_i of the cyclic decomposition sum Z/p^{e_i} of the row span,
/// nonzero only, sorted descending.
std::vector<int> elementary_divisors(const ZpnMatrix& generators);

/// Howell form of {x : A x = 0}.
ZpnMatrix kernel(const ZpnMatrix& a);
/// Howell form of the column span of A.
ZpnMatrix image(const ZpnMatrix& a);

/// Membership of `v` in the row span of a Howell form.
bool howell_contains(const ZpnMatrix& howell, std::span<const std::int64_t> v);
/// True when every row of `sub` lies in the row span of `howell`.
bool howell_contains_all(const ZpnMatrix& howell, const ZpnMatrix& sub);

/// A basis of a free direct summand of (Z/p^n)^N, with columns on which it
/// restricts to an invertible square matrix.
struct FreeBasis {
  ZpnMatrix rows;
  std::vector<std::size_t> columns;
  ZpnMatrix minor_inverse;  // inverse of rows restricted to `columns`

  /// c with c * rows = y; nullopt when y is outside the span.
  std::optional<std::vector<std::int64_t>> coordinates(std::span<const std::int64_t> y) const;
};

/// nullopt unless the row span of `generators` is free and a direct summand.
std::optional<FreeBasis> free_basis(const ZpnMatrix& generators);

/// log_p of the number of elements in the row span.
int span_log_size(const ZpnMatrix& generators);

}  // namespace lefschetz
