#include "lefschetz/zpn_matrix.hpp"

#include <algorithm>
#include <sstream>

#include "lefschetz/arith.hpp"
#include "lefschetz/error.hpp"

namespace lefschetz {

namespace {

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// Inverse of a unit modulo p^n.
std::int64_t unit_inverse(std::int64_t u, std::int64_t mod) {
  // mod is a prime power; phi(mod) = mod - mod/p, but the extended Euclid
  // route avoids needing p here.
  std::int64_t old_r = mod_floor(u, mod), r = mod, old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw InternalInconsistency("unit_inverse of a non-unit");
  return mod_floor(old_s, mod);
}

using Row = std::vector<std::int64_t>;

void axpy(Row& y, std::int64_t a, const Row& x, std::int64_t mod) {
  if (a == 0) return;
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = mod_floor(y[i] + a * x[i], mod);
}

bool row_zero(const Row& r) {
  return std::all_of(r.begin(), r.end(), [](std::int64_t v) { return v == 0; });
}

}  // namespace

int zpn_valuation(std::int64_t x, std::int64_t p, int n) {
  if (x == 0) return n;
  int v = 0;
  while (x % p == 0 && v < n) {
    x /= p;
    ++v;
  }
  return v;
}

ZpnMatrix::ZpnMatrix(std::int64_t p, int n, std::size_t rows, std::size_t cols)
    : p_(p), n_(n), mod_(ipow(p, n)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

ZpnMatrix ZpnMatrix::identity(std::int64_t p, int n, std::size_t size) {
  ZpnMatrix m(p, n, size, size);
  for (std::size_t i = 0; i < size; ++i) m.set(i, i, 1);
  return m;
}

void ZpnMatrix::set(std::size_t r, std::size_t c, std::int64_t v) { a_[r * cols_ + c] = mod_floor(v, mod_); }

void ZpnMatrix::append_row(std::span<const std::int64_t> row) {
  if (row.size() != cols_) throw DomainError("row width mismatch");
  for (auto v : row) a_.push_back(mod_floor(v, mod_));
  ++rows_;
}

ZpnMatrix ZpnMatrix::transpose() const {
  ZpnMatrix t(p_, n_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.a_[c * rows_ + r] = a_[r * cols_ + c];
  }
  return t;
}

ZpnMatrix ZpnMatrix::pow(std::uint64_t k) const {
  if (rows_ != cols_) throw DomainError("power of a non-square matrix");
  ZpnMatrix result = identity(p_, n_, rows_);
  ZpnMatrix base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

ZpnMatrix ZpnMatrix::reduced(int m) const {
  if (m < 1 || m > n_) throw DomainError("cannot reduce to a larger modulus");
  ZpnMatrix out(p_, m, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] % out.mod_;
  return out;
}

bool ZpnMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](std::int64_t v) { return v == 0; });
}

std::int64_t ZpnMatrix::trace() const {
  std::int64_t t = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t = (t + (*this)(i, i)) % mod_;
  return t;
}

std::vector<std::int64_t> ZpnMatrix::apply(std::span<const std::int64_t> x) const {
  if (x.size() != cols_) throw DomainError("vector length mismatch");
  std::vector<std::int64_t> y(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::int64_t acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) acc = (acc + a_[r * cols_ + c] * mod_floor(x[c], mod_)) % mod_;
    y[r] = acc;
  }
  return y;
}

ZpnMatrix operator*(const ZpnMatrix& a, const ZpnMatrix& b) {
  if (a.cols_ != b.rows_ || a.mod_ != b.mod_) throw DomainError("matrix product shape mismatch");
  ZpnMatrix out(a.p_, a.n_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const std::int64_t v = a(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        auto& slot = out.a_[i * out.cols_ + j];
        slot = (slot + v * b(k, j)) % out.mod_;
      }
    }
  }
  return out;
}

ZpnMatrix operator+(const ZpnMatrix& a, const ZpnMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.mod_ != b.mod_) throw DomainError("matrix sum shape mismatch");
  ZpnMatrix out = a;
  for (std::size_t i = 0; i < out.a_.size(); ++i) out.a_[i] = (a.a_[i] + b.a_[i]) % out.mod_;
  return out;
}

ZpnMatrix operator-(const ZpnMatrix& a, const ZpnMatrix& b) { return a + b.scaled(-1); }

ZpnMatrix ZpnMatrix::scaled(std::int64_t k) const {
  ZpnMatrix out = *this;
  const std::int64_t s = mod_floor(k, mod_);
  for (auto& v : out.a_) v = v * s % mod_;
  return out;
}

std::string ZpnMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r > 0) os << "; ";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c > 0) os << " ";
      os << (*this)(r, c);
    }
  }
  os << "]";
  return os.str();
}

ZpnMatrix howell_form(const ZpnMatrix& generators) {
  const std::int64_t p = generators.p();
  const int n = generators.n();
  const std::int64_t mod = generators.modulus();
  const std::size_t width = generators.cols();
  std::vector<Row> rows;
  for (std::size_t r = 0; r < generators.rows(); ++r) {
    Row row(generators.row(r).begin(), generators.row(r).end());
    if (!row_zero(row)) rows.push_back(std::move(row));
  }
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < width && pivot_row < rows.size(); ++c) {
    // Move the entry of least valuation into the pivot position, then clear
    // the column below it; the local ring makes every such step exact.
    for (std::size_t i = pivot_row + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      if (zpn_valuation(rows[i][c], p, n) < zpn_valuation(rows[pivot_row][c], p, n)) {
        std::swap(rows[i], rows[pivot_row]);
      }
      const std::int64_t a = rows[pivot_row][c];
      const std::int64_t b = rows[i][c];
      const int va = zpn_valuation(a, p, n);
      const std::int64_t pva = ipow(p, va);
      const std::int64_t t = mod_floor((b / pva) * unit_inverse(a / pva, mod), mod);
      axpy(rows[i], -t, rows[pivot_row], mod);
    }
    Row& piv = rows[pivot_row];
    if (piv[c] == 0) continue;
    const int v = zpn_valuation(piv[c], p, n);
    const std::int64_t pv = ipow(p, v);
    const std::int64_t u_inv = unit_inverse(piv[c] / pv, mod);
    for (auto& x : piv) x = x * u_inv % mod;
    for (std::size_t i = 0; i < pivot_row; ++i) {
      const std::int64_t q = rows[i][c] / pv;
      axpy(rows[i], -q, piv, mod);
    }
    if (v > 0) {
      Row ann = piv;
      const std::int64_t s = ipow(p, n - v);
      for (auto& x : ann) x = x * s % mod;
      if (!row_zero(ann)) rows.push_back(std::move(ann));
    }
    ++pivot_row;
  }
  ZpnMatrix out(p, n, 0, width);
  for (std::size_t i = 0; i < pivot_row && i < rows.size(); ++i) {
    if (!row_zero(rows[i])) out.append_row(rows[i]);
  }
  for (std::size_t i = pivot_row; i < rows.size(); ++i) {
    if (!row_zero(rows[i])) throw InternalInconsistency("Howell reduction left a nonzero row");
  }
  return out;
}

std::vector<int> elementary_divisors(const ZpnMatrix& generators) {
  const std::int64_t p = generators.p();
  const int n = generators.n();
  const std::int64_t mod = generators.modulus();
  std::vector<Row> m;
  for (std::size_t r = 0; r < generators.rows(); ++r) m.emplace_back(generators.row(r).begin(), generators.row(r).end());
  const std::size_t cols = generators.cols();
  std::vector<int> out;
  std::size_t k = 0;
  for (;; ++k) {
    int best = n;
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = k; i < m.size(); ++i) {
      for (std::size_t j = k; j < cols; ++j) {
        const int v = zpn_valuation(m[i][j], p, n);
        if (v < best) {
          best = v;
          bi = i;
          bj = j;
        }
      }
    }
    if (best == n) break;
    std::swap(m[k], m[bi]);
    for (auto& row : m) std::swap(row[k], row[bj]);
    const std::int64_t pv = ipow(p, best);
    const std::int64_t u_inv = unit_inverse(m[k][k] / pv, mod);
    for (auto& x : m[k]) x = x * u_inv % mod;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == k || m[i][k] == 0) continue;
      axpy(m[i], -(m[i][k] / pv), m[k], mod);
    }
    for (std::size_t j = 0; j < cols; ++j) {
      if (j == k || m[k][j] == 0) continue;
      const std::int64_t f = m[k][j] / pv;
      for (auto& row : m) row[j] = mod_floor(row[j] - f * row[k], mod);
    }
    out.push_back(n - best);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

ZpnMatrix kernel(const ZpnMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t w = a.cols();
  // Row j of [A^T | I] is (column j of A, e_j); combinations give (Ax, x).
  ZpnMatrix aug(a.p(), a.n(), w, m + w);
  for (std::size_t j = 0; j < w; ++j) {
    for (std::size_t i = 0; i < m; ++i) aug.set(j, i, a(i, j));
    aug.set(j, m + j, 1);
  }
  const ZpnMatrix h = howell_form(aug);
  ZpnMatrix ker(a.p(), a.n(), 0, w);
  for (std::size_t r = 0; r < h.rows(); ++r) {
    auto row = h.row(r);
    if (std::all_of(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(m), [](std::int64_t v) { return v == 0; })) {
      ker.append_row(row.subspan(m));
    }
  }
  return howell_form(ker);
}

ZpnMatrix image(const ZpnMatrix& a) { return howell_form(a.transpose()); }

bool howell_contains(const ZpnMatrix& howell, std::span<const std::int64_t> v) {
  const std::int64_t mod = howell.modulus();
  Row x(v.begin(), v.end());
  for (auto& e : x) e = mod_floor(e, mod);
  for (std::size_t r = 0; r < howell.rows(); ++r) {
    auto row = howell.row(r);
    std::size_t c = 0;
    while (c < row.size() && row[c] == 0) ++c;
    if (c == row.size()) continue;
    for (std::size_t j = 0; j < c; ++j) {
      if (x[j] != 0) return false;
    }
    if (x[c] % row[c] != 0) return false;
    const std::int64_t q = x[c] / row[c];
    for (std::size_t j = c; j < row.size(); ++j) x[j] = mod_floor(x[j] - q * row[j], mod);
  }
  return row_zero(x);
}

bool howell_contains_all(const ZpnMatrix& howell, const ZpnMatrix& sub) {
  for (std::size_t r = 0; r < sub.rows(); ++r) {
    if (!howell_contains(howell, sub.row(r))) return false;
  }
  return true;
}

int span_log_size(const ZpnMatrix& generators) {
  int total = 0;
  for (int e : elementary_divisors(generators)) total += e;
  return total;
}

std::optional<FreeBasis> free_basis(const ZpnMatrix& generators) {
  const std::int64_t p = generators.p();
  const std::int64_t mod = generators.modulus();
  const std::size_t cols = generators.cols();
  // Rows independent mod p, kept in echelon form mod p alongside.
  std::vector<Row> echelon;
  std::vector<std::size_t> pivots;
  ZpnMatrix chosen(p, generators.n(), 0, cols);
  for (std::size_t i = 0; i < generators.rows(); ++i) {
    Row r(cols);
    for (std::size_t j = 0; j < cols; ++j) r[j] = mod_floor(generators(i, j), p);
    for (std::size_t k = 0; k < echelon.size(); ++k) axpy(r, p - r[pivots[k]], echelon[k], p);
    const auto lead = std::find_if(r.begin(), r.end(), [](std::int64_t v) { return v != 0; });
    if (lead == r.end()) continue;
    const auto c = static_cast<std::size_t>(lead - r.begin());
    const std::int64_t inv = unit_inverse(r[c], p);
    for (auto& v : r) v = v * inv % p;
    for (auto& e : echelon) axpy(e, p - e[c], r, p);
    echelon.push_back(std::move(r));
    pivots.push_back(c);
    chosen.append_row(generators.row(i));
  }
  const std::size_t s = pivots.size();
  // Gauss-Jordan on the square minor; its reduction mod p is invertible.
  std::vector<Row> aug(s, Row(2 * s, 0));
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) aug[i][j] = chosen(i, pivots[j]);
    aug[i][s + i] = 1;
  }
  for (std::size_t c = 0; c < s; ++c) {
    std::size_t piv = c;
    while (piv < s && aug[piv][c] % p == 0) ++piv;
    if (piv == s) throw InternalInconsistency("minor of a mod p independent set is singular");
    std::swap(aug[piv], aug[c]);
    const std::int64_t inv = unit_inverse(aug[c][c], mod);
    for (auto& v : aug[c]) v = mod_floor(v * inv, mod);
    for (std::size_t i = 0; i < s; ++i) {
      if (i != c) axpy(aug[i], mod - aug[i][c], aug[c], mod);
    }
  }
  FreeBasis out{chosen, pivots, ZpnMatrix(p, generators.n(), s, s)};
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) out.minor_inverse.set(i, j, aug[i][s + j]);
  }
  // Free summand iff these rows already span everything.
  const ZpnMatrix h = howell_form(generators);
  if (!howell_contains_all(howell_form(chosen), h)) return std::nullopt;
  return out;
}

std::optional<std::vector<std::int64_t>> FreeBasis::coordinates(std::span<const std::int64_t> y) const {
  const std::int64_t mod = rows.modulus();
  const std::size_t s = columns.size();
  std::vector<std::int64_t> c(s, 0);
  for (std::size_t j = 0; j < s; ++j) {
    for (std::size_t i = 0; i < s; ++i) c[j] = mod_floor(c[j] + y[columns[i]] * minor_inverse(i, j), mod);
  }
  std::vector<std::int64_t> back(rows.cols(), 0);
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t k = 0; k < back.size(); ++k) back[k] = mod_floor(back[k] + c[i] * rows(i, k), mod);
  }
  if (!std::equal(back.begin(), back.end(), y.begin(), y.end())) return std::nullopt;
  return c;
}

}  // namespace lefschetz
