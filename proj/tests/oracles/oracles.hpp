#pragma once

// Test-side reference computations. Plain integer arithmetic only; nothing
// here calls into the library except to read coordinates of its elements.

#include <cstdint>
#include <vector>

#include "lefschetz/witt.hpp"

namespace oracle {

inline std::int64_t md(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

inline std::int64_t powm(std::int64_t b, std::uint64_t e, std::int64_t m) {
  std::int64_t r = 1 % m;
  b = md(b, m);
  while (e) {
    if (e & 1) r = static_cast<std::int64_t>(static_cast<__int128>(r) * b % m);
    b = static_cast<std::int64_t>(static_cast<__int128>(b) * b % m);
    e >>= 1;
  }
  return r;
}

/// Legendre symbol by Euler's criterion, p odd.
inline int legendre(std::int64_t a, std::int64_t p) {
  a = md(a, p);
  if (a == 0) return 0;
  return powm(a, static_cast<std::uint64_t>((p - 1) / 2), p) == 1 ? 1 : -1;
}

/// #E(F_p) for y^2 = x^3 + c2 x^2 + c1 x + c0, counting O.
inline std::int64_t count_fp(std::int64_t p, std::int64_t c2, std::int64_t c1, std::int64_t c0) {
  std::int64_t n = 1;
  for (std::int64_t x = 0; x < p; ++x) n += 1 + legendre(x * x * x + c2 * x * x + c1 * x + c0, p);
  return n;
}

/// F_{p^2} = F_p[s] / (s^2 - nr) with nr the least non-residue.
struct Fp2 {
  std::int64_t p;
  std::int64_t nr;
  explicit Fp2(std::int64_t p_) : p(p_), nr(2) {
    while (legendre(nr, p) != -1) ++nr;
  }
  struct E {
    std::int64_t a, b;  // a + b s
  };
  E mul(E x, E y) const { return {md(x.a * y.a + nr * md(x.b * y.b, p), p), md(x.a * y.b + x.b * y.a, p)}; }
  E add(E x, E y) const { return {md(x.a + y.a, p), md(x.b + y.b, p)}; }
  E pow(E x, std::uint64_t e) const {
    E r{1, 0};
    while (e) {
      if (e & 1) r = mul(r, x);
      x = mul(x, x);
      e >>= 1;
    }
    return r;
  }
};

/// #E(F_{p^2}).
inline std::int64_t count_fp2(std::int64_t p, std::int64_t c2, std::int64_t c1, std::int64_t c0) {
  const Fp2 f(p);
  const std::uint64_t q = static_cast<std::uint64_t>(p * p);
  std::int64_t n = 1;
  for (std::int64_t a = 0; a < p; ++a) {
    for (std::int64_t b = 0; b < p; ++b) {
      const Fp2::E x{a, b};
      const auto x2 = f.mul(x, x);
      const auto x3 = f.mul(x2, x);
      auto rhs = f.add(x3, f.add(f.mul({c2, 0}, x2), f.add(f.mul({c1, 0}, x), {md(c0, p), 0})));
      if (rhs.a == 0 && rhs.b == 0) {
        n += 1;
        continue;
      }
      const auto e = f.pow(rhs, (q - 1) / 2);
      n += (e.a == 1 && e.b == 0) ? 2 : 0;
    }
  }
  return n;
}

/// Coefficient of x^{p-1} in (x^3 + c2 x^2 + c1 x + c0)^{(p-1)/2} mod p.
inline std::int64_t hasse_invariant(std::int64_t p, std::int64_t c2, std::int64_t c1, std::int64_t c0) {
  std::vector<std::int64_t> acc{1};
  const std::vector<std::int64_t> f{md(c0, p), md(c1, p), md(c2, p), 1};
  for (std::int64_t k = 0; k < (p - 1) / 2; ++k) {
    std::vector<std::int64_t> next(acc.size() + 3, 0);
    for (std::size_t i = 0; i < acc.size(); ++i) {
      for (std::size_t j = 0; j < 4; ++j) next[i + j] = md(next[i + j] + acc[i] * f[j], p);
    }
    acc = next;
  }
  return static_cast<std::size_t>(p - 1) < acc.size() ? acc[static_cast<std::size_t>(p - 1)] : 0;
}

/// Discriminant of x^3 + c2 x^2 + c1 x + c0, mod p.
inline std::int64_t cubic_discriminant(std::int64_t p, std::int64_t a, std::int64_t b, std::int64_t c) {
  // x^3 + a x^2 + b x + c
  const std::int64_t d = a * a * b * b - 4 * b * b * b - 4 * a * a * a * c - 27 * c * c + 18 * a * b * c;
  return md(d, p);
}

/// Galois ring GR(p^n, D) = (Z/p^n)[t] / (F), F the integer lift of a monic
/// irreducible mod p. Isomorphic to W_n(F_{p^D}).
class GaloisRing {
 public:
  using El = std::vector<std::int64_t>;

  GaloisRing(std::int64_t p, int n, std::vector<std::int64_t> modulus)  // monic, constant first
      : p_(p), n_(n), mod_(1), f_(std::move(modulus)) {
    for (int i = 0; i < n; ++i) mod_ *= p;
    d_ = static_cast<int>(f_.size()) - 1;
  }

  int degree() const { return d_; }
  std::int64_t modulus() const { return mod_; }

  El zero() const { return El(static_cast<std::size_t>(d_), 0); }
  El one() const {
    El e = zero();
    e[0] = 1;
    return e;
  }
  El add(const El& a, const El& b) const {
    El r = zero();
    for (int i = 0; i < d_; ++i) r[static_cast<std::size_t>(i)] = md(a[static_cast<std::size_t>(i)] + b[static_cast<std::size_t>(i)], mod_);
    return r;
  }
  El scale(const El& a, std::int64_t k) const {
    El r = zero();
    for (int i = 0; i < d_; ++i) r[static_cast<std::size_t>(i)] = md(a[static_cast<std::size_t>(i)] * md(k, mod_), mod_);
    return r;
  }
  El mul(const El& a, const El& b) const {
    std::vector<std::int64_t> t(static_cast<std::size_t>(2 * d_), 0);
    for (int i = 0; i < d_; ++i) {
      for (int j = 0; j < d_; ++j) {
        auto& x = t[static_cast<std::size_t>(i + j)];
        x = md(x + a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)], mod_);
      }
    }
    for (int k = 2 * d_ - 2; k >= d_; --k) {
      const std::int64_t c = t[static_cast<std::size_t>(k)];
      if (c == 0) continue;
      t[static_cast<std::size_t>(k)] = 0;
      for (int i = 0; i < d_; ++i) {
        auto& x = t[static_cast<std::size_t>(k - d_ + i)];
        x = md(x - c * f_[static_cast<std::size_t>(i)], mod_);
      }
    }
    return El(t.begin(), t.begin() + d_);
  }
  El pow(El b, std::uint64_t e) const {
    El r = one();
    while (e) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  }
  /// Teichmuller lift of a residue given by its coordinates in [0, p).
  El teichmuller(const El& residue) const {
    std::uint64_t q = 1;
    for (int i = 0; i < d_; ++i) q *= static_cast<std::uint64_t>(p_);
    std::uint64_t e = 1;
    for (int i = 1; i < n_; ++i) e *= q;
    return pow(residue, e);
  }
  /// sum_i p^i [x_i^{p^{-i}}].
  El from_witt(const lefschetz::WittVector& w) const {
    El out = zero();
    std::int64_t pi = 1;
    for (int i = 0; i < n_; ++i) {
      El res = zero();
      for (int j = 0; j < d_; ++j) res[static_cast<std::size_t>(j)] = w.component(i).coeff(j);
      El t = teichmuller(res);
      // [x]^{p^{D n - i}} = [x^{p^{-i}}]
      for (int k = 0; k < d_ * n_ - i; ++k) t = pow(t, static_cast<std::uint64_t>(p_));
      out = add(out, scale(t, pi));
      pi *= p_;
    }
    return out;
  }

 private:
  std::int64_t p_;
  int n_;
  std::int64_t mod_;
  std::vector<std::int64_t> f_;
  int d_;
};

inline GaloisRing galois_ring_for(const lefschetz::WittRing& ring) {
  const auto m = ring.residue_field().modulus();
  return GaloisRing(ring.p(), ring.n(), std::vector<std::int64_t>(m.begin(), m.end()));
}

}  // namespace oracle
