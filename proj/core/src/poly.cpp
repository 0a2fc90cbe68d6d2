#include "lefschetz/poly.hpp"

#include <algorithm>
#include <random>

#include "lefschetz/error.hpp"

namespace lefschetz {

Polynomial::Polynomial(FiniteField field, std::vector<FieldElement> coeffs)
    : field_(field), c_(std::move(coeffs)) {
  for (const auto& c : c_) {
    if (!(c.field() == field_)) throw DomainError("polynomial coefficient from a different field");
  }
  trim();
}

Polynomial Polynomial::monomial(FiniteField field, FieldElement coeff, std::size_t degree) {
  std::vector<FieldElement> c(degree + 1, field.zero());
  c[degree] = coeff;
  return Polynomial(field, std::move(c));
}

Polynomial Polynomial::constant(const FieldElement& c) { return Polynomial(c.field(), {c}); }

Polynomial Polynomial::linear_root(const FieldElement& a) {
  return Polynomial(a.field(), {-a, a.field().one()});
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FieldElement Polynomial::operator()(const FieldElement& x) const {
  FieldElement acc = field_.zero();
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size(), field_.zero());
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size(), field_.zero());
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial(a.field_.valid() ? a.field_ : b.field_);
  std::vector<FieldElement> out(a.c_.size() + b.c_.size() - 1, a.field_.zero());
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(a.field_, std::move(out));
}

Polynomial Polynomial::scaled(const FieldElement& s) const {
  std::vector<FieldElement> out = c_;
  for (auto& c : out) c *= s;
  return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::operator-() const {
  std::vector<FieldElement> out = c_;
  for (auto& c : out) c = -c;
  return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(leading().inverse());
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return Polynomial(field_);
  std::vector<FieldElement> out;
  for (std::size_t i = 1; i < c_.size(); ++i) out.push_back(c_[i].scaled(static_cast<std::int64_t>(i % field_.p())));
  return Polynomial(field_, std::move(out));
}

DivMod divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  const FiniteField& f = a.field().valid() ? a.field() : b.field();
  if (a.degree() < b.degree()) return {Polynomial(f), a};
  std::vector<FieldElement> rem = a.coeffs();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<FieldElement> quot(rem.size() - db, f.zero());
  const FieldElement lead_inv = b.leading().inverse();
  for (std::size_t k = rem.size(); k-- > db;) {
    const FieldElement c = rem[k] * lead_inv;
    if (c.is_zero()) continue;
    quot[k - db] = c;
    for (std::size_t i = 0; i <= db; ++i) rem[k - db + i] -= c * b.coeffs()[i];
  }
  rem.resize(db);
  return {Polynomial(f, std::move(quot)), Polynomial(f, std::move(rem))};
}

Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).remainder; }
Polynomial operator/(const Polynomial& a, const Polynomial& b) { return divmod(a, b).quotient; }

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial powmod(Polynomial base, std::uint64_t exponent, const Polynomial& modulus) {
  const FiniteField& f = modulus.field();
  Polynomial result = Polynomial::constant(f.one()) % modulus;
  base = base % modulus;
  while (exponent > 0) {
    if (exponent & 1) result = (result * base) % modulus;
    base = (base * base) % modulus;
    exponent >>= 1;
  }
  return result;
}

Polynomial frobenius_powmod(const Polynomial& modulus, std::uint64_t k) {
  const FiniteField& f = modulus.field();
  Polynomial x = Polynomial::monomial(f, f.one(), 1) % modulus;
  for (std::uint64_t i = 0; i < k; ++i) x = powmod(x, f.p(), modulus);
  return x;
}

namespace {

// g(x) with g(x^p) = f(x); coefficients are p-th roots.
Polynomial pth_root(const Polynomial& f) {
  const FiniteField& field = f.field();
  const std::uint32_t p = field.p();
  std::vector<FieldElement> out;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) {
    out.push_back(frobenius_pow(f.coeffs()[i], static_cast<std::uint64_t>(field.degree() - 1)));
  }
  return Polynomial(field, std::move(out));
}

void split(const Polynomial& g, std::mt19937_64& rng, std::vector<FieldElement>& out) {
  if (g.degree() <= 0) return;
  if (g.degree() == 1) {
    out.push_back(-(g.coeffs()[0] / g.coeffs()[1]));
    return;
  }
  const FiniteField& f = g.field();
  const std::uint64_t q = f.size();
  const Polynomial x = Polynomial::monomial(f, f.one(), 1);
  for (int attempt = 0; attempt < 512; ++attempt) {
    const FieldElement a = f.element(rng() % q);
    Polynomial h(f);
    if (f.p() == 2) {
      Polynomial y = x.scaled(a.is_zero() ? f.one() : a) % g;
      Polynomial acc = y;
      for (int i = 1; i < f.degree(); ++i) {
        y = (y * y) % g;
        acc += y;
      }
      h = acc;
    } else {
      h = powmod(x + Polynomial::constant(a), (q - 1) / 2, g) - Polynomial::constant(f.one());
    }
    Polynomial d = gcd(g, h);
    if (d.degree() > 0 && d.degree() < g.degree()) {
      split(d, rng, out);
      split(g / d, rng, out);
      return;
    }
  }
  throw InternalInconsistency("equal-degree splitting failed to converge");
}

}  // namespace

Polynomial radical(const Polynomial& f) {
  if (f.is_zero()) throw DomainError("radical of the zero polynomial");
  const FiniteField& field = f.field();
  Polynomial one = Polynomial::constant(field.one());
  if (f.degree() <= 0) return one;
  Polynomial fm = f.monic();
  Polynomial d = fm.derivative();
  if (d.is_zero()) return radical(pth_root(fm));
  Polynomial c = gcd(fm, d);
  Polynomial w = (fm / c).monic();
  for (;;) {
    Polynomial y = gcd(c, w);
    if (y.degree() <= 0) break;
    c = c / y;
  }
  if (c.degree() <= 0) return w;
  return (w * radical(pth_root(c.monic()))).monic();
}

int distinct_root_count(const Polynomial& f) { return radical(f).degree(); }

std::vector<FieldElement> find_roots(const Polynomial& f) {
  if (f.is_zero()) throw DomainError("find_roots of the zero polynomial");
  if (f.degree() <= 0) return {};
  const FiniteField& field = f.field();
  const Polynomial fm = f.monic();
  Polynomial xq = frobenius_powmod(fm, static_cast<std::uint64_t>(field.degree()));
  Polynomial g = gcd(fm, xq - Polynomial::monomial(field, field.one(), 1));
  std::mt19937_64 rng(0x5eed);
  std::vector<FieldElement> out;
  split(g, rng, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace lefschetz
