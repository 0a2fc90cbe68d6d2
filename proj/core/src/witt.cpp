#include "lefschetz/witt.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "lefschetz/arith.hpp"
#include "lefschetz/error.hpp"

namespace lefschetz {

namespace {

using Poly = IntegralPoly;

void add_into(Poly& acc, const Poly& other, const BigInt& scale = 1) {
  for (const auto& [mono, coef] : other.terms) {
    BigInt& slot = acc.terms[mono];
    slot += scale * coef;
    if (slot == 0) acc.terms.erase(mono);
  }
}

Poly multiply(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a.terms) {
    for (const auto& [mb, cb] : b.terms) {
      WittMonomial m{};
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = static_cast<std::uint16_t>(ma[i] + mb[i]);
      BigInt& slot = out.terms[m];
      slot += ca * cb;
      if (slot == 0) out.terms.erase(m);
    }
  }
  return out;
}

Poly power(Poly base, std::uint64_t e) {
  Poly result;
  result.terms[WittMonomial{}] = 1;
  while (e > 0) {
    if (e & 1) result = multiply(result, base);
    e >>= 1;
    if (e > 0) base = multiply(base, base);
  }
  return result;
}

Poly variable(int index) {
  Poly v;
  WittMonomial m{};
  m[static_cast<std::size_t>(index)] = 1;
  v.terms[m] = 1;
  return v;
}

BigInt big_pow(const BigInt& b, std::uint64_t e) {
  BigInt r = 1;
  for (std::uint64_t i = 0; i < e; ++i) r *= b;
  return r;
}

std::uint64_t upow(std::uint64_t b, int e) { return *checked_pow(b, static_cast<unsigned>(e)); }

// Ghost polynomial w_i in the variables starting at `offset`.
Poly ghost_poly(std::uint32_t p, int i, int offset) {
  Poly w;
  for (int j = 0; j <= i; ++j) {
    add_into(w, power(variable(offset + j), upow(p, i - j)), BigInt(upow(p, j)));
  }
  return w;
}

enum class Op { kSum, kDiff, kProd };

std::vector<Poly> ghost_recursion(std::uint32_t p, int n, Op op) {
  std::vector<Poly> out;
  for (int i = 0; i < n; ++i) {
    const Poly wx = ghost_poly(p, i, 0);
    const Poly wy = ghost_poly(p, i, kMaxWittLength);
    Poly target;
    switch (op) {
      case Op::kSum:
        target = wx;
        add_into(target, wy);
        break;
      case Op::kDiff:
        target = wx;
        add_into(target, wy, -1);
        break;
      case Op::kProd:
        target = multiply(wx, wy);
        break;
    }
    for (int j = 0; j < i; ++j) {
      add_into(target, power(out[static_cast<std::size_t>(j)], upow(p, i - j)), -BigInt(upow(p, j)));
    }
    const BigInt divisor = upow(p, i);
    Poly quotient;
    for (const auto& [mono, coef] : target.terms) {
      if (coef % divisor != 0) {
        throw InternalInconsistency("ghost recursion: inexact division by p^" + std::to_string(i));
      }
      quotient.terms[mono] = coef / divisor;
    }
    out.push_back(std::move(quotient));
  }
  return out;
}

struct ReducedTerm {
  std::uint32_t coef;
  WittMonomial exps;
};

using ReducedPoly = std::vector<ReducedTerm>;

ReducedPoly reduce_mod_p(const Poly& poly, std::uint32_t p) {
  ReducedPoly out;
  for (const auto& [mono, coef] : poly.terms) {
    BigInt r = coef % p;
    if (r < 0) r += p;
    if (r != 0) out.push_back({static_cast<std::uint32_t>(r), mono});
  }
  return out;
}

}  // namespace

BigInt IntegralPoly::evaluate(const std::array<BigInt, 2 * kMaxWittLength>& point) const {
  BigInt acc = 0;
  for (const auto& [mono, coef] : terms) {
    BigInt t = coef;
    for (std::size_t i = 0; i < mono.size(); ++i) {
      if (mono[i] != 0) t *= big_pow(point[i], mono[i]);
    }
    acc += t;
  }
  return acc;
}

std::shared_ptr<const WittPolynomials> witt_polynomials(std::uint32_t p, int n) {
  if (n < 1 || n > kMaxWittLength) throw DomainError("Witt length must be 1, 2 or 3");
  if (!is_prime(p)) throw DomainError("Witt polynomials need a prime p");
  static std::mutex m;
  static std::map<std::pair<std::uint32_t, int>, std::shared_ptr<const WittPolynomials>> cache;
  {
    std::lock_guard lock(m);
    auto it = cache.find({p, n});
    if (it != cache.end()) return it->second;
  }
  auto polys = std::make_shared<WittPolynomials>();
  polys->p = p;
  polys->n = n;
  polys->sum = ghost_recursion(p, n, Op::kSum);
  polys->diff = ghost_recursion(p, n, Op::kDiff);
  polys->prod = ghost_recursion(p, n, Op::kProd);
  std::lock_guard lock(m);
  auto [it, inserted] = cache.emplace(std::make_pair(p, n), polys);
  return it->second;
}

std::vector<BigInt> ghost_components(std::span<const BigInt> x, std::uint32_t p) {
  std::vector<BigInt> w;
  for (std::size_t i = 0; i < x.size(); ++i) {
    BigInt acc = 0;
    for (std::size_t j = 0; j <= i; ++j) {
      acc += BigInt(upow(p, static_cast<int>(j))) * big_pow(x[j], upow(p, static_cast<int>(i - j)));
    }
    w.push_back(acc);
  }
  return w;
}

std::vector<BigInt> from_ghost_components(std::span<const BigInt> ghost, std::uint32_t p) {
  std::vector<BigInt> x;
  for (std::size_t i = 0; i < ghost.size(); ++i) {
    BigInt acc = ghost[i];
    for (std::size_t j = 0; j < i; ++j) {
      acc -= BigInt(upow(p, static_cast<int>(j))) * big_pow(x[j], upow(p, static_cast<int>(i - j)));
    }
    const BigInt divisor = upow(p, static_cast<int>(i));
    if (acc % divisor != 0) throw DomainError("ghost vector is not integral");
    x.push_back(acc / divisor);
  }
  return x;
}

struct WittRingData {
  FiniteField residue;
  int n = 0;
  std::uint32_t p = 0;
  std::int64_t modulus = 0;
  std::shared_ptr<const WittPolynomials> polys;
  std::array<ReducedPoly, kMaxWittLength> sum, diff, prod;
  // Largest exponent of each variable across all reduced polynomials.
  WittMonomial max_exp{};
  // Components (in F_p) of k * 1 for 0 <= k < p^n.
  std::vector<std::array<std::uint32_t, kMaxWittLength>> int_table;
  // Small residue fields: discrete logs by element index (-1 for zero) and
  // the coordinates of g^k, so monomials cost additions only.
  std::vector<std::int32_t> log_of;
  std::vector<std::uint32_t> exp_coeffs;  // (q - 1) rows of `degree` coordinates
};

namespace {

constexpr std::uint64_t kLogTableCap = std::uint64_t{1} << 16;

void build_log_tables(WittRingData& d) {
  const FiniteField& f = d.residue;
  const std::uint64_t q = f.size();
  if (q > kLogTableCap) return;
  const auto r = static_cast<std::size_t>(f.degree());
  for (std::uint64_t cand = 1; cand < q; ++cand) {
    const FieldElement g = f.element(cand);
    std::vector<std::int32_t> log_of(q, -1);
    std::vector<std::uint32_t> coeffs;
    coeffs.reserve((q - 1) * r);
    FieldElement x = f.one();
    std::uint64_t k = 0;
    for (; k < q - 1; ++k) {
      if (k > 0 && x.is_one()) break;
      log_of[x.index()] = static_cast<std::int32_t>(k);
      for (std::size_t i = 0; i < r; ++i) coeffs.push_back(x.coeff(static_cast<int>(i)));
      x *= g;
    }
    if (k == q - 1 && x.is_one()) {
      d.log_of = std::move(log_of);
      d.exp_coeffs = std::move(coeffs);
      return;
    }
  }
  throw InternalInconsistency("no primitive element in " + f.name());
}

}  // namespace

WittRing WittRing::get(const FiniteField& residue, int n) {
  if (n < 1 || n > kMaxWittLength) throw DomainError("Witt length must be 1, 2 or 3");
  static std::mutex m;
  static std::map<std::pair<const FieldData*, int>, std::shared_ptr<const WittRingData>> cache;
  {
    std::lock_guard lock(m);
    auto it = cache.find({residue.data(), n});
    if (it != cache.end()) return WittRing(it->second);
  }
  auto d = std::make_shared<WittRingData>();
  d->residue = residue;
  d->n = n;
  d->p = residue.p();
  d->modulus = static_cast<std::int64_t>(upow(d->p, n));
  d->polys = witt_polynomials(d->p, n);
  for (int i = 0; i < n; ++i) {
    auto k = static_cast<std::size_t>(i);
    d->sum[k] = reduce_mod_p(d->polys->sum[k], d->p);
    d->diff[k] = reduce_mod_p(d->polys->diff[k], d->p);
    d->prod[k] = reduce_mod_p(d->polys->prod[k], d->p);
    for (const auto* table : {&d->sum[k], &d->diff[k], &d->prod[k]}) {
      for (const auto& t : *table) {
        for (std::size_t v = 0; v < t.exps.size(); ++v) d->max_exp[v] = std::max(d->max_exp[v], t.exps[v]);
      }
    }
  }
  build_log_tables(*d);
  if (n > 1 && d->modulus <= (1 << 20)) {
    d->int_table.resize(static_cast<std::size_t>(d->modulus));
    for (std::int64_t k = 0; k < d->modulus; ++k) {
      std::vector<BigInt> ghost(static_cast<std::size_t>(n), BigInt(k));
      auto comps = from_ghost_components(ghost, d->p);
      for (int i = 0; i < n; ++i) {
        BigInt r = comps[static_cast<std::size_t>(i)] % d->p;
        if (r < 0) r += d->p;
        d->int_table[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(r);
      }
    }
  }
  std::lock_guard lock(m);
  auto [it, inserted] = cache.emplace(std::make_pair(residue.data(), n), d);
  return WittRing(it->second);
}

std::uint32_t WittRing::p() const { return data_->p; }
int WittRing::n() const { return data_->n; }
const FiniteField& WittRing::residue_field() const { return data_->residue; }
std::int64_t WittRing::char_modulus() const { return data_->modulus; }
const WittPolynomials& WittRing::polynomials() const { return *data_->polys; }

std::string WittRing::name() const {
  return "W_" + std::to_string(data_->n) + "(" + data_->residue.name() + ")";
}

WittVector WittRing::zero() const {
  WittVector v;
  v.ring_ = data_;
  for (int i = 0; i < kMaxWittLength; ++i) v.c_[static_cast<std::size_t>(i)] = data_->residue.zero();
  return v;
}

WittVector WittRing::one() const { return teichmuller(data_->residue.one()); }

WittVector WittRing::teichmuller(const FieldElement& a) const {
  if (!(a.field() == data_->residue)) throw DomainError("Teichmuller lift from the wrong field");
  WittVector v = zero();
  v.c_[0] = a;
  return v;
}

WittVector WittRing::from_components(const std::vector<FieldElement>& comps) const {
  if (comps.size() != static_cast<std::size_t>(data_->n)) throw DomainError("wrong number of Witt components");
  WittVector v = zero();
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (!(comps[i].field() == data_->residue)) throw DomainError("Witt component from the wrong field");
    v.c_[i] = comps[i];
  }
  return v;
}

WittVector WittRing::from_int(std::int64_t k) const {
  const std::int64_t r = mod_floor(k, data_->modulus);
  if (data_->n == 1) return teichmuller(data_->residue.from_int(r));
  if (!data_->int_table.empty()) {
    WittVector v = zero();
    const auto& row = data_->int_table[static_cast<std::size_t>(r)];
    for (int i = 0; i < data_->n; ++i) v.c_[static_cast<std::size_t>(i)] = data_->residue.from_int(row[static_cast<std::size_t>(i)]);
    return v;
  }
  // Double-and-add.
  WittVector acc = zero();
  WittVector base = one();
  std::int64_t e = r;
  while (e > 0) {
    if (e & 1) acc = acc + base;
    base = base + base;
    e >>= 1;
  }
  return acc;
}

int WittVector::length() const { return ring_->n; }

bool WittVector::is_zero() const {
  for (int i = 0; i < ring_->n; ++i) {
    if (!c_[static_cast<std::size_t>(i)].is_zero()) return false;
  }
  return true;
}

namespace {

std::array<FieldElement, kMaxWittLength> evaluate(const std::array<ReducedPoly, kMaxWittLength>& table,
                                                  const WittRingData& d, const WittVector& u,
                                                  const WittVector& v) {
  const int n = d.n;
  if (!d.log_of.empty()) {
    const FiniteField& f = d.residue;
    const auto r = static_cast<std::size_t>(f.degree());
    const std::int64_t order = static_cast<std::int64_t>(f.size()) - 1;
    std::array<std::int64_t, 2 * kMaxWittLength> logs{};
    for (int j = 0; j < n; ++j) {
      logs[static_cast<std::size_t>(j)] = d.log_of[u.component(j).index()];
      logs[static_cast<std::size_t>(kMaxWittLength + j)] = d.log_of[v.component(j).index()];
    }
    std::array<FieldElement, kMaxWittLength> comps{};
    std::vector<std::int64_t> acc(r);
    for (int i = 0; i < n; ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      for (const auto& term : table[static_cast<std::size_t>(i)]) {
        std::int64_t e = 0;
        bool zero = false;
        for (std::size_t var = 0; var < term.exps.size() && !zero; ++var) {
          if (term.exps[var] == 0) continue;
          if (logs[var] < 0) zero = true;
          e += logs[var] * term.exps[var];
        }
        if (zero) continue;
        const std::uint32_t* x = &d.exp_coeffs[static_cast<std::size_t>(e % order) * r];
        for (std::size_t k = 0; k < r; ++k) acc[k] += static_cast<std::int64_t>(term.coef) * x[k];
      }
      for (auto& a : acc) a %= d.p;
      comps[static_cast<std::size_t>(i)] = f.from_coeffs(acc);
    }
    return comps;
  }
  std::array<std::vector<FieldElement>, 2 * kMaxWittLength> powers;
  for (int j = 0; j < n; ++j) {
    for (int side = 0; side < 2; ++side) {
      const auto var = static_cast<std::size_t>(side * kMaxWittLength + j);
      const FieldElement& base = side == 0 ? u.component(j) : v.component(j);
      auto& pw = powers[var];
      pw.reserve(d.max_exp[var] + 1u);
      pw.push_back(d.residue.one());
      for (int e = 1; e <= d.max_exp[var]; ++e) pw.push_back(pw.back() * base);
    }
  }
  std::array<FieldElement, kMaxWittLength> comps{};
  for (int i = 0; i < n; ++i) {
    FieldElement acc = d.residue.zero();
    for (const auto& term : table[static_cast<std::size_t>(i)]) {
      FieldElement t = d.residue.one();
      bool first = true;
      for (std::size_t var = 0; var < term.exps.size(); ++var) {
        if (term.exps[var] == 0) continue;
        const FieldElement& f = powers[var][term.exps[var]];
        if (first) {
          t = f;
          first = false;
        } else {
          t *= f;
        }
      }
      acc += term.coef == 1 ? t : t.scaled(term.coef);
    }
    comps[static_cast<std::size_t>(i)] = acc;
  }
  return comps;
}

void check_rings(const WittVector& u, const WittVector& v) {
  if (!(u.ring() == v.ring())) throw DomainError("Witt vectors from different rings");
}

}  // namespace

WittVector witt_add(const WittVector& u, const WittVector& v) {
  check_rings(u, v);
  const WittRingData& d = *u.ring_;
  WittVector out = u;
  if (d.n == 1) {
    out.c_[0] = u.c_[0] + v.c_[0];
    return out;
  }
  out.c_ = evaluate(d.sum, d, u, v);
  return out;
}

WittVector witt_sub(const WittVector& u, const WittVector& v) {
  check_rings(u, v);
  const WittRingData& d = *u.ring_;
  WittVector out = u;
  if (d.n == 1) {
    out.c_[0] = u.c_[0] - v.c_[0];
    return out;
  }
  out.c_ = evaluate(d.diff, d, u, v);
  return out;
}

WittVector witt_mul(const WittVector& u, const WittVector& v) {
  check_rings(u, v);
  const WittRingData& d = *u.ring_;
  WittVector out = u;
  if (d.n == 1) {
    out.c_[0] = u.c_[0] * v.c_[0];
    return out;
  }
  out.c_ = evaluate(d.prod, d, u, v);
  return out;
}

WittVector WittVector::operator-() const { return witt_sub(ring().zero(), *this); }

WittVector WittVector::times(std::int64_t k) const { return ring().from_int(k) * *this; }

std::string WittVector::to_string() const {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < ring_->n; ++i) {
    if (i > 0) os << ", ";
    os << c_[static_cast<std::size_t>(i)].to_string();
  }
  os << ")";
  return os.str();
}

bool operator==(const WittVector& a, const WittVector& b) {
  if (a.ring_ != b.ring_) return false;
  if (!a.ring_) return true;
  return std::equal(a.c_.begin(), a.c_.begin() + a.ring_->n, b.c_.begin());
}

WittVector witt_frobenius(const WittVector& x) { return witt_frobenius_pow(x, 1); }

WittVector witt_frobenius_pow(const WittVector& x, std::uint64_t e) {
  WittVector out = x;
  for (int i = 0; i < x.ring_->n; ++i) {
    out.c_[static_cast<std::size_t>(i)] = frobenius_pow(x.c_[static_cast<std::size_t>(i)], e);
  }
  return out;
}

WittVector teichmuller(const WittRing& ring, const FieldElement& a) { return ring.teichmuller(a); }

WittVector invert(const WittVector& x) {
  if (!x.is_unit()) throw DomainError("invert of a non-unit Witt vector " + x.to_string());
  const WittRing ring = x.ring();
  const FieldElement x0 = x.component(0);
  std::vector<FieldElement> comps(static_cast<std::size_t>(ring.n()), ring.residue_field().zero());
  comps[0] = x0.inverse();
  // The k-th product coordinate is x_0^{p^k} y_k plus terms in y_0..y_{k-1}.
  for (int k = 1; k < ring.n(); ++k) {
    const WittVector trial = x * ring.from_components(comps);
    const FieldElement scale = frobenius_pow(x0, static_cast<std::uint64_t>(k));
    comps[static_cast<std::size_t>(k)] = -(trial.component(k) / scale);
  }
  WittVector y = ring.from_components(comps);
  if (!(x * y == ring.one())) throw InternalInconsistency("Witt inverse failed to lift");
  return y;
}

WittVector verschiebung(const WittVector& x) {
  WittVector out = x.ring().zero();
  for (int i = x.ring_->n - 1; i >= 1; --i) out.c_[static_cast<std::size_t>(i)] = x.c_[static_cast<std::size_t>(i - 1)];
  return out;
}

WittVector witt_embed(const WittVector& x, const Embedding& e) {
  WittVector out = WittRing::get(e.target(), x.ring_->n).zero();
  for (int i = 0; i < x.ring_->n; ++i) out.c_[static_cast<std::size_t>(i)] = e(x.c_[static_cast<std::size_t>(i)]);
  return out;
}

WittVector reduce_length(const WittVector& x, int n) {
  if (n < 1 || n > x.ring_->n) throw DomainError("cannot reduce Witt length upward");
  WittVector out = WittRing::get(x.ring_->residue, n).zero();
  for (int i = 0; i < n; ++i) out.c_[static_cast<std::size_t>(i)] = x.c_[static_cast<std::size_t>(i)];
  return out;
}

}  // namespace lefschetz
