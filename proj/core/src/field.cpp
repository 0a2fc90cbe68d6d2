#include "lefschetz/field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "lefschetz/arith.hpp"
#include "lefschetz/error.hpp"
#include "lefschetz/poly.hpp"

namespace lefschetz {

struct FieldData {
  std::uint32_t p = 0;
  int r = 0;
  std::uint64_t size = 0;
  std::vector<std::uint32_t> modulus;
  // frob[i] = coefficients of (x^i)^p reduced mod the modulus.
  std::vector<std::array<std::uint32_t, kMaxDegree>> frob;
};

namespace {

using DensePoly = std::vector<std::uint64_t>;

void trim(DensePoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

DensePoly poly_mod(DensePoly a, const DensePoly& m, std::uint64_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = pow_mod(m.back(), p - 2, p);
  while (a.size() > dm) {
    const std::uint64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = (a[shift + i] + (p - c) * m[i]) % p;
    }
    trim(a);
  }
  return a;
}

DensePoly poly_mulmod(const DensePoly& a, const DensePoly& b, const DensePoly& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  DensePoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  }
  return poly_mod(std::move(out), m, p);
}

DensePoly poly_gcd(DensePoly a, DensePoly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    DensePoly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Ben-Or: a degree-r polynomial is irreducible iff gcd(x^{p^i} - x, f) = 1 for i <= r/2.
bool is_irreducible(const DensePoly& f, std::uint64_t p) {
  const int r = static_cast<int>(f.size()) - 1;
  DensePoly xpow = poly_mod({0, 1}, f, p);
  for (int i = 1; i <= r / 2; ++i) {
    DensePoly acc = {1};
    DensePoly base = xpow;
    std::uint64_t e = p;
    while (e > 0) {
      if (e & 1) acc = poly_mulmod(acc, base, f, p);
      base = poly_mulmod(base, base, f, p);
      e >>= 1;
    }
    xpow = acc;
    DensePoly diff = xpow;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (diff.empty()) return false;
    if (poly_gcd(f, diff, p).size() != 1) return false;
  }
  return true;
}

std::unique_ptr<FieldData> make_field(std::uint32_t p, int r) {
  auto data = std::make_unique<FieldData>();
  data->p = p;
  data->r = r;
  data->size = *checked_pow(p, static_cast<unsigned>(r));
  if (r == 1) {
    data->modulus = {0, 1};
  } else {
    const std::uint64_t count = data->size;
    for (std::uint64_t low = 0; low < count; ++low) {
      DensePoly f(static_cast<std::size_t>(r) + 1, 0);
      std::uint64_t v = low;
      for (int i = 0; i < r; ++i) {
        f[static_cast<std::size_t>(i)] = v % p;
        v /= p;
      }
      f[static_cast<std::size_t>(r)] = 1;
      if (f[0] == 0) continue;
      if (is_irreducible(f, p)) {
        data->modulus.assign(f.begin(), f.end());
        break;
      }
    }
    if (data->modulus.empty()) throw InternalInconsistency("no irreducible modulus found");
  }
  return data;
}

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::pair<std::uint32_t, int>, std::unique_ptr<FieldData>>& registry() {
  static std::map<std::pair<std::uint32_t, int>, std::unique_ptr<FieldData>> r;
  return r;
}

}  // namespace

FiniteField build_field(std::uint32_t p, int degree) {
  if (!is_prime(p)) throw DomainError("p = " + std::to_string(p) + " is not prime");
  if (p > kEnumerationCap) throw BudgetExceeded("prime exceeds 2^24");
  if (degree < 1 || degree > kMaxDegree) {
    throw BudgetExceeded("extension degree " + std::to_string(degree) + " outside [1, 16]");
  }
  if (!checked_pow(p, static_cast<unsigned>(degree), kConstructionCap)) {
    throw BudgetExceeded("field size p^r exceeds the construction cap");
  }
  std::lock_guard lock(registry_mutex());
  auto& slot = registry()[{p, degree}];
  if (!slot) {
    slot = make_field(p, degree);
    // Frobenius table: images of the basis monomials under x -> x^p.
    FiniteField f(slot.get());
    slot->frob.resize(static_cast<std::size_t>(degree));
    FieldElement gen = f.generator();
    FieldElement gen_p = gen.pow(p);
    FieldElement acc = f.one();
    for (int i = 0; i < degree; ++i) {
      for (int j = 0; j < degree; ++j) slot->frob[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = acc.coeff(j);
      acc *= gen_p;
    }
  }
  return FiniteField(slot.get());
}

std::uint32_t FiniteField::p() const { return data_->p; }
int FiniteField::degree() const { return data_->r; }
std::uint64_t FiniteField::size() const { return data_->size; }
std::span<const std::uint32_t> FiniteField::modulus() const { return data_->modulus; }

FieldElement FiniteField::zero() const { return FieldElement(data_); }

FieldElement FiniteField::one() const { return from_int(1); }

FieldElement FiniteField::from_int(std::int64_t value) const {
  FieldElement e(data_);
  e.c_[0] = static_cast<std::uint32_t>(mod_floor(value, data_->p));
  return e;
}

FieldElement FiniteField::element(std::uint64_t index) const {
  if (index >= data_->size) throw DomainError("element index out of range for " + name());
  FieldElement e(data_);
  for (int i = 0; i < data_->r; ++i) {
    e.c_[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(index % data_->p);
    index /= data_->p;
  }
  return e;
}

FieldElement FiniteField::from_coeffs(std::span<const std::int64_t> coeffs) const {
  if (coeffs.size() > static_cast<std::size_t>(data_->r)) {
    throw DomainError("too many coefficients for " + name());
  }
  FieldElement e(data_);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    e.c_[i] = static_cast<std::uint32_t>(mod_floor(coeffs[i], data_->p));
  }
  return e;
}

FieldElement FiniteField::generator() const {
  FieldElement e(data_);
  if (data_->r == 1) {
    // x mod x.
    return e;
  }
  e.c_[1] = 1;
  return e;
}

std::string FiniteField::name() const {
  std::ostringstream os;
  os << "F_" << data_->p;
  if (data_->r > 1) os << "^" << data_->r;
  return os.str();
}

std::uint32_t FieldElement::p() const { return f_->p; }
int FieldElement::degree() const { return f_->r; }

std::span<const std::uint32_t> FieldElement::coeffs() const {
  return {c_.data(), static_cast<std::size_t>(f_->r)};
}

bool FieldElement::is_zero() const {
  for (int i = 0; i < f_->r; ++i) {
    if (c_[static_cast<std::size_t>(i)] != 0) return false;
  }
  return true;
}

bool FieldElement::is_one() const {
  if (c_[0] != 1) return false;
  for (int i = 1; i < f_->r; ++i) {
    if (c_[static_cast<std::size_t>(i)] != 0) return false;
  }
  return true;
}

std::uint64_t FieldElement::index() const {
  std::uint64_t v = 0;
  for (int i = f_->r - 1; i >= 0; --i) v = v * f_->p + c_[static_cast<std::size_t>(i)];
  return v;
}

static void check_same(const FieldData* a, const FieldData* b) {
  if (a != b) throw DomainError("field element parents differ");
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
  check_same(f_, rhs.f_);
  const std::uint32_t p = f_->p;
  for (int i = 0; i < f_->r; ++i) {
    auto k = static_cast<std::size_t>(i);
    std::uint32_t s = c_[k] + rhs.c_[k];
    c_[k] = s >= p ? s - p : s;
  }
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
  check_same(f_, rhs.f_);
  const std::uint32_t p = f_->p;
  for (int i = 0; i < f_->r; ++i) {
    auto k = static_cast<std::size_t>(i);
    c_[k] = c_[k] >= rhs.c_[k] ? c_[k] - rhs.c_[k] : c_[k] + p - rhs.c_[k];
  }
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
  check_same(f_, rhs.f_);
  const std::uint64_t p = f_->p;
  const int r = f_->r;
  if (r == 1) {
    c_[0] = static_cast<std::uint32_t>(std::uint64_t{c_[0]} * rhs.c_[0] % p);
    return *this;
  }
  std::array<std::uint64_t, 2 * kMaxDegree> t{};
  for (int i = 0; i < r; ++i) {
    const std::uint64_t a = c_[static_cast<std::size_t>(i)];
    if (a == 0) continue;
    for (int j = 0; j < r; ++j) t[static_cast<std::size_t>(i + j)] += a * rhs.c_[static_cast<std::size_t>(j)];
    // Keep accumulators small; p < 2^31 here.
    for (int j = 0; j < r; ++j) t[static_cast<std::size_t>(i + j)] %= p;
  }
  const auto& m = f_->modulus;
  for (int k = 2 * r - 2; k >= r; --k) {
    const std::uint64_t coef = t[static_cast<std::size_t>(k)] % p;
    t[static_cast<std::size_t>(k)] = 0;
    if (coef == 0) continue;
    for (int i = 0; i < r; ++i) {
      auto idx = static_cast<std::size_t>(k - r + i);
      t[idx] = (t[idx] + (p - m[static_cast<std::size_t>(i)]) * coef) % p;
    }
  }
  for (int i = 0; i < r; ++i) c_[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(t[static_cast<std::size_t>(i)] % p);
  return *this;
}

FieldElement FieldElement::operator-() const {
  FieldElement out(f_);
  for (int i = 0; i < f_->r; ++i) {
    auto k = static_cast<std::size_t>(i);
    out.c_[k] = c_[k] == 0 ? 0 : f_->p - c_[k];
  }
  return out;
}

FieldElement FieldElement::scaled(std::int64_t k) const {
  const auto s = static_cast<std::uint64_t>(mod_floor(k, f_->p));
  FieldElement out(f_);
  for (int i = 0; i < f_->r; ++i) {
    auto j = static_cast<std::size_t>(i);
    out.c_[j] = static_cast<std::uint32_t>(c_[j] * s % f_->p);
  }
  return out;
}

FieldElement FieldElement::pow(std::uint64_t exponent) const {
  FieldElement result = FiniteField(f_).one();
  FieldElement base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero in " + FiniteField(f_).name());
  return pow(f_->size - 2);
}

std::string FieldElement::to_string() const {
  if (f_->r == 1) return std::to_string(c_[0]);
  std::ostringstream os;
  bool first = true;
  for (int i = f_->r - 1; i >= 0; --i) {
    const std::uint32_t c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0 || c != 1) os << c;
    if (i >= 1) os << "a";
    if (i >= 2) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

FieldElement frobenius_pow(const FieldElement& x, std::uint64_t e) {
  const FieldData* f = x.f_;
  const int r = f->r;
  std::uint64_t steps = e % static_cast<std::uint64_t>(r);
  FieldElement cur = x;
  const std::uint64_t p = f->p;
  for (std::uint64_t s = 0; s < steps; ++s) {
    std::array<std::uint64_t, kMaxDegree> acc{};
    for (int i = 0; i < r; ++i) {
      const std::uint64_t c = cur.c_[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      const auto& row = f->frob[static_cast<std::size_t>(i)];
      for (int j = 0; j < r; ++j) {
        auto k = static_cast<std::size_t>(j);
        acc[k] = (acc[k] + c * row[k]) % p;
      }
    }
    for (int j = 0; j < r; ++j) cur.c_[static_cast<std::size_t>(j)] = static_cast<std::uint32_t>(acc[static_cast<std::size_t>(j)]);
  }
  return cur;
}

bool in_subfield(const FieldElement& x, int sub_degree) {
  return frobenius_pow(x, static_cast<std::uint64_t>(sub_degree)) == x;
}

static void check_divides(const FieldElement& x, int sub_degree) {
  if (sub_degree < 1 || x.degree() % sub_degree != 0) {
    throw DomainError("subfield degree " + std::to_string(sub_degree) + " does not divide " +
                      std::to_string(x.degree()));
  }
}

FieldElement rel_trace(const FieldElement& x, int sub_degree) {
  check_divides(x, sub_degree);
  FieldElement acc = x.field().zero();
  FieldElement cur = x;
  for (int i = 0; i < x.degree() / sub_degree; ++i) {
    acc += cur;
    cur = frobenius_pow(cur, static_cast<std::uint64_t>(sub_degree));
  }
  return acc;
}

FieldElement rel_norm(const FieldElement& x, int sub_degree) {
  check_divides(x, sub_degree);
  FieldElement acc = x.field().one();
  FieldElement cur = x;
  for (int i = 0; i < x.degree() / sub_degree; ++i) {
    acc *= cur;
    cur = frobenius_pow(cur, static_cast<std::uint64_t>(sub_degree));
  }
  return acc;
}

Embedding::Embedding(FiniteField source, FiniteField target, FieldElement generator_image)
    : source_(source), target_(target), generator_image_(generator_image) {
  if (source.p() != target.p() || target.degree() % source.degree() != 0) {
    throw DomainError("no embedding " + source.name() + " -> " + target.name());
  }
  if (!(generator_image.field() == target)) throw DomainError("generator image not in target");
  FieldElement value = target.zero();
  FieldElement power = target.one();
  auto mod = source.modulus();
  for (std::size_t i = 0; i < mod.size(); ++i) {
    value += power.scaled(mod[i]);
    power *= generator_image;
  }
  if (!value.is_zero()) throw DomainError("generator image is not a root of the source modulus");
  power = target.one();
  for (int i = 0; i < source.degree(); ++i) {
    basis_images_.push_back(power);
    power *= generator_image;
  }
}

FieldElement Embedding::operator()(const FieldElement& x) const {
  if (!(x.field() == source_)) throw DomainError("embedding applied outside its source");
  FieldElement out = target_.zero();
  for (int i = 0; i < source_.degree(); ++i) {
    const std::uint32_t c = x.coeff(i);
    if (c != 0) out += basis_images_[static_cast<std::size_t>(i)].scaled(c);
  }
  return out;
}

Embedding embed(const FiniteField& source, const FiniteField& target) {
  if (source.p() != target.p() || target.degree() % source.degree() != 0) {
    throw DomainError("no embedding " + source.name() + " -> " + target.name());
  }
  static std::mutex m;
  static std::map<std::pair<const FieldData*, const FieldData*>, Embedding> cache;
  {
    std::lock_guard lock(m);
    auto it = cache.find({source.data(), target.data()});
    if (it != cache.end()) return it->second;
  }
  FieldElement image = target.zero();
  if (source.degree() > 1) {
    std::vector<FieldElement> coeffs;
    for (std::uint32_t c : source.modulus()) coeffs.push_back(target.from_int(c));
    auto roots = find_roots(Polynomial(target, std::move(coeffs)));
    if (roots.empty()) throw InternalInconsistency("source modulus has no root in target");
    image = roots.front();
  }
  Embedding e(source, target, image);
  std::lock_guard lock(m);
  cache.emplace(std::make_pair(source.data(), target.data()), e);
  return e;
}

std::vector<FieldElement> all_elements(const FiniteField& field) {
  if (field.size() > kEnumerationCap) {
    throw BudgetExceeded("enumeration of " + field.name() + " exceeds 2^24 elements");
  }
  std::vector<FieldElement> out;
  out.reserve(static_cast<std::size_t>(field.size()));
  for (std::uint64_t i = 0; i < field.size(); ++i) out.push_back(field.element(i));
  return out;
}

std::uint64_t count_roots(std::span<const FieldElement> poly, const FiniteField& field) {
  bool nonzero = false;
  for (const auto& c : poly) nonzero = nonzero || !c.is_zero();
  if (!nonzero) throw DomainError("count_roots of the zero polynomial");
  if (field.size() > kEnumerationCap) {
    throw BudgetExceeded("root enumeration over " + field.name() + " exceeds 2^24 elements");
  }
  const Embedding e = embed(poly.front().field(), field);
  std::vector<FieldElement> coeffs;
  for (const auto& c : poly) coeffs.push_back(e(c));
  std::uint64_t count = 0;
  for (std::uint64_t i = 0; i < field.size(); ++i) {
    const FieldElement x = field.element(i);
    FieldElement acc = field.zero();
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    if (acc.is_zero()) ++count;
  }
  return count;
}

}  // namespace lefschetz
