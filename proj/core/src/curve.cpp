#include "lefschetz/curve.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "lefschetz/error.hpp"

namespace lefschetz {

namespace {

// Largest field whose points are enumerated one x-coordinate at a time.
constexpr std::uint64_t kPointEnumerationCap = std::uint64_t{1} << 22;

// sqrt_table[i] is the index of some y with y^2 = element(i), or -1.
const std::vector<std::int64_t>& sqrt_table(const FiniteField& f) {
  static std::mutex mu;
  static std::map<const FieldData*, std::unique_ptr<std::vector<std::int64_t>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[f.data()];
  if (!slot) {
    if (f.size() > kPointEnumerationCap) throw BudgetExceeded("point enumeration over " + f.name() + " exceeds 2^22");
    slot = std::make_unique<std::vector<std::int64_t>>(f.size(), -1);
    for (std::uint64_t i = 0; i < f.size(); ++i) {
      const FieldElement y = f.element(i);
      auto& s = (*slot)[(y * y).index()];
      if (s < 0) s = static_cast<std::int64_t>(i);
    }
  }
  return *slot;
}

Polynomial poly_power(const Polynomial& f, std::uint64_t k) {
  Polynomial r = Polynomial::constant(f.field().one());
  for (std::uint64_t i = 0; i < k; ++i) r = r * f;
  return r;
}

}  // namespace

bool operator<(const CurvePoint& a, const CurvePoint& b) {
  if (a.infinity || b.infinity) return a.infinity && !b.infinity;
  if (a.x.index() != b.x.index()) return a.x.index() < b.x.index();
  return a.y.index() < b.y.index();
}

std::string CurvePoint::to_string() const {
  if (infinity) return "O";
  return "(" + x.to_string() + ", " + y.to_string() + ")";
}

// ------------------------------------------------------------ EllipticCurve

EllipticCurve::EllipticCurve(FiniteField base, FieldElement c0, FieldElement c1, FieldElement c2)
    : base_(std::move(base)), c_{std::move(c0), std::move(c1), std::move(c2)} {
  if (base_.p() == 2) throw DomainError("elliptic models y^2 = f(x) need p odd");
  for (const auto& c : c_) {
    if (!(c.field() == base_)) throw DomainError("curve coefficient outside the base field");
  }
  const Polynomial f = cubic();
  if (gcd(f, f.derivative()).degree() > 0) throw DomainError("cubic " + to_string() + " has a repeated root");
}

Polynomial EllipticCurve::cubic() const { return Polynomial(base_, {c_[0], c_[1], c_[2], base_.one()}); }

FieldElement EllipticCurve::rhs(const FieldElement& x) const { return ((x + c_[2]) * x + c_[1]) * x + c_[0]; }

EllipticCurve EllipticCurve::extended(int s) const {
  if (s < 1) throw DomainError("extension degree must be positive");
  if (s == 1) return *this;
  const FiniteField target = build_field(base_.p(), base_.degree() * s);
  const Embedding e = embed(base_, target);
  return EllipticCurve(target, e(c_[0]), e(c_[1]), e(c_[2]));
}

CurvePoint EllipticCurve::embed_point(const CurvePoint& pt, const EllipticCurve& target) const {
  if (pt.infinity || target.base_ == base_) return pt;
  const Embedding e = embed(base_, target.base_);
  return CurvePoint::affine(e(pt.x), e(pt.y));
}

bool EllipticCurve::contains(const CurvePoint& pt) const {
  if (pt.infinity) return true;
  if (!(pt.x.field() == base_) || !(pt.y.field() == base_)) return false;
  return pt.y * pt.y == rhs(pt.x);
}

CurvePoint EllipticCurve::negate(const CurvePoint& a) const {
  if (a.infinity) return a;
  return CurvePoint::affine(a.x, -a.y);
}

CurvePoint EllipticCurve::add(const CurvePoint& a, const CurvePoint& b) const {
  if (a.infinity) return b;
  if (b.infinity) return a;
  FieldElement lambda;
  if (a.x == b.x) {
    if (!(a.y == b.y) || a.y.is_zero()) return CurvePoint::at_infinity();
    lambda = (a.x * a.x * base_.from_int(3) + a.x * c_[2].scaled(2) + c_[1]) / a.y.scaled(2);
  } else {
    lambda = (b.y - a.y) / (b.x - a.x);
  }
  const FieldElement x3 = lambda * lambda - c_[2] - a.x - b.x;
  return CurvePoint::affine(x3, lambda * (a.x - x3) - a.y);
}

CurvePoint EllipticCurve::multiply(std::int64_t k, const CurvePoint& a) const {
  CurvePoint base = k < 0 ? negate(a) : a;
  std::uint64_t n = k < 0 ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
  CurvePoint result = CurvePoint::at_infinity();
  while (n > 0) {
    if (n & 1) result = add(result, base);
    n >>= 1;
    if (n > 0) base = add(base, base);
  }
  return result;
}

CurvePoint EllipticCurve::frobenius(const CurvePoint& a, std::uint64_t e) const {
  if (a.infinity) return a;
  return CurvePoint::affine(frobenius_pow(a.x, e), frobenius_pow(a.y, e));
}

std::uint64_t EllipticCurve::order(const CurvePoint& a) const {
  CurvePoint r = a;
  std::uint64_t n = 1;
  while (!r.infinity) {
    r = add(r, a);
    ++n;
  }
  return n;
}

std::string EllipticCurve::to_string() const {
  std::string s = "y^2 = x^3";
  const char* names[] = {"", "x", "x^2"};
  for (int i = 2; i >= 0; --i) {
    const auto& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    s += " + ";
    const std::string cs = c.to_string();
    const bool paren = cs.find('+') != std::string::npos;
    if (!(c.is_one() && i > 0)) s += (paren ? "(" + cs + ")" : cs) + (i > 0 ? " " : "");
    s += names[i];
  }
  return s + " over " + base_.name();
}

std::vector<CurvePoint> rational_points(const EllipticCurve& e) {
  const FiniteField& f = e.base();
  const auto& roots = sqrt_table(f);
  std::vector<CurvePoint> out{CurvePoint::at_infinity()};
  for (std::uint64_t i = 0; i < f.size(); ++i) {
    const FieldElement x = f.element(i);
    const FieldElement v = e.rhs(x);
    const std::int64_t r = roots[v.index()];
    if (r < 0) continue;
    const FieldElement y = f.element(static_cast<std::uint64_t>(r));
    out.push_back(CurvePoint::affine(x, y));
    if (!v.is_zero()) out.push_back(CurvePoint::affine(x, -y));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t enumerated_point_count(const EllipticCurve& e, int s) {
  const EllipticCurve es = e.extended(s);
  const FiniteField& f = es.base();
  const auto& roots = sqrt_table(f);
  std::int64_t count = 1;
  for (std::uint64_t i = 0; i < f.size(); ++i) {
    const FieldElement v = es.rhs(f.element(i));
    if (v.is_zero()) {
      count += 1;
    } else if (roots[v.index()] >= 0) {
      count += 2;
    }
  }
  return count;
}

std::int64_t trace_t(const EllipticCurve& e) {
  return static_cast<std::int64_t>(e.q()) + 1 - enumerated_point_count(e, 1);
}

std::int64_t trace_recurrence(const EllipticCurve& e, int m) {
  if (m < 0) throw DomainError("negative twist");
  const std::int64_t t = trace_t(e);
  const auto q = static_cast<std::int64_t>(e.q());
  std::int64_t prev = 2, cur = t;
  if (m == 0) return prev;
  for (int i = 1; i < m; ++i) {
    const std::int64_t next = t * cur - q * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::int64_t point_count(const EllipticCurve& e, int s) {
  if (s < 1) throw DomainError("extension degree must be positive");
  if (s == 1) return enumerated_point_count(e, 1);
  std::int64_t qs = 1;
  for (int i = 0; i < s; ++i) qs *= static_cast<std::int64_t>(e.q());
  return qs + 1 - trace_recurrence(e, s);
}

// --------------------------------------------------------------- Hasse-Witt

HyperellipticCurve::HyperellipticCurve(FiniteField base, Polynomial f) : base_(std::move(base)), f_(std::move(f)) {
  if (base_.p() == 2) throw DomainError("hyperelliptic models y^2 = f(x) need p odd");
  if (!(f_.field() == base_)) throw DomainError("polynomial outside the base field");
  if (f_.degree() < 3 || f_.degree() % 2 == 0) throw DomainError("f must have odd degree at least 3");
  if (gcd(f_, f_.derivative()).degree() > 0) throw DomainError("f is not squarefree");
}

FieldMatrix hasse_witt(const HyperellipticCurve& c) {
  const std::uint32_t p = c.base().p();
  const Polynomial h = poly_power(c.f(), (p - 1) / 2);
  const int g = c.genus();
  FieldMatrix out(static_cast<std::size_t>(g), std::vector<FieldElement>(static_cast<std::size_t>(g)));
  for (int i = 1; i <= g; ++i) {
    for (int j = 1; j <= g; ++j) {
      const auto deg = static_cast<std::int64_t>(p) * i - j;
      out[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
          deg < 0 ? c.base().zero() : h.coeff(static_cast<std::size_t>(deg));
    }
  }
  return out;
}

FieldMatrix hasse_witt(const EllipticCurve& e) { return hasse_witt(HyperellipticCurve(e.base(), e.cubic())); }

FieldElement hasse_invariant(const EllipticCurve& e) { return hasse_witt(e)[0][0]; }

bool is_supersingular(const EllipticCurve& e) {
  const bool by_matrix = hasse_invariant(e).is_zero();
  const bool by_count = trace_t(e) % static_cast<std::int64_t>(e.p()) == 0;
  if (by_matrix != by_count) {
    throw InternalInconsistency("Hasse-Witt and point count disagree on supersingularity of " + e.to_string());
  }
  return by_matrix;
}

// ------------------------------------------------------------ endomorphisms

CurvePoint EllipticEndomorphism::apply(const EllipticCurve& e, const CurvePoint& z) const {
  if (!translation.infinity && !(translation.x.field() == e.base())) {
    throw DomainError("translation point is not over the curve's field");
  }
  return e.add(translation, e.multiply(static_cast<std::int64_t>(sign) * k, z));
}

EllipticEndomorphism EllipticEndomorphism::extended(const EllipticCurve& from, const EllipticCurve& to) const {
  return {from.embed_point(translation, to), sign, k};
}

std::optional<std::uint64_t> EllipticEndomorphism::order(const EllipticCurve& e) const {
  if (k == 1 && sign == 1) return e.order(translation);
  if (k == 1 && sign == -1) return 2;
  return std::nullopt;
}

FieldElement h1_action(const EllipticCurve& e, const EllipticEndomorphism& g) {
  if (g.k < 1 || (g.sign != 1 && g.sign != -1)) throw DomainError("unsupported endomorphism shape");
  if (!e.contains(g.translation)) throw DomainError("translation point is not on the curve");
  return e.base().from_int(static_cast<std::int64_t>(g.sign) * g.k);
}

SemilinearModule h1_module(const EllipticCurve& e) {
  const WittRing ring = WittRing::get(e.base(), 1);
  RingMatrix a(ring, 1);
  a.set(0, 0, ring.teichmuller(hasse_invariant(e)));
  return SemilinearModule(std::move(a), 1, e.base().degree());
}

StabilizedFixedModule etale_h1(const EllipticCurve& e) { return stabilize_fixed_module(h1_module(e)); }

std::string to_string(Space s) {
  switch (s) {
    case Space::AffineLine:
      return "affine_line";
    case Space::OpenElliptic:
      return "open_elliptic";
    case Space::ProperElliptic:
      return "proper_elliptic";
  }
  return "?";
}

std::array<int, 3> CohomologyProfile::ranks() const {
  std::array<int, 3> r{0, 0, 0};
  for (const auto& d : degrees) r[static_cast<std::size_t>(d.degree)] = d.fixed.fixed.free_rank();
  return r;
}

CohomologyProfile cohomology_profile(Space space, const EllipticCurve* curve, const EllipticEndomorphism* g) {
  CohomologyProfile out;
  if (space == Space::AffineLine) return out;
  if (curve == nullptr || g == nullptr) throw DomainError("elliptic scenario without a curve and endomorphism");
  const WittRing ring = WittRing::get(curve->base(), 1);
  const int d = curve->base().degree();
  if (space == Space::ProperElliptic) {
    SemilinearModule h0(RingMatrix::identity(ring, 1), 1, d);
    StabilizedFixedModule fixed = stabilize_fixed_module(h0);
    out.degrees.push_back({0, h0, RingMatrix::identity(ring, 1), std::move(fixed)});
  } else if (space != Space::OpenElliptic) {
    throw DomainError("unsupported scenario space");
  }
  SemilinearModule h1 = h1_module(*curve);
  RingMatrix action(ring, 1);
  action.set(0, 0, ring.teichmuller(h1_action(*curve, *g)));
  StabilizedFixedModule fixed = stabilize_fixed_module(h1);
  out.degrees.push_back({1, std::move(h1), std::move(action), std::move(fixed)});
  return out;
}

}  // namespace lefschetz
