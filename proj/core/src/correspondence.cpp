#include "lefschetz/correspondence.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "lefschetz/arith.hpp"
#include "lefschetz/error.hpp"
#include "lefschetz/semilinear.hpp"

namespace lefschetz {

namespace {

std::int64_t power_or_throw(std::uint64_t q, int m) {
  const auto v = checked_pow(q, static_cast<unsigned>(m), std::uint64_t{1} << 62);
  if (!v) throw BudgetExceeded("q^m overflows 62 bits");
  return static_cast<std::int64_t>(*v);
}

// Smallest s with x in F_{q^s}, where q = p^d.
int residue_degree_of(const FieldElement& x, int d) {
  const int total = x.degree() / d;
  for (int s = 1; s <= total; ++s) {
    if (total % s == 0 && in_subfield(x, d * s)) return s;
  }
  return total;
}

int residue_degree_of(const CurvePoint& z, int d) {
  if (z.infinity) return 1;
  const int sx = residue_degree_of(z.x, d);
  const int sy = residue_degree_of(z.y, d);
  return sx / std::gcd(sx, sy) * sy;
}

bool fits(const FiniteField& base, int s, const OracleBudget& budget) {
  const auto size = checked_pow(base.p(), static_cast<unsigned>(base.degree() * s),
                                std::uint64_t{1} << std::min(budget.enumeration_log2, 62));
  return size.has_value() && base.degree() * s <= kMaxDegree;
}

// Roots of alpha x^Q + beta = x in F_{Q^j} by F_p-linear algebra.
FixedPointSet affine_oracle(const AffineLineMap& g, int m) {
  const FiniteField& base = g.alpha.field();
  const auto p = static_cast<std::int64_t>(base.p());
  const int d = base.degree();
  const std::int64_t expected = power_or_throw(base.size(), m);
  FixedPointSet out;
  out.m = m;
  out.method = "linear";
  const auto e = static_cast<std::uint64_t>(d * m);
  for (int j = 1; d * m * j <= kMaxDegree; ++j) {
    const int degree = d * m * j;
    if (!checked_pow(base.p(), static_cast<unsigned>(degree), kConstructionCap)) break;
    const FiniteField f = build_field(base.p(), degree);
    const Embedding emb = embed(base, f);
    const FieldElement alpha = emb(g.alpha);
    const FieldElement beta = emb(g.beta);
    // Column i holds L(a^i) with L(x) = alpha x^Q - x.
    ZpnMatrix l(p, 1, static_cast<std::size_t>(degree), static_cast<std::size_t>(degree));
    FieldElement basis = f.one();
    for (int i = 0; i < degree; ++i) {
      const FieldElement img = alpha * frobenius_pow(basis, e) - basis;
      for (int r = 0; r < degree; ++r) l.set(static_cast<std::size_t>(r), static_cast<std::size_t>(i), img.coeff(r));
      basis *= f.generator();
    }
    std::vector<std::int64_t> rhs(static_cast<std::size_t>(degree));
    const FieldElement minus_beta = -beta;
    for (int r = 0; r < degree; ++r) rhs[static_cast<std::size_t>(r)] = minus_beta.coeff(r);
    const auto particular = solve_linear(l, rhs);
    if (!particular) continue;
    const ZpnMatrix ker = kernel(l);
    const std::size_t dim = ker.rows();
    const auto count = checked_pow(base.p(), static_cast<unsigned>(dim), std::uint64_t{1} << 20);
    if (!count) throw BudgetExceeded("too many affine-line fixed points to list");
    std::vector<FieldElement> roots;
    std::vector<std::int64_t> combo(dim, 0);
    for (std::uint64_t idx = 0; idx < *count; ++idx) {
      std::uint64_t rest = idx;
      for (std::size_t k = 0; k < dim; ++k) {
        combo[k] = static_cast<std::int64_t>(rest % base.p());
        rest /= base.p();
      }
      std::vector<std::int64_t> x = *particular;
      for (std::size_t k = 0; k < dim; ++k) {
        for (std::size_t c = 0; c < x.size(); ++c) x[c] = mod_floor(x[c] + combo[k] * ker(k, c), p);
      }
      const FieldElement root = f.from_coeffs(x);
      if (!(alpha * frobenius_pow(root, e) + beta == root)) {
        throw InternalInconsistency("affine-line oracle produced a non-fixed point");
      }
      roots.push_back(root);
    }
    std::sort(roots.begin(), roots.end());
    if (std::adjacent_find(roots.begin(), roots.end()) != roots.end()) {
      throw InternalInconsistency("affine-line oracle produced a repeated root");
    }
    out.points.clear();
    for (const auto& r : roots) out.points.push_back({r, residue_degree_of(r, d)});
    out.count = static_cast<std::int64_t>(roots.size());
    if (out.count == expected) {
      out.complete = true;
      return out;
    }
  }
  return out;
}

// Fixed points of Fr^m o g among the points of E(F_{q^s}).
std::vector<CurvePoint> enumerate_fixed(const EllipticMap& map, int m, int s) {
  const EllipticCurve es = map.curve.extended(s);
  const EllipticEndomorphism gs = map.g.extended(map.curve, es);
  const auto e = static_cast<std::uint64_t>(map.curve.base().degree() * m);
  std::vector<CurvePoint> out;
  for (const auto& z : rational_points(es)) {
    if (es.frobenius(gs.apply(es, z), e) == z) out.push_back(z);
  }
  return out;
}

FixedPointSet listed(const std::vector<CurvePoint>& pts, int m, int d, std::string method, bool complete) {
  FixedPointSet out;
  out.m = m;
  out.method = std::move(method);
  out.complete = complete;
  out.count = static_cast<std::int64_t>(pts.size());
  for (const auto& z : pts) out.points.push_back({z, residue_degree_of(z, d)});
  return out;
}

// Fix(Fr^m o tau_P) for P of order > 2, counted as roots of the x-coordinate
// equation x(z - P) = x(z)^Q minus the solutions of Fr^m(z) = P - z.
FixedPointSet translation_radical_oracle(const EllipticMap& map, int m, const OracleBudget& budget) {
  const EllipticCurve& e = map.curve;
  const FiniteField& f = e.base();
  const CurvePoint& pt = map.g.translation;
  const int d = f.degree();
  FixedPointSet out;
  out.m = m;
  out.method = "radical";
  if (!fits(f, 2 * m, budget)) return out;
  const std::uint64_t q_m = static_cast<std::uint64_t>(power_or_throw(f.size(), m));
  const Polynomial x = Polynomial::monomial(f, f.one(), 1);
  const Polynomial xp = Polynomial::constant(pt.x);
  const Polynomial cubic = e.cubic();
  const Polynomial lin = x - xp;
  const Polynomial a = (Polynomial::monomial(f, f.one(), q_m) + Polynomial::constant(e.coeff(2)) + x + xp) * lin * lin -
                       cubic - Polynomial::constant(e.rhs(pt.x));
  const Polynomial h = a * a - cubic.scaled(e.rhs(pt.x).scaled(4));
  const Polynomial rad = radical(h);
  std::int64_t roots = rad.degree();
  if (rad(pt.x).is_zero()) --roots;
  // Points with Fr^m(z) = P - z; the overlap with Fr^m(z) = z - P stays counted.
  EllipticMap reflected{e, EllipticEndomorphism{pt, -1, 1}};
  std::vector<CurvePoint> known;
  std::int64_t minus_only = 0;
  const EllipticCurve e2 = e.extended(2 * m);
  const CurvePoint pt2 = e.embed_point(pt, e2);
  const auto frob = static_cast<std::uint64_t>(d * m);
  for (const auto& z : enumerate_fixed(reflected, m, 2 * m)) {
    if (z.infinity || z.x == pt2.x) continue;
    if (e2.frobenius(e2.add(z, pt2), frob) == z) {
      known.push_back(z);
    } else {
      ++minus_only;
    }
  }
  out.count = roots - minus_only;
  out.complete = true;
  for (const auto& z : known) out.points.push_back({z, residue_degree_of(z, d)});
  return out;
}

}  // namespace

// ------------------------------------------------------------ Correspondence

Correspondence Correspondence::affine(FieldElement alpha, FieldElement beta) {
  if (!(alpha.field() == beta.field())) throw DomainError("alpha and beta lie in different fields");
  if (alpha.is_zero()) throw DomainError("alpha must be nonzero");
  return Correspondence(AffineLineMap{std::move(alpha), std::move(beta)});
}

Correspondence Correspondence::elliptic(EllipticCurve curve, EllipticEndomorphism g) {
  if (g.sign != 1 && g.sign != -1) throw DomainError("sign must be +1 or -1");
  if (g.k < 1) throw DomainError("k must be positive");
  if (!curve.contains(g.translation)) throw DomainError("translation point is not a rational point of the curve");
  return Correspondence(EllipticMap{std::move(curve), std::move(g)});
}

FiniteField Correspondence::base() const {
  if (is_affine()) return affine_map().alpha.field();
  return elliptic_map().curve.base();
}

std::string Correspondence::to_string() const {
  std::ostringstream os;
  if (is_affine()) {
    os << "x -> " << affine_map().alpha.to_string() << " x + " << affine_map().beta.to_string();
  } else {
    const auto& g = elliptic_map().g;
    os << "z -> " << g.translation.to_string() << " + [" << (g.sign * g.k) << "] z on " << elliptic_map().curve.to_string();
  }
  return os.str();
}

SheafDatum SheafDatum::identity(std::int64_t p, int n, int rank) {
  return {n, rank, ZpnMatrix::identity(p, n, static_cast<std::size_t>(rank))};
}

// ------------------------------------------------------------------ counting

std::int64_t fix_count(const Correspondence& corr, int m) {
  if (m < 1) throw DomainError("twist m must be at least 1");
  const std::int64_t qm = power_or_throw(corr.q(), m);
  if (corr.is_affine()) return qm;
  const auto& map = corr.elliptic_map();
  const std::int64_t k = map.g.k;
  return k * k * qm - map.g.sign * k * trace_recurrence(map.curve, m) + 1;
}

bool origin_fixed(const Correspondence& corr) {
  return !corr.is_affine() && corr.elliptic_map().g.translation.infinity;
}

FixedPointSet brute_force_fixed_points(const Correspondence& corr, int m, OracleBudget budget) {
  if (m < 1) throw DomainError("twist m must be at least 1");
  if (corr.is_affine()) return affine_oracle(corr.affine_map(), m);
  const auto& map = corr.elliptic_map();
  const FiniteField& f = map.curve.base();
  const int d = f.degree();
  if (const auto r = map.g.order(map.curve)) {
    const int s = m * static_cast<int>(*r);
    // The x-coordinate count only enumerates F_{q^{2m}}, far less than
    // F_{q^{m r}} once the translation has order above 2.
    if (map.g.sign == 1 && *r > 2 && fits(f, 2 * m, budget)) return translation_radical_oracle(map, m, budget);
    if (fits(f, s, budget)) return listed(enumerate_fixed(map, m, s), m, d, "enumeration", true);
    return listed({}, m, d, "enumeration", false);
  }
  // Infinite-order maps: widen until the count matches the closed form.
  const std::int64_t expected = fix_count(corr, m);
  std::vector<CurvePoint> found;
  for (int j = 1; fits(f, m * j, budget); ++j) {
    found = enumerate_fixed(map, m, m * j);
    if (static_cast<std::int64_t>(found.size()) == expected) return listed(found, m, d, "enumeration", true);
  }
  return listed(found, m, d, "enumeration", false);
}

std::int64_t local_term_sum(const SheafDatum& sheaf, std::int64_t count) {
  const std::int64_t mod = sheaf.modulus();
  return mod_floor(mod_floor(count, mod) * sheaf.trace(), mod);
}

std::int64_t local_term_sum(const SheafDatum& sheaf, const FixedPointSet& fixset) {
  if (!fixset.complete) throw DomainError("local term sum over an incomplete fixed-point set");
  return local_term_sum(sheaf, fixset.count);
}

TranslationCheck translation_independence_check(const EllipticCurve& e, int m, OracleBudget budget) {
  TranslationCheck out;
  out.expected = point_count(e, m);
  for (const auto& pt : rational_points(e)) {
    const auto set = brute_force_fixed_points(Correspondence::elliptic(e, {pt, 1, 1}), m, budget);
    out.counts.emplace_back(pt, set.complete ? set.count : -1);
    out.ok = out.ok && set.complete && set.count == out.expected;
  }
  return out;
}

bool commutes_with_frobenius(const EllipticCurve& e, const EllipticEndomorphism& g, int s) {
  const EllipticCurve es = e.extended(s);
  const EllipticEndomorphism gs = g.extended(e, es);
  const auto frob = static_cast<std::uint64_t>(e.base().degree());
  for (const auto& z : rational_points(es)) {
    if (!(gs.apply(es, es.frobenius(z, frob)) == es.frobenius(gs.apply(es, z), frob))) return false;
  }
  return true;
}

}  // namespace lefschetz
