#include "lefschetz/trace_formula.hpp"

#include <chrono>
#include <sstream>

#include "lefschetz/arith.hpp"

namespace lefschetz {

void Scenario::validate() const {
  if (m_range.empty()) throw DomainError("empty m range");
  for (int m : m_range) {
    if (m < 1) throw DomainError("twist m must be at least 1");
  }
  if (sheaf.rank < 1 || sheaf.u.rows() != static_cast<std::size_t>(sheaf.rank) ||
      sheaf.u.cols() != static_cast<std::size_t>(sheaf.rank)) {
    throw DomainError("sheaf endomorphism has the wrong shape");
  }
  if (sheaf.u.p() != static_cast<std::int64_t>(corr.base().p())) throw DomainError("sheaf coefficients in the wrong characteristic");
  if ((space == Space::AffineLine) != corr.is_affine()) throw DomainError("space does not match the correspondence");
  if (space != Space::AffineLine && sheaf.n != 1) throw DomainError("curve scenarios use n = 1");
}

namespace {

std::int64_t signed_mod(std::int64_t a, std::int64_t mod) { return mod_floor(a, mod); }

CohomologyProfile profile_for(const Scenario& s) {
  if (s.space == Space::AffineLine) return cohomology_profile(s.space, nullptr, nullptr);
  const auto& map = s.corr.elliptic_map();
  return cohomology_profile(s.space, &map.curve, &map.g);
}

}  // namespace

std::int64_t lhs_trace(const Scenario& s, const CohomologyProfile& profile, int m) {
  const std::int64_t mod = s.sheaf.modulus();
  const int d = s.corr.base().degree();
  std::int64_t total = 0;
  for (const auto& deg : profile.degrees) {
    const std::int64_t tr = trace_on_fixed(deg.fixed, deg.action, m, d);
    const std::int64_t term = mod_floor(tr, mod) * s.sheaf.trace() % mod;
    total = deg.degree % 2 == 0 ? total + term : total - term;
  }
  return signed_mod(total, mod);
}

std::int64_t lhs_trace(const Scenario& s, int m) { return lhs_trace(s, profile_for(s), m); }

std::int64_t rhs_sum(const Scenario& s, std::int64_t count, std::int64_t u_scale) {
  // The open curve drops the boundary point's contribution: Fix on E minus
  // the H^0 term of the removed origin.
  const std::int64_t in_space = s.space == Space::OpenElliptic ? count - 1 : count;
  SheafDatum scaled = s.sheaf;
  scaled.u = s.sheaf.u.scaled(u_scale);
  return local_term_sum(scaled, in_space);
}

std::int64_t rhs_sum(const Scenario& s, int m) { return rhs_sum(s, fix_count(s.corr, m)); }

bool VerificationReport::all_ok() const { return passed() == rows.size(); }

std::size_t VerificationReport::passed() const {
  std::size_t n = 0;
  for (const auto& r : rows) n += r.ok() ? 1 : 0;
  return n;
}

std::string VerificationReport::diagnostics() const {
  std::ostringstream os;
  os << "scenario " << scenario << " (mod " << modulus << ")";
  for (const auto& r : rows) {
    if (r.ok()) continue;
    os << "\n  m=" << r.m << ": lhs " << r.lhs << ", rhs " << r.rhs << ", fix_count " << r.fix_count;
    if (r.oracle_complete) os << ", oracle " << r.oracle_count << " via " << r.oracle_method;
    if (!r.oracle_agrees) os << " (oracle disagrees with the closed form)";
    if (r.origin_fixed) os << ", origin fixed";
  }
  return os.str();
}

VerificationReport verify(const Scenario& s, const VerifyOptions& options) {
  s.validate();
  VerificationReport report;
  report.scenario = s.name.empty() ? s.corr.to_string() : s.name;
  report.modulus = s.sheaf.modulus();
  const CohomologyProfile profile = profile_for(s);
  for (int m : s.m_range) {
    const auto start = std::chrono::steady_clock::now();
    VerificationRow row;
    row.m = m;
    row.lhs = lhs_trace(s, profile, m);
    row.fix_count = fix_count(s.corr, m);
    row.origin_fixed = origin_fixed(s.corr);
    std::int64_t count = row.fix_count;
    if (options.use_oracle) {
      const FixedPointSet set = brute_force_fixed_points(s.corr, m, options.budget);
      row.oracle_method = set.method;
      row.oracle_complete = set.complete;
      if (set.complete) {
        row.oracle_count = set.count;
        row.oracle_agrees = set.count == row.fix_count;
        count = set.count;
      }
    }
    row.rhs = rhs_sum(s, count, options.rhs_u_scale);
    row.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report.rows.push_back(std::move(row));
  }
  return report;
}

VerificationReport verify_or_throw(const Scenario& s, const VerifyOptions& options) {
  VerificationReport report = verify(s, options);
  if (!report.all_ok()) throw ScenarioMismatch(std::move(report));
  return report;
}

WoodsHoleResult woods_hole_verify(const EllipticCurve& e, const EllipticEndomorphism& g, int m) {
  if (m < 1) throw DomainError("twist m must be at least 1");
  const SemilinearModule h1 = h1_module(e);
  const WittRing& ring = h1.ring();
  RingMatrix c(ring, 1);
  c.set(0, 0, ring.teichmuller(h1_action(e, g)));
  const ModuleTrace tr = trace_on_module(h1, c, m, e.base().degree());
  if (!tr.prime) throw InternalInconsistency("trace of an F_q-rational endomorphism is not in F_p");
  const auto p = static_cast<std::int64_t>(e.p());
  WoodsHoleResult out;
  out.m = m;
  out.coherent = mod_floor(1 - *tr.prime, p);
  out.fix_count = fix_count(Correspondence::elliptic(e, g), m);
  out.fix_mod_p = mod_floor(out.fix_count, p);
  out.ok = out.coherent == out.fix_mod_p;
  return out;
}

std::vector<ZpRow> zp_counterexample(std::uint64_t q, const std::vector<int>& m_range) {
  std::uint64_t p = 0;
  for (std::uint64_t c = 2; c <= q; ++c) {
    if (q % c == 0) {
      p = c;
      break;
    }
  }
  const auto d = p ? log_exact(q, p) : std::nullopt;
  if (!d || !is_prime(p)) throw DomainError("q must be a prime power");
  const FiniteField f = build_field(static_cast<std::uint32_t>(p), *d);
  std::vector<ZpRow> rows;
  for (int m : m_range) {
    ZpRow row;
    row.m = m;
    Scenario s;
    s.space = Space::AffineLine;
    s.corr = Correspondence::affine(f.one(), f.one());
    s.m_range = {m};
    row.rhs = fix_count(s.corr, m);
    row.valuation = valuation(static_cast<std::uint64_t>(row.rhs), p);
    // Each H^i_c(A^1, Z/p^n) vanishes, so the left side is 0 at every level.
    for (int n = 1; n <= row.valuation + 1; ++n) {
      if (!checked_pow(p, static_cast<unsigned>(n), std::uint64_t{1} << 62)) break;
      s.sheaf = SheafDatum::identity(static_cast<std::int64_t>(p), n, 1);
      const std::int64_t lhs = lhs_trace(s, m);
      row.congruences.emplace_back(n, lhs == rhs_sum(s, row.rhs));
      row.lhs = lhs;
    }
    row.equal_in_zp = row.lhs == row.rhs;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace lefschetz
