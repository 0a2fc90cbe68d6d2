#pragma once

// Both sides of the mod p^n trace formula for a scenario, compared per twist m.
// The left side only ever goes through cohomology (fixed modules of the
// Hasse-Witt operator); the right side only through fixed-point counts.

#include <cstdint>
#include <string>
#include <vector>

#include "lefschetz/correspondence.hpp"
#include "lefschetz/curve.hpp"
#include "lefschetz/error.hpp"

namespace lefschetz {

struct Scenario {
  Space space = Space::AffineLine;
  Correspondence corr;
  SheafDatum sheaf;
  std::vector<int> m_range;
  std::string name;

  /// Checks that the space matches the correspondence and that curve
  /// scenarios use n = 1.
  void validate() const;
};

struct VerifyOptions {
  OracleBudget budget;
  /// Run the independent fixed-point oracle and require it to agree with the
  /// closed-form count whenever it completes.
  bool use_oracle = true;
  /// Fault injection for harness tests: multiplies u on the right side only.
  std::int64_t rhs_u_scale = 1;
};

struct VerificationRow {
  int m = 0;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  std::int64_t fix_count = 0;    // closed form, whole space
  std::int64_t oracle_count = -1;  // -1 when the oracle did not complete
  bool oracle_complete = false;
  bool oracle_agrees = true;
  bool origin_fixed = false;
  std::string oracle_method;
  double elapsed_ms = 0;

  bool equal() const { return lhs == rhs; }
  bool ok() const { return equal() && oracle_agrees; }
};

struct VerificationReport {
  std::string scenario;
  std::int64_t modulus = 0;
  std::vector<VerificationRow> rows;

  bool all_ok() const;
  /// Number of rows with ok() == true.
  std::size_t passed() const;
  std::string diagnostics() const;
};

/// Thrown by verify_or_throw; carries the full report.
class ScenarioMismatch : public VerificationMismatch {
 public:
  explicit ScenarioMismatch(VerificationReport report)
      : VerificationMismatch(report.diagnostics()), report_(std::move(report)) {}
  const VerificationReport& report() const { return report_; }

 private:
  VerificationReport report_;
};

/// Sum_i (-1)^i Tr(u o Fr^m | H^i_c) through the fixed modules.
std::int64_t lhs_trace(const Scenario& s, int m);
std::int64_t lhs_trace(const Scenario& s, const CohomologyProfile& profile, int m);

/// Sum of local terms Tr(u) over the fixed points in the scenario space.
/// Uses `count` fixed points of Fr^m o g on the whole space.
std::int64_t rhs_sum(const Scenario& s, std::int64_t count, std::int64_t u_scale = 1);
/// Same with the closed-form count.
std::int64_t rhs_sum(const Scenario& s, int m);

/// Every m in the range; rows record mismatches instead of throwing.
VerificationReport verify(const Scenario& s, const VerifyOptions& options = {});
/// As verify, but throws ScenarioMismatch unless every row is ok.
VerificationReport verify_or_throw(const Scenario& s, const VerifyOptions& options = {});

struct WoodsHoleResult {
  int m = 0;
  std::int64_t coherent = 0;   // 1 - c A^{(m)} in F_p
  std::int64_t fix_count = 0;  // closed form
  std::int64_t fix_mod_p = 0;
  bool ok = false;
};

/// 1 - Tr(g^* Fr^m | H^1(E, O)) against #Fix(Fr^m o g) mod p.
WoodsHoleResult woods_hole_verify(const EllipticCurve& e, const EllipticEndomorphism& g, int m);

struct ZpRow {
  int m = 0;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;  // q^m
  int valuation = 0;     // v_p(q^m)
  /// n with lhs = rhs mod p^n, for n = 1 .. valuation + 1.
  std::vector<std::pair<int, bool>> congruences;
  bool equal_in_zp = false;
};

/// Affine line, g(x) = x + 1 over F_q: the Z_p limit of both sides.
std::vector<ZpRow> zp_counterexample(std::uint64_t q, const std::vector<int>& m_range);

}  // namespace lefschetz
