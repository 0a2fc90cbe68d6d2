#pragma once

// Correspondences a = (g, id) on A^1 and on elliptic curves, fixed points of
// the twisted correspondence Fr^m o g, and local terms on constant sheaves.

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "lefschetz/curve.hpp"
#include "lefschetz/zpn_matrix.hpp"

namespace lefschetz {

/// g(x) = alpha x + beta on A^1 over F_q.
struct AffineLineMap {
  FieldElement alpha;
  FieldElement beta;
};

/// g = tau_P o [sign k] on E.
struct EllipticMap {
  EllipticCurve curve;
  EllipticEndomorphism g;
};

class Correspondence {
 public:
  Correspondence() = default;
  /// alpha != 0; both coefficients in one field.
  static Correspondence affine(FieldElement alpha, FieldElement beta);
  /// P on the curve over its base field, sign = +-1, k >= 1.
  static Correspondence elliptic(EllipticCurve curve, EllipticEndomorphism g);

  bool is_affine() const { return std::holds_alternative<AffineLineMap>(data_); }
  const AffineLineMap& affine_map() const { return std::get<AffineLineMap>(data_); }
  const EllipticMap& elliptic_map() const { return std::get<EllipticMap>(data_); }
  FiniteField base() const;
  std::uint64_t q() const { return base().size(); }
  std::string to_string() const;

 private:
  explicit Correspondence(std::variant<AffineLineMap, EllipticMap> d) : data_(std::move(d)) {}
  std::variant<AffineLineMap, EllipticMap> data_;
};

/// Constant sheaf (Z/p^n)^rank with a global endomorphism u.
struct SheafDatum {
  int n = 1;
  int rank = 1;
  ZpnMatrix u;

  static SheafDatum identity(std::int64_t p, int n, int rank);
  std::int64_t trace() const { return u.trace(); }
  std::int64_t modulus() const { return u.modulus(); }
};

struct FixedPoint {
  std::variant<FieldElement, CurvePoint> point;
  int residue_degree = 1;  // over F_q
};

struct FixedPointSet {
  int m = 1;
  std::vector<FixedPoint> points;
  bool complete = false;
  std::int64_t count = 0;
  std::string method;
};

/// #Fix(Fr^m o g) on the whole space (A^1 or E). Closed form.
std::int64_t fix_count(const Correspondence& corr, int m);
/// True when O is a fixed point of Fr^m o g (only for elliptic maps, iff P = O).
bool origin_fixed(const Correspondence& corr);

struct OracleBudget {
  /// log2 of the largest field enumerated element by element.
  int enumeration_log2 = 20;
};

/// Independent fixed-point computation; never consults fix_count except to
/// decide when an open-ended extension search may stop.
FixedPointSet brute_force_fixed_points(const Correspondence& corr, int m, OracleBudget budget = {});

/// count * Tr(u) in Z/p^n. Throws DomainError on an incomplete set.
std::int64_t local_term_sum(const SheafDatum& sheaf, const FixedPointSet& fixset);
/// count * Tr(u) in Z/p^n for an explicit count.
std::int64_t local_term_sum(const SheafDatum& sheaf, std::int64_t count);

struct TranslationCheck {
  std::int64_t expected = 0;  // #E(F_{q^m})
  std::vector<std::pair<CurvePoint, std::int64_t>> counts;
  bool ok = true;
};

/// Brute-force #Fix(Fr^m o tau_P) for every rational P against #E(F_{q^m}).
TranslationCheck translation_independence_check(const EllipticCurve& e, int m, OracleBudget budget = {});

/// g o Fr = Fr o g on every point of E(F_{q^s}).
bool commutes_with_frobenius(const EllipticCurve& e, const EllipticEndomorphism& g, int s);

}  // namespace lefschetz
