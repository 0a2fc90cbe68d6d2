#pragma once

// Elliptic curves y^2 = x^3 + c2 x^2 + c1 x + c0 and hyperelliptic curves
// y^2 = f(x) in odd characteristic: point arithmetic, point counts,
// Hasse-Witt matrices, and H^1 as a Frobenius-fixed module.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lefschetz/field.hpp"
#include "lefschetz/poly.hpp"
#include "lefschetz/semilinear.hpp"

namespace lefschetz {

struct CurvePoint {
  bool infinity = true;
  FieldElement x;
  FieldElement y;

  static CurvePoint at_infinity() { return {}; }
  static CurvePoint affine(FieldElement x, FieldElement y) { return {false, std::move(x), std::move(y)}; }

  friend bool operator==(const CurvePoint& a, const CurvePoint& b) {
    if (a.infinity || b.infinity) return a.infinity == b.infinity;
    return a.x == b.x && a.y == b.y;
  }
  /// O first, then by (x, y) index.
  friend bool operator<(const CurvePoint& a, const CurvePoint& b);
  std::string to_string() const;
};

class EllipticCurve {
 public:
  EllipticCurve() = default;
  /// Throws DomainError for p = 2 or a cubic with a repeated root.
  EllipticCurve(FiniteField base, FieldElement c0, FieldElement c1, FieldElement c2);

  const FiniteField& base() const { return base_; }
  std::uint32_t p() const { return base_.p(); }
  std::uint64_t q() const { return base_.size(); }
  /// c0, c1, c2.
  const FieldElement& coeff(int i) const { return c_[static_cast<std::size_t>(i)]; }
  Polynomial cubic() const;
  FieldElement rhs(const FieldElement& x) const;

  /// The same curve over F_{q^s}.
  EllipticCurve extended(int s) const;
  CurvePoint embed_point(const CurvePoint& pt, const EllipticCurve& target) const;

  bool contains(const CurvePoint& pt) const;
  CurvePoint add(const CurvePoint& a, const CurvePoint& b) const;
  CurvePoint negate(const CurvePoint& a) const;
  CurvePoint multiply(std::int64_t k, const CurvePoint& a) const;
  /// (x^{p^e}, y^{p^e}).
  CurvePoint frobenius(const CurvePoint& a, std::uint64_t e) const;
  /// Least r >= 1 with [r] a = O.
  std::uint64_t order(const CurvePoint& a) const;

  std::string to_string() const;

 private:
  FiniteField base_;
  std::array<FieldElement, 3> c_{};
};

/// Every point of E over its base field, O first, sorted.
std::vector<CurvePoint> rational_points(const EllipticCurve& e);

/// #E(F_{q^s}): exhaustive for s = 1, q^s + 1 - t_s otherwise.
std::int64_t point_count(const EllipticCurve& e, int s = 1);
/// #E(F_{q^s}) by exhaustive enumeration only.
std::int64_t enumerated_point_count(const EllipticCurve& e, int s);
/// t = q + 1 - #E(F_q).
std::int64_t trace_t(const EllipticCurve& e);
/// t_m with t_0 = 2, t_1 = t, t_{m+1} = t t_m - q t_{m-1}.
std::int64_t trace_recurrence(const EllipticCurve& e, int m);

class HyperellipticCurve {
 public:
  /// f squarefree of odd degree 2g + 1, p odd.
  HyperellipticCurve(FiniteField base, Polynomial f);

  const FiniteField& base() const { return base_; }
  const Polynomial& f() const { return f_; }
  int genus() const { return (f_.degree() - 1) / 2; }

 private:
  FiniteField base_;
  Polynomial f_;
};

using FieldMatrix = std::vector<std::vector<FieldElement>>;

/// Entry (i, j) is the coefficient of x^{p i - j} in f^{(p-1)/2}, 1 <= i, j <= g.
FieldMatrix hasse_witt(const HyperellipticCurve& c);
/// The Hasse invariant a as a 1 x 1 matrix.
FieldMatrix hasse_witt(const EllipticCurve& e);
FieldElement hasse_invariant(const EllipticCurve& e);

/// Hasse-Witt zero, cross-checked against t = 0 mod p.
bool is_supersingular(const EllipticCurve& e);

/// z -> P + [sign * k] z.
struct EllipticEndomorphism {
  CurvePoint translation;
  int sign = 1;
  int k = 1;

  /// `e` must be the curve the translation point lives on.
  CurvePoint apply(const EllipticCurve& e, const CurvePoint& z) const;
  /// The same map with the translation point moved from `from` to `to`.
  EllipticEndomorphism extended(const EllipticCurve& from, const EllipticCurve& to) const;
  /// Order of the map when it is of finite order (translations, sign -1 with
  /// k = 1); nullopt otherwise.
  std::optional<std::uint64_t> order(const EllipticCurve& e) const;
};

/// Scalar by which the endomorphism acts on H^1(E, O_E).
FieldElement h1_action(const EllipticCurve& e, const EllipticEndomorphism& g);

/// H^1(E, O_E) with Phi = Hasse-Witt, as a rank-1 module over F_q.
SemilinearModule h1_module(const EllipticCurve& e);
/// Frobenius-fixed part of h1_module after stabilization.
StabilizedFixedModule etale_h1(const EllipticCurve& e);

enum class Space { AffineLine, OpenElliptic, ProperElliptic };

std::string to_string(Space s);

struct CohomologyDegree {
  int degree = 0;
  SemilinearModule module;
  RingMatrix action;  // phi_i on the module
  StabilizedFixedModule fixed;
};

struct CohomologyProfile {
  std::vector<CohomologyDegree> degrees;  // only degrees that may be nonzero

  /// Z/p-ranks of H^0_c, H^1_c, H^2_c.
  std::array<int, 3> ranks() const;
};

/// Compactly supported cohomology with the action of the endomorphism.
CohomologyProfile cohomology_profile(Space space, const EllipticCurve* curve, const EllipticEndomorphism* g);

}  // namespace lefschetz
