#pragma once

// Semilinear operators Phi(v) = A * sigma^e(v) on free modules over
// W_n(F_{p^D}), their fixed modules M^{1-Phi}, the linearized operator F and
// the trace comparisons between M^{1-Phi} and M.
//
// The algebraic closure is never materialized. Everything that lives "over
// k" is computed on an explicit finite layer F_{p^{D t}}, with t chosen by a
// provable stopping rule (the fixed module reaches the Fitting rank).

#include <cstdint>
#include <optional>
#include <vector>

#include "lefschetz/witt.hpp"
#include "lefschetz/zpn_matrix.hpp"

namespace lefschetz {

/// Column vector in a free module of rank r.
using ModuleVector = std::vector<WittVector>;

/// Square matrix over a Witt ring, row-major.
class RingMatrix {
 public:
  RingMatrix() = default;
  RingMatrix(WittRing ring, int size);
  RingMatrix(WittRing ring, int size, std::vector<WittVector> entries);
  static RingMatrix identity(WittRing ring, int size);
  static RingMatrix scalar(WittRing ring, int size, std::int64_t k);

  const WittRing& ring() const { return ring_; }
  int size() const { return size_; }
  const WittVector& operator()(int i, int j) const { return e_[static_cast<std::size_t>(i * size_ + j)]; }
  void set(int i, int j, WittVector v);

  friend RingMatrix operator*(const RingMatrix& a, const RingMatrix& b);
  friend RingMatrix operator+(const RingMatrix& a, const RingMatrix& b);
  friend bool operator==(const RingMatrix& a, const RingMatrix& b) { return a.e_ == b.e_; }
  RingMatrix pow(std::uint64_t k) const;
  WittVector trace() const;
  ModuleVector apply(const ModuleVector& v) const;
  /// sigma^e applied entrywise.
  RingMatrix frobenius(std::uint64_t e) const;
  RingMatrix embedded(const Embedding& e) const;
  RingMatrix reduced_length(int n) const;
  bool defined_over(int sub_degree) const;

 private:
  WittRing ring_;
  int size_ = 0;
  std::vector<WittVector> e_;
};

/// Inverse over the local ring W_n(F_{p^D}); nullopt if not invertible.
std::optional<RingMatrix> inverse(const RingMatrix& a);

/// Z/p^n-basis of W_n(F_{p^D}) by Teichmuller lifts of the polynomial basis
/// 1, a, ..., a^{D-1}, with the coordinate map back to (Z/p^n)^D.
class WittBasis {
 public:
  explicit WittBasis(WittRing ring);

  const WittRing& ring() const { return ring_; }
  int dimension() const { return static_cast<int>(basis_.size()); }
  const WittVector& element(int j) const { return basis_[static_cast<std::size_t>(j)]; }

  std::vector<std::int64_t> coordinates(const WittVector& w) const;
  WittVector from_coordinates(std::span<const std::int64_t> c) const;

 private:
  WittRing ring_;
  std::vector<WittVector> basis_;
};

class SemilinearModule {
 public:
  SemilinearModule() = default;
  /// Validates that every entry lies over F_{p^def_degree}.
  SemilinearModule(RingMatrix matrix, int twist, int def_degree);

  const WittRing& ring() const { return matrix_.ring(); }
  int rank() const { return matrix_.size(); }
  int twist() const { return twist_; }
  int def_degree() const { return def_degree_; }
  /// D with ring = W_n(F_{p^D}).
  int residue_degree() const { return ring().residue_field().degree(); }
  int length() const { return ring().n(); }
  const RingMatrix& matrix() const { return matrix_; }

  /// Phi(v) = A sigma^e(v).
  ModuleVector apply(const ModuleVector& v) const;
  /// Scalars extended to F_{p^{D t}}.
  SemilinearModule base_change(int t) const;
  /// M / pM as a module over F_{p^D}.
  SemilinearModule reduce_mod_p() const;

 private:
  RingMatrix matrix_;
  int twist_ = 1;
  int def_degree_ = 1;
};

/// Z/p^n-linear matrix of a map on M viewed as a free Z/p^n-module of rank
/// r * D. Coordinates of a module vector are the blocks of Witt coordinates.
struct RestrictedMap {
  ZpnMatrix matrix;
  WittRing ring;
  int rank = 0;
};

std::vector<std::int64_t> to_coordinates(const WittBasis& basis, const ModuleVector& v);
ModuleVector from_coordinates(const WittBasis& basis, std::span<const std::int64_t> c, int rank);

RestrictedMap restrict_scalars(const SemilinearModule& m);
/// Restriction of a linear endomorphism given by a matrix over the ring.
RestrictedMap restrict_linear(const RingMatrix& a);

struct FixedModule {
  WittRing ring;  // the layer the fixed vectors live over
  int rank = 0;   // module rank r
  ZpnMatrix basis;  // Howell rows in restricted coordinates
  std::vector<int> profile;  // elementary-divisor exponents
  std::optional<FreeBasis> free;  // set when the fixed module is free

  int free_rank() const;
  bool is_free() const;
  /// i-th free basis vector; throws unless the module is free.
  ModuleVector vector(std::size_t i) const;
};

/// Kernel of 1 - Phi on the given layer.
FixedModule fixed_module(const SemilinearModule& m);

struct FittingData {
  std::vector<int> semisimple_profile;  // of the stable image, over Z/p^n
  int nilpotent_index = 0;              // least j with ker R^j = ker R^{j+1}
};

FittingData fitting(const SemilinearModule& m);

struct StabilizedFixedModule {
  FixedModule fixed;
  int extension_degree = 1;  // t
  SemilinearModule layer;    // m base-changed by t
};

/// Extends scalars t = 1, 2, ... until the fixed module is free of the rank
/// of the Fitting unit-root part. Throws BudgetExceeded once D t exceeds the
/// largest constructible field.
StabilizedFixedModule stabilize_fixed_module(const SemilinearModule& m);

/// F = A sigma^e(A) ... sigma^{e(d-1)}(A), the matrix of Phi^d as a linear map.
RingMatrix linearized_F(const SemilinearModule& m, int q_degree);

struct ModuleTrace {
  WittVector witt;                   // Tr(phi F^m | M)
  std::optional<std::int64_t> prime;  // its value in Z/p^n when it lies there
};

/// Tr(phi o F^m | M). Checks that phi commutes with Phi and is defined over F_q.
ModuleTrace trace_on_module(const SemilinearModule& m, const RingMatrix& phi, int power, int q_degree);
/// Tr(phi o F^m | M^{1-Phi}) over Z/p^n on the stabilized fixed module.
std::int64_t trace_on_fixed(const SemilinearModule& m, const RingMatrix& phi, int power, int q_degree);
/// Same, reusing a stabilization.
std::int64_t trace_on_fixed(const StabilizedFixedModule& s, const RingMatrix& phi, int power, int q_degree);

struct TraceThreshold {
  int threshold = 1;            // N used for the trace comparison
  int cokernel_nilpotency = 1;  // least N' >= 1 with Phi^{d N'} = 0 on the cokernel
  int empirical_start = 1;      // least m from which traces agree through threshold + 4
};

TraceThreshold trace_threshold(const SemilinearModule& m, const RingMatrix& phi, int q_degree);
/// Same, reusing a stabilization of m.
TraceThreshold trace_threshold(const SemilinearModule& m, const StabilizedFixedModule& s, const RingMatrix& phi,
                                   int q_degree);

/// Cokernel of M^{1-Phi} (x) W_n -> M on the stabilized layer, as a Howell
/// form of the image submodule; injectivity holds iff the image is free of
/// rank (fixed rank) * D t.
struct FixedImage {
  ZpnMatrix image;
  bool injective = false;
};
FixedImage fixed_image(const StabilizedFixedModule& s);

struct OneMinusPhiSolution {
  ModuleVector x;
  int extension_degree = 1;
};

/// x with x - Phi(x) = y over the first layer t <= max_t where it exists.
OneMinusPhiSolution solve_one_minus_phi(const SemilinearModule& m, const ModuleVector& y, int max_t = kMaxDegree);
/// x - Phi(x) = y on the layer of extension degree t only.
std::optional<ModuleVector> solve_one_minus_phi_at(const SemilinearModule& m, const ModuleVector& y, int t);

/// Solve A x = y over Z/p^n; nullopt when y is not in the column span.
std::optional<std::vector<std::int64_t>> solve_linear(const ZpnMatrix& a, std::span<const std::int64_t> y);

}  // namespace lefschetz
