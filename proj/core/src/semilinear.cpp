#include "lefschetz/semilinear.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "lefschetz/arith.hpp"
#include "lefschetz/error.hpp"

namespace lefschetz {

namespace {

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

void check_same_ring(const WittRing& a, const WittRing& b) {
  if (!(a == b)) throw DomainError("matrices over different Witt rings");
}

const WittBasis& basis_for(const WittRing& ring) {
  static std::mutex mu;
  static std::map<const WittRingData*, std::unique_ptr<WittBasis>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[ring.data()];
  if (!slot) slot = std::make_unique<WittBasis>(ring);
  return *slot;
}

// Layer F_{p^{D t}} for a module over W_n(F_{p^D}); enforces the budget.
FiniteField layer_field(const SemilinearModule& m, int t) {
  const int degree = m.residue_degree() * t;
  const auto size = checked_pow(m.ring().p(), static_cast<unsigned>(degree), kConstructionCap);
  if (degree > kMaxDegree || !size) {
    throw BudgetExceeded("extension F_" + std::to_string(m.ring().p()) + "^" + std::to_string(degree) +
                         " exceeds the field budget");
  }
  return build_field(m.ring().p(), degree);
}

RingMatrix embed_matrix(const RingMatrix& a, const FiniteField& target) {
  if (a.ring().residue_field() == target) return a;
  return a.embedded(embed(a.ring().residue_field(), target));
}

// Restriction of v -> A * sigma^e(v) (e = 0 for linear maps).
RestrictedMap restrict_map(const RingMatrix& a, std::uint64_t e) {
  const WittRing& ring = a.ring();
  const WittBasis& basis = basis_for(ring);
  const int r = a.size();
  const int dim = basis.dimension();
  ZpnMatrix out(ring.p(), ring.n(), static_cast<std::size_t>(r * dim), static_cast<std::size_t>(r * dim));
  std::vector<WittVector> twisted;
  for (int k = 0; k < dim; ++k) twisted.push_back(witt_frobenius_pow(basis.element(k), e));
  for (int i = 0; i < r; ++i) {
    for (int k = 0; k < dim; ++k) {
      const std::size_t col = static_cast<std::size_t>(i * dim + k);
      for (int j = 0; j < r; ++j) {
        const auto c = basis.coordinates(a(j, i) * twisted[static_cast<std::size_t>(k)]);
        for (int l = 0; l < dim; ++l) out.set(static_cast<std::size_t>(j * dim + l), col, c[static_cast<std::size_t>(l)]);
      }
    }
  }
  return {std::move(out), ring, r};
}

}  // namespace

// ---------------------------------------------------------------- RingMatrix

RingMatrix::RingMatrix(WittRing ring, int size)
    : ring_(std::move(ring)), size_(size), e_(static_cast<std::size_t>(size * size), ring_.zero()) {}

RingMatrix::RingMatrix(WittRing ring, int size, std::vector<WittVector> entries)
    : ring_(std::move(ring)), size_(size), e_(std::move(entries)) {
  if (e_.size() != static_cast<std::size_t>(size * size)) throw DomainError("matrix entry count mismatch");
  for (const auto& x : e_) {
    if (!(x.ring() == ring_)) throw DomainError("matrix entry over a different ring");
  }
}

RingMatrix RingMatrix::identity(WittRing ring, int size) { return scalar(std::move(ring), size, 1); }

RingMatrix RingMatrix::scalar(WittRing ring, int size, std::int64_t k) {
  RingMatrix m(ring, size);
  const WittVector v = ring.from_int(k);
  for (int i = 0; i < size; ++i) m.set(i, i, v);
  return m;
}

void RingMatrix::set(int i, int j, WittVector v) {
  if (!(v.ring() == ring_)) throw DomainError("matrix entry over a different ring");
  e_[static_cast<std::size_t>(i * size_ + j)] = std::move(v);
}

RingMatrix operator*(const RingMatrix& a, const RingMatrix& b) {
  check_same_ring(a.ring_, b.ring_);
  if (a.size_ != b.size_) throw DomainError("matrix size mismatch");
  RingMatrix out(a.ring_, a.size_);
  for (int i = 0; i < a.size_; ++i) {
    for (int j = 0; j < a.size_; ++j) {
      WittVector acc = a.ring_.zero();
      for (int k = 0; k < a.size_; ++k) {
        if (a(i, k).is_zero() || b(k, j).is_zero()) continue;
        acc += a(i, k) * b(k, j);
      }
      out.set(i, j, acc);
    }
  }
  return out;
}

RingMatrix operator+(const RingMatrix& a, const RingMatrix& b) {
  check_same_ring(a.ring_, b.ring_);
  if (a.size_ != b.size_) throw DomainError("matrix size mismatch");
  RingMatrix out(a.ring_, a.size_);
  for (std::size_t i = 0; i < a.e_.size(); ++i) out.e_[i] = a.e_[i] + b.e_[i];
  return out;
}

RingMatrix RingMatrix::pow(std::uint64_t k) const {
  RingMatrix result = identity(ring_, size_);
  RingMatrix base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

WittVector RingMatrix::trace() const {
  WittVector t = ring_.zero();
  for (int i = 0; i < size_; ++i) t += (*this)(i, i);
  return t;
}

ModuleVector RingMatrix::apply(const ModuleVector& v) const {
  if (static_cast<int>(v.size()) != size_) throw DomainError("vector length mismatch");
  ModuleVector out;
  for (int i = 0; i < size_; ++i) {
    WittVector acc = ring_.zero();
    for (int j = 0; j < size_; ++j) acc += (*this)(i, j) * v[static_cast<std::size_t>(j)];
    out.push_back(acc);
  }
  return out;
}

RingMatrix RingMatrix::frobenius(std::uint64_t e) const {
  RingMatrix out = *this;
  for (auto& x : out.e_) x = witt_frobenius_pow(x, e);
  return out;
}

RingMatrix RingMatrix::embedded(const Embedding& e) const {
  if (!(e.source() == ring_.residue_field())) throw DomainError("embedding source mismatch");
  RingMatrix out(WittRing::get(e.target(), ring_.n()), size_);
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = witt_embed(e_[i], e);
  return out;
}

RingMatrix RingMatrix::reduced_length(int n) const {
  RingMatrix out(WittRing::get(ring_.residue_field(), n), size_);
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = reduce_length(e_[i], n);
  return out;
}

bool RingMatrix::defined_over(int sub_degree) const {
  return std::all_of(e_.begin(), e_.end(), [&](const WittVector& x) {
    for (int i = 0; i < x.length(); ++i) {
      if (!in_subfield(x.component(i), sub_degree)) return false;
    }
    return true;
  });
}

std::optional<RingMatrix> inverse(const RingMatrix& a) {
  const int n = a.size();
  const WittRing& ring = a.ring();
  std::vector<std::vector<WittVector>> m(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[static_cast<std::size_t>(i)].push_back(a(i, j));
    for (int j = 0; j < n; ++j) m[static_cast<std::size_t>(i)].push_back(i == j ? ring.one() : ring.zero());
  }
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n && piv < 0; ++i) {
      if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)].is_unit()) piv = i;
    }
    if (piv < 0) return std::nullopt;
    std::swap(m[static_cast<std::size_t>(c)], m[static_cast<std::size_t>(piv)]);
    auto& prow = m[static_cast<std::size_t>(c)];
    const WittVector inv = invert(prow[static_cast<std::size_t>(c)]);
    for (auto& x : prow) x = x * inv;
    for (int i = 0; i < n; ++i) {
      if (i == c) continue;
      auto& row = m[static_cast<std::size_t>(i)];
      const WittVector f = row[static_cast<std::size_t>(c)];
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < row.size(); ++j) row[j] = row[j] - f * prow[j];
    }
  }
  RingMatrix out(ring, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out.set(i, j, m[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + j)]);
  }
  return out;
}

// ----------------------------------------------------------------- WittBasis

WittBasis::WittBasis(WittRing ring) : ring_(std::move(ring)) {
  const FiniteField& f = ring_.residue_field();
  FieldElement a = f.one();
  for (int j = 0; j < f.degree(); ++j) {
    basis_.push_back(ring_.teichmuller(a));
    a *= f.generator();
  }
}

std::vector<std::int64_t> WittBasis::coordinates(const WittVector& w) const {
  const int dim = dimension();
  const int n = ring_.n();
  const auto p = static_cast<std::int64_t>(ring_.p());
  std::vector<std::int64_t> c(static_cast<std::size_t>(dim), 0);
  if (n == 1) {
    for (int j = 0; j < dim; ++j) c[static_cast<std::size_t>(j)] = w.component(0).coeff(j);
    return c;
  }
  const auto L = static_cast<std::uint64_t>(dim);
  WittVector rho = w;
  for (int level = 0; level < n; ++level) {
    for (int i = 0; i < level; ++i) {
      if (!rho.component(i).is_zero()) throw InternalInconsistency("Witt coordinate residual not divisible by p");
    }
    // Component `level` of p^level [y] is y^{p^level}.
    const FieldElement y0 = frobenius_pow(rho.component(level), static_cast<std::uint64_t>(level) * (L - 1));
    const std::int64_t scale = ipow(p, level);
    WittVector sub = ring_.zero();
    for (int j = 0; j < dim; ++j) {
      const std::int64_t d = y0.coeff(j);
      if (d == 0) continue;
      c[static_cast<std::size_t>(j)] += d * scale;
      sub += ring_.from_int(d * scale) * basis_[static_cast<std::size_t>(j)];
    }
    rho = rho - sub;
  }
  if (!rho.is_zero()) throw InternalInconsistency("Witt coordinate extraction did not terminate");
  return c;
}

WittVector WittBasis::from_coordinates(std::span<const std::int64_t> c) const {
  if (static_cast<int>(c.size()) != dimension()) throw DomainError("coordinate length mismatch");
  WittVector out = ring_.zero();
  for (int j = 0; j < dimension(); ++j) {
    const std::int64_t k = c[static_cast<std::size_t>(j)];
    if (k == 0) continue;
    out += ring_.from_int(k) * basis_[static_cast<std::size_t>(j)];
  }
  return out;
}

// ---------------------------------------------------------- SemilinearModule

SemilinearModule::SemilinearModule(RingMatrix matrix, int twist, int def_degree)
    : matrix_(std::move(matrix)), twist_(twist), def_degree_(def_degree) {
  if (twist_ < 1) throw DomainError("twist must be positive");
  if (def_degree_ < 1 || residue_degree() % def_degree_ != 0) {
    throw DomainError("definition degree must divide the residue degree");
  }
  if (!matrix_.defined_over(def_degree_)) throw DomainError("matrix entries are not defined over the stated field");
}

ModuleVector SemilinearModule::apply(const ModuleVector& v) const {
  ModuleVector s;
  for (const auto& x : v) s.push_back(witt_frobenius_pow(x, static_cast<std::uint64_t>(twist_)));
  return matrix_.apply(s);
}

SemilinearModule SemilinearModule::base_change(int t) const {
  if (t < 1) throw DomainError("extension degree must be positive");
  if (t == 1) return *this;
  return SemilinearModule(embed_matrix(matrix_, layer_field(*this, t)), twist_, def_degree_);
}

SemilinearModule SemilinearModule::reduce_mod_p() const {
  return SemilinearModule(matrix_.reduced_length(1), twist_, def_degree_);
}

// ---------------------------------------------------------------- restriction

std::vector<std::int64_t> to_coordinates(const WittBasis& basis, const ModuleVector& v) {
  std::vector<std::int64_t> out;
  for (const auto& x : v) {
    const auto c = basis.coordinates(x);
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

ModuleVector from_coordinates(const WittBasis& basis, std::span<const std::int64_t> c, int rank) {
  const auto dim = static_cast<std::size_t>(basis.dimension());
  if (c.size() != dim * static_cast<std::size_t>(rank)) throw DomainError("coordinate length mismatch");
  ModuleVector out;
  for (int i = 0; i < rank; ++i) out.push_back(basis.from_coordinates(c.subspan(static_cast<std::size_t>(i) * dim, dim)));
  return out;
}

RestrictedMap restrict_scalars(const SemilinearModule& m) {
  return restrict_map(m.matrix(), static_cast<std::uint64_t>(m.twist()));
}

RestrictedMap restrict_linear(const RingMatrix& a) { return restrict_map(a, 0); }

// -------------------------------------------------------------- fixed module

int FixedModule::free_rank() const { return static_cast<int>(profile.size()); }

bool FixedModule::is_free() const {
  return std::all_of(profile.begin(), profile.end(), [&](int e) { return e == ring.n(); });
}

ModuleVector FixedModule::vector(std::size_t i) const {
  if (!free) throw DomainError("fixed module is not free");
  return from_coordinates(basis_for(ring), free->rows.row(i), rank);
}

FixedModule fixed_module(const SemilinearModule& m) {
  const RestrictedMap r = restrict_scalars(m);
  const ZpnMatrix one = ZpnMatrix::identity(r.matrix.p(), r.matrix.n(), r.matrix.rows());
  FixedModule out;
  out.ring = m.ring();
  out.rank = m.rank();
  out.basis = kernel(one - r.matrix);
  out.profile = elementary_divisors(out.basis);
  if (out.is_free()) {
    out.free = free_basis(out.basis);
    if (!out.free) throw InternalInconsistency("free fixed module is not a direct summand");
  }
  return out;
}

FittingData fitting(const SemilinearModule& m) {
  const ZpnMatrix r = restrict_scalars(m).matrix;
  FittingData out;
  ZpnMatrix power = ZpnMatrix::identity(r.p(), r.n(), r.rows());
  int prev_image = -1;
  int prev_kernel = -1;
  bool kernel_done = false;
  for (int j = 0;; ++j) {
    const int img = span_log_size(image(power));
    const int ker = span_log_size(kernel(power));
    if (!kernel_done && ker == prev_kernel) {
      out.nilpotent_index = j - 1;
      kernel_done = true;
    }
    if (img == prev_image && kernel_done) {
      out.semisimple_profile = elementary_divisors(image(power));
      return out;
    }
    prev_image = img;
    prev_kernel = ker;
    power = power * r;
  }
}

StabilizedFixedModule stabilize_fixed_module(const SemilinearModule& m) {
  const FittingData fit = fitting(m);
  const int n = m.length();
  const int dim = m.residue_degree();
  if (!std::all_of(fit.semisimple_profile.begin(), fit.semisimple_profile.end(), [&](int e) { return e == n; }) ||
      fit.semisimple_profile.size() % static_cast<std::size_t>(dim) != 0) {
    throw InternalInconsistency("unit-root part of the module is not free");
  }
  const std::vector<int> target(fit.semisimple_profile.size() / static_cast<std::size_t>(dim), n);
  for (int t = 1;; ++t) {
    SemilinearModule layer = m.base_change(t);
    FixedModule fixed = fixed_module(layer);
    if (fixed.profile == target) return {std::move(fixed), t, std::move(layer)};
  }
}

// -------------------------------------------------------------------- traces

RingMatrix linearized_F(const SemilinearModule& m, int q_degree) {
  if (q_degree < 1) throw DomainError("q degree must be positive");
  const auto e = static_cast<std::uint64_t>(m.twist());
  if (!m.matrix().defined_over(static_cast<int>(e) * q_degree)) {
    throw DomainError("Frobenius matrix is not defined over F_q");
  }
  RingMatrix f = m.matrix();
  for (int i = 1; i < q_degree; ++i) f = f * m.matrix().frobenius(e * static_cast<std::uint64_t>(i));
  return f;
}

namespace {

void check_endomorphism(const SemilinearModule& m, const RingMatrix& phi, int q_degree) {
  check_same_ring(m.ring(), phi.ring());
  if (phi.size() != m.rank()) throw DomainError("endomorphism rank mismatch");
  if (!phi.defined_over(q_degree)) throw DomainError("endomorphism is not defined over F_q");
  if (!(phi * m.matrix() == m.matrix() * phi.frobenius(static_cast<std::uint64_t>(m.twist())))) {
    throw DomainError("endomorphism does not commute with Phi");
  }
}

}  // namespace

ModuleTrace trace_on_module(const SemilinearModule& m, const RingMatrix& phi, int power, int q_degree) {
  check_endomorphism(m, phi, q_degree);
  if (power < 0) throw DomainError("negative Frobenius power");
  const RingMatrix f = linearized_F(m, q_degree);
  ModuleTrace out{(phi * f.pow(static_cast<std::uint64_t>(power))).trace(), std::nullopt};
  bool prime = true;
  for (int i = 0; i < out.witt.length(); ++i) prime = prime && in_subfield(out.witt.component(i), 1);
  if (prime) {
    const auto c = basis_for(m.ring()).coordinates(out.witt);
    out.prime = c[0];
  }
  return out;
}

std::int64_t trace_on_fixed(const StabilizedFixedModule& s, const RingMatrix& phi, int power, int q_degree) {
  const SemilinearModule& layer = s.layer;
  const RingMatrix phi_layer = embed_matrix(phi, layer.ring().residue_field());
  check_endomorphism(layer, phi_layer, q_degree);
  const RingMatrix psi = phi_layer * linearized_F(layer, q_degree).pow(static_cast<std::uint64_t>(power));
  const ZpnMatrix r = restrict_linear(psi).matrix;
  if (!s.fixed.free) throw DomainError("fixed module is not free");
  const FreeBasis& basis = *s.fixed.free;
  const std::int64_t mod = r.modulus();
  std::int64_t trace = 0;
  for (std::size_t i = 0; i < basis.rows.rows(); ++i) {
    const auto c = basis.coordinates(r.apply(basis.rows.row(i)));
    if (!c) throw InternalInconsistency("endomorphism does not preserve the fixed module");
    trace = (trace + (*c)[i]) % mod;
  }
  return trace;
}

std::int64_t trace_on_fixed(const SemilinearModule& m, const RingMatrix& phi, int power, int q_degree) {
  return trace_on_fixed(stabilize_fixed_module(m), phi, power, q_degree);
}

FixedImage fixed_image(const StabilizedFixedModule& s) {
  const WittRing& ring = s.layer.ring();
  const WittBasis& basis = basis_for(ring);
  ZpnMatrix gens(ring.p(), ring.n(), 0, static_cast<std::size_t>(s.layer.rank() * basis.dimension()));
  const std::size_t count = s.fixed.free ? s.fixed.free->rows.rows() : 0;
  for (std::size_t i = 0; i < count; ++i) {
    const ModuleVector v = s.fixed.vector(i);
    for (int k = 0; k < basis.dimension(); ++k) {
      ModuleVector w;
      for (const auto& x : v) w.push_back(basis.element(k) * x);
      gens.append_row(to_coordinates(basis, w));
    }
  }
  FixedImage out;
  out.image = howell_form(gens);
  const std::vector<int> expected(gens.rows(), ring.n());
  out.injective = elementary_divisors(out.image) == expected;
  return out;
}

TraceThreshold trace_threshold(const SemilinearModule& m, const RingMatrix& phi, int q_degree) {
  return trace_threshold(m, stabilize_fixed_module(m), phi, q_degree);
}

TraceThreshold trace_threshold(const SemilinearModule& m, const StabilizedFixedModule& s, const RingMatrix& phi,
                                   int q_degree) {
  const FixedImage img = fixed_image(s);
  const ZpnMatrix r = restrict_scalars(s.layer).matrix;
  const ZpnMatrix rd = r.pow(static_cast<std::uint64_t>(q_degree));
  TraceThreshold out;
  const int bound = static_cast<int>(r.rows()) * m.length() + 1;
  ZpnMatrix power = rd;
  for (int k = 1;; ++k) {
    if (howell_contains_all(img.image, power.transpose())) {
      out.cokernel_nilpotency = k;
      break;
    }
    if (k > bound) throw InternalInconsistency("Frobenius is not nilpotent on the cokernel of the fixed module");
    power = power * rd;
  }
  out.threshold = m.length() == 1 ? 1 : out.cokernel_nilpotency;
  const int last = out.threshold + 4;
  std::vector<bool> equal;
  for (int k = 1; k <= last; ++k) {
    const ModuleTrace full = trace_on_module(m, phi, k, q_degree);
    equal.push_back(full.prime && *full.prime == trace_on_fixed(s, phi, k, q_degree));
  }
  out.empirical_start = last + 1;
  for (int k = last; k >= 1 && equal[static_cast<std::size_t>(k - 1)]; --k) out.empirical_start = k;
  return out;
}

// ------------------------------------------------------------------- solving

std::optional<std::vector<std::int64_t>> solve_linear(const ZpnMatrix& a, std::span<const std::int64_t> y) {
  const std::size_t m = a.rows();
  const std::size_t w = a.cols();
  if (y.size() != m) throw DomainError("right-hand side length mismatch");
  const std::int64_t mod = a.modulus();
  ZpnMatrix aug(a.p(), a.n(), w, m + w);
  for (std::size_t j = 0; j < w; ++j) {
    for (std::size_t i = 0; i < m; ++i) aug.set(j, i, a(i, j));
    aug.set(j, m + j, 1);
  }
  const ZpnMatrix h = howell_form(aug);
  std::vector<std::int64_t> v(m + w, 0);
  for (std::size_t i = 0; i < m; ++i) v[i] = mod_floor(y[i], mod);
  for (std::size_t r = 0; r < h.rows(); ++r) {
    std::size_t c = 0;
    while (c < m + w && h(r, c) == 0) ++c;
    if (c >= m) break;
    for (std::size_t j = 0; j < c; ++j) {
      if (v[j] != 0) return std::nullopt;
    }
    if (v[c] % h(r, c) != 0) return std::nullopt;
    const std::int64_t q = v[c] / h(r, c);
    for (std::size_t j = c; j < m + w; ++j) v[j] = mod_floor(v[j] - q * h(r, j), mod);
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (v[i] != 0) return std::nullopt;
  }
  std::vector<std::int64_t> x(w);
  for (std::size_t j = 0; j < w; ++j) x[j] = mod_floor(-v[m + j], mod);
  std::vector<std::int64_t> expect(y.begin(), y.end());
  for (auto& e : expect) e = mod_floor(e, mod);
  if (a.apply(x) != expect) throw InternalInconsistency("linear solve produced a wrong solution");
  return x;
}

std::optional<ModuleVector> solve_one_minus_phi_at(const SemilinearModule& m, const ModuleVector& y, int t) {
  if (static_cast<int>(y.size()) != m.rank()) throw DomainError("vector length mismatch");
  const SemilinearModule layer = m.base_change(t);
  const FiniteField& f = layer.ring().residue_field();
  ModuleVector yl;
  for (const auto& x : y) {
    if (!(x.ring() == m.ring())) throw DomainError("vector over a different ring");
    yl.push_back(x.ring().residue_field() == f ? x : witt_embed(x, embed(x.ring().residue_field(), f)));
  }
  const RestrictedMap r = restrict_scalars(layer);
  const ZpnMatrix b = ZpnMatrix::identity(r.matrix.p(), r.matrix.n(), r.matrix.rows()) - r.matrix;
  const WittBasis& basis = basis_for(layer.ring());
  const auto sol = solve_linear(b, to_coordinates(basis, yl));
  if (!sol) return std::nullopt;
  ModuleVector x = from_coordinates(basis, *sol, layer.rank());
  const ModuleVector phix = layer.apply(x);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] - phix[i] == yl[i])) throw InternalInconsistency("1 - Phi solution does not check");
  }
  return x;
}

OneMinusPhiSolution solve_one_minus_phi(const SemilinearModule& m, const ModuleVector& y, int max_t) {
  for (int t = 1; t <= max_t; ++t) {
    if (auto x = solve_one_minus_phi_at(m, y, t)) return {std::move(*x), t};
  }
  throw BudgetExceeded("no solution of x - Phi(x) = y up to extension degree " + std::to_string(max_t));
}

}  // namespace lefschetz
