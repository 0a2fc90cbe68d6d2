// One line per acceptance criterion; exit status is nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lefschetz/cli.hpp"
#include "lefschetz/lemma_suite.hpp"
#include "lefschetz/trace_formula.hpp"
#include "oracles/oracles.hpp"

using namespace lefschetz;

namespace {

std::string data(const std::string& name) { return std::string(LEFSCHETZ_TEST_DATA) + "/" + name; }

struct Check {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (cond || !ok) {
      ok = ok && cond;
      return;
    }
    ok = false;
    note = what;
  }
};

struct Curve {
  std::int64_t p, c2, c1, c0;
  EllipticCurve e;
};

// Every monic cubic over F_p with nonzero discriminant, p in {3, 5, 7}.
std::vector<Curve> smooth_curves() {
  std::vector<Curve> out;
  for (std::int64_t p : {3, 5, 7}) {
    const FiniteField f = build_field(static_cast<std::uint32_t>(p), 1);
    for (std::int64_t c2 = 0; c2 < p; ++c2) {
      for (std::int64_t c1 = 0; c1 < p; ++c1) {
        for (std::int64_t c0 = 0; c0 < p; ++c0) {
          if (oracle::cubic_discriminant(p, c2, c1, c0) == 0) continue;
          out.push_back({p, c2, c1, c0, EllipticCurve(f, f.from_int(c0), f.from_int(c1), f.from_int(c2))});
        }
      }
    }
  }
  return out;
}

Scenario curve_scenario(const EllipticCurve& e, const CurvePoint& pt, Space space, std::int64_t u, std::vector<int> ms) {
  Scenario s;
  s.space = space;
  s.corr = Correspondence::elliptic(e, {pt, 1, 1});
  s.sheaf = SheafDatum::identity(e.p(), 1, 1);
  s.sheaf.u = s.sheaf.u.scaled(u);
  s.m_range = std::move(ms);
  s.name = e.to_string();
  return s;
}

std::string describe(const EllipticCurve& e, const CurvePoint& pt, int m) {
  return e.to_string() + " P=" + pt.to_string() + " m=" + std::to_string(m);
}

Check affine_corpus() {
  Check c;
  for (const char* f : {"affine_line_p2.scn", "affine_line_p3.scn", "affine_line_p5.scn"}) {
    const Scenario s = load_scenario(data(std::string("data/") + f));
    const VerificationReport r = verify(s);
    for (const auto& row : r.rows) {
      std::int64_t expect = 1;
      for (int i = 0; i < row.m; ++i) expect *= static_cast<std::int64_t>(s.corr.q());
      c.require(row.lhs == 0 && row.rhs == 0, std::string(f) + " m=" + std::to_string(row.m) + " nonzero side");
      c.require(row.oracle_complete && row.oracle_count == expect, std::string(f) + " oracle count");
      c.require(row.ok(), std::string(f) + " verdict");
    }
  }
  return c;
}

Check supersingular_translations() {
  Check c;
  for (std::uint32_t p : {7u, 11u}) {
    const FiniteField f = build_field(p, 1);
    const EllipticCurve e(f, f.zero(), f.one(), f.zero());
    for (int m = 1; m <= 2; ++m) {
      const TranslationCheck tc = translation_independence_check(e, m);
      c.require(tc.ok, e.to_string() + " translation counts differ");
      for (const auto& [pt, n] : tc.counts) {
        c.require(oracle::md(n, p) == 1, describe(e, pt, m) + " count not 1 mod p");
      }
      const std::int64_t oracle_count = m == 1 ? oracle::count_fp(p, 0, 1, 0) : oracle::count_fp2(p, 0, 1, 0);
      c.require(tc.expected == oracle_count, e.to_string() + " point count disagrees with the Legendre count");
    }
    for (const auto& pt : rational_points(e)) {
      const VerificationReport r = verify(curve_scenario(e, pt, Space::ProperElliptic, 1, {1, 2}));
      c.require(r.all_ok(), describe(e, pt, 0) + "\n" + r.diagnostics());
    }
  }
  return c;
}

Check ordinary_f5() {
  Check c;
  const FiniteField f = build_field(5, 1);
  const EllipticCurve e(f, f.one(), f.one(), f.zero());
  const Scenario s = curve_scenario(e, CurvePoint::at_infinity(), Space::OpenElliptic, 1, {1, 2});
  const std::int64_t n1 = oracle::count_fp(5, 0, 1, 1);
  const std::int64_t n2 = oracle::count_fp2(5, 0, 1, 1);
  const std::int64_t t[] = {5 + 1 - n1, 25 + 1 - n2};
  const std::int64_t counts[] = {n1, n2};
  for (int m = 1; m <= 2; ++m) {
    const std::int64_t lhs = lhs_trace(s, m);
    c.require(lhs == oracle::md(-t[m - 1], 5), "m=" + std::to_string(m) + " lhs " + std::to_string(lhs) + " != -t_m");
    c.require(lhs == oracle::md(counts[m - 1] - 1, 5), "m=" + std::to_string(m) + " lhs != #E - 1");
  }
  c.require(verify(s).all_ok(), "verify");
  return c;
}

Check curve_sweep(const std::vector<Curve>& curves) {
  Check c;
  for (const auto& cv : curves) {
    for (const auto& pt : rational_points(cv.e)) {
      // The fixed-point count on E does not depend on the space or on u, so the
      // independent oracle runs once per (curve, P).
      VerifyOptions opts;
      for (Space space : {Space::OpenElliptic, Space::ProperElliptic}) {
        for (std::int64_t u : {1, 2}) {
          const VerificationReport r = verify(curve_scenario(cv.e, pt, space, u, {1, 2}), opts);
          for (const auto& row : r.rows) {
            if (opts.use_oracle) c.require(row.oracle_complete, describe(cv.e, pt, row.m) + " oracle incomplete");
          }
          opts.use_oracle = false;
          c.require(r.all_ok(), describe(cv.e, pt, 0) + " " + to_string(space) + "\n" + r.diagnostics());
        }
      }
    }
  }
  return c;
}

Check woods_hole(const std::vector<Curve>& curves) {
  Check c;
  for (const auto& cv : curves) {
    for (const auto& pt : rational_points(cv.e)) {
      for (int m = 1; m <= 3; ++m) {
        const WoodsHoleResult w = woods_hole_verify(cv.e, {pt, 1, 1}, m);
        c.require(w.ok, describe(cv.e, pt, m));
        const std::int64_t n = m == 1 ? oracle::count_fp(cv.p, cv.c2, cv.c1, cv.c0) : -1;
        if (n >= 0) c.require(w.fix_mod_p == oracle::md(n, cv.p), describe(cv.e, pt, m) + " fix count");
      }
    }
  }
  return c;
}

Check lemma_suite() {
  Check c;
  const auto results = run_lemma_suite(default_lemma_configs(), 200, RunOptions{}.seed);
  for (const auto& r : results) {
    c.require(r.modules == 200, "module count");
    c.require(r.failures == 0, r.failure_details.empty() ? "failure" : r.failure_details.front());
  }
  return c;
}

Check witt_oracle() {
  Check c;
  const auto compare = [&](const WittRing& w, const WittVector& a, const WittVector& b) {
    const oracle::GaloisRing gr = oracle::galois_ring_for(w);
    const auto ga = gr.from_witt(a);
    const auto gb = gr.from_witt(b);
    c.require(gr.from_witt(a + b) == gr.add(ga, gb), w.name() + " sum " + a.to_string() + " " + b.to_string());
    c.require(gr.from_witt(a * b) == gr.mul(ga, gb), w.name() + " product " + a.to_string() + " " + b.to_string());
  };
  for (std::uint32_t p : {2u, 3u}) {
    const WittRing w = WittRing::get(build_field(p, 1), 2);
    const FiniteField f = w.residue_field();
    std::vector<WittVector> all;
    for (std::uint64_t i = 0; i < f.size(); ++i) {
      for (std::uint64_t j = 0; j < f.size(); ++j) all.push_back(w.from_components({f.element(i), f.element(j)}));
    }
    for (const auto& a : all) {
      for (const auto& b : all) compare(w, a, b);
    }
  }
  std::mt19937_64 rng(2718);
  const auto random_pairs = [&](const WittRing& w, int count) {
    const FiniteField f = w.residue_field();
    for (int i = 0; i < count; ++i) {
      std::vector<FieldElement> x, y;
      for (int k = 0; k < w.n(); ++k) {
        x.push_back(f.element(rng() % f.size()));
        y.push_back(f.element(rng() % f.size()));
      }
      compare(w, w.from_components(x), w.from_components(y));
    }
  };
  random_pairs(WittRing::get(build_field(5, 1), 2), 1000);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (int D : {1, 2}) random_pairs(WittRing::get(build_field(p, D), 3), 1000);
  }
  return c;
}

Check hasse(const std::vector<Curve>& curves) {
  Check c;
  for (const auto& cv : curves) {
    const std::int64_t a = static_cast<std::int64_t>(hasse_invariant(cv.e).index());
    const std::int64_t t = cv.p + 1 - oracle::count_fp(cv.p, cv.c2, cv.c1, cv.c0);
    c.require(a == oracle::hasse_invariant(cv.p, cv.c2, cv.c1, cv.c0), cv.e.to_string() + " Hasse invariant");
    c.require(a == oracle::md(t, cv.p), cv.e.to_string() + " a != t mod p");
  }
  return c;
}

Check zp_demo() {
  Check c;
  std::ostringstream out, err;
  c.require(run(Command::ZpDemo, {}, RunOptions{}, out, err) == 0, "zp-demo exit status");
  std::ifstream golden(data("golden/zp_demo.txt"));
  std::stringstream g;
  g << golden.rdbuf();
  c.require(golden.is_open(), "golden file missing");
  c.require(out.str() == g.str(), "zp-demo output differs from the golden file");
  for (std::uint64_t q : {2u, 4u, 8u, 9u, 25u, 27u}) {
    for (const auto& row : zp_counterexample(q, {1, 2, 3})) {
      std::int64_t qm = 1;
      for (int i = 0; i < row.m; ++i) qm *= static_cast<std::int64_t>(q);
      const std::string tag = "q=" + std::to_string(q) + " m=" + std::to_string(row.m);
      c.require(row.lhs == 0 && row.rhs == qm, tag + " sides");
      c.require(!row.equal_in_zp, tag + " equal in Z_p");
      for (const auto& [n, congruent] : row.congruences) c.require(congruent == (n <= row.valuation), tag + " congruence");
    }
  }
  return c;
}

Check negative_control() {
  Check c;
  {
    std::ostringstream out, err;
    c.require(run(Command::Verify, {data("data/negative_control.scn")}, RunOptions{}, out, err) == 1, "exit status");
    c.require(out.str().find("FAIL") != std::string::npos, "no FAIL line");
  }
  {
    std::ostringstream out, err;
    RunOptions o;
    o.rhs_u_scale = 2;
    c.require(run(Command::Verify, {data("data/ordinary_f5.scn")}, o, out, err) == 1, "scaled right side passed");
  }
  return c;
}

}  // namespace

int main() {
  const std::vector<Curve> curves = smooth_curves();
  struct Criterion {
    const char* name;
    double limit_s;
    std::function<Check()> run;
  };
  const std::vector<Criterion> criteria{
      {"affine line corpus p = 2, 3, 5", 5, affine_corpus},
      {"supersingular y^2 = x^3 + x over F_7 and F_11, all translations", 30, supersingular_translations},
      {"ordinary curve over F_5: lhs = -t_m = #E - 1 mod 5", 0, ordinary_f5},
      {"sweep of smooth cubics over F_3, F_5, F_7", 300, [&] { return curve_sweep(curves); }},
      {"coherent trace against fixed points mod p", 0, [&] { return woods_hole(curves); }},
      {"semilinear lemma suite, 200 modules per configuration", 120, lemma_suite},
      {"Witt arithmetic against the Galois ring model", 0, witt_oracle},
      {"Hasse invariant equals trace of Frobenius mod p", 0, [&] { return hasse(curves); }},
      {"Z_p counterexample table", 0, zp_demo},
      {"negative control and fault injection fail", 0, negative_control},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& cr = criteria[i];
    const auto start = std::chrono::steady_clock::now();
    Check c;
    try {
      c = cr.run();
    } catch (const std::exception& e) {
      c.ok = false;
      c.note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.ok && cr.limit_s > 0 && secs > cr.limit_s) {
      c.ok = false;
      c.note = "over the " + std::to_string(static_cast<int>(cr.limit_s)) + " s budget";
    }
    failed += c.ok ? 0 : 1;
    std::printf("%s %2zu %s (%.2f s)%s%s\n", c.ok ? "PASS" : "FAIL", i + 1, cr.name, secs, c.note.empty() ? "" : ": ",
                c.note.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
  return failed == 0 ? 0 : 1;
}
