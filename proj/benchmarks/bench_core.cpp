#include <benchmark/benchmark.h>

#include <random>

#include "lefschetz/correspondence.hpp"
#include "lefschetz/lemma_suite.hpp"
#include "lefschetz/trace_formula.hpp"

using namespace lefschetz;

static void BM_FieldMul(benchmark::State& state) {
  const FiniteField f = build_field(3, static_cast<int>(state.range(0)));
  FieldElement a = f.generator() + f.one();
  const FieldElement b = f.generator();
  for (auto _ : state) {
    a = a * b + f.one();
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_FieldMul)->Arg(1)->Arg(4)->Arg(10);

static void BM_WittMul(benchmark::State& state) {
  const WittRing w = WittRing::get(build_field(5, 2), static_cast<int>(state.range(0)));
  const FiniteField f = w.residue_field();
  std::vector<FieldElement> c(static_cast<std::size_t>(w.n()), f.generator());
  WittVector a = w.from_components(c);
  const WittVector b = w.teichmuller(f.generator() + f.one());
  for (auto _ : state) {
    a = a * b + w.one();
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_WittMul)->DenseRange(1, 3);

static void BM_Howell(benchmark::State& state) {
  const auto size = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  ZpnMatrix a(3, 3, size, size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) a.set(i, j, static_cast<std::int64_t>(rng() % 27));
  }
  for (auto _ : state) benchmark::DoNotOptimize(howell_form(a));
}
BENCHMARK(BM_Howell)->Arg(4)->Arg(12)->Arg(24);

static void BM_PointCount(benchmark::State& state) {
  const FiniteField f = build_field(7, static_cast<int>(state.range(0)));
  const EllipticCurve e(f, f.from_int(3), f.one(), f.zero());
  for (auto _ : state) benchmark::DoNotOptimize(enumerated_point_count(e, 1));
}
BENCHMARK(BM_PointCount)->Arg(1)->Arg(3);

static void BM_VerifyCurve(benchmark::State& state) {
  const FiniteField f = build_field(5, 1);
  const EllipticCurve e(f, f.one(), f.one(), f.zero());
  Scenario s;
  s.space = Space::ProperElliptic;
  s.corr = Correspondence::elliptic(e, {CurvePoint::at_infinity(), 1, 1});
  s.sheaf = SheafDatum::identity(5, 1, 1);
  s.m_range = {1, 2, 3};
  for (auto _ : state) benchmark::DoNotOptimize(verify(s));
}
BENCHMARK(BM_VerifyCurve)->Unit(benchmark::kMillisecond);

static void BM_LemmaCase(benchmark::State& state) {
  std::mt19937_64 rng(9);
  int replaced = 0;
  const LemmaConfig cfg{3, static_cast<int>(state.range(0)), 2};
  for (auto _ : state) {
    const LemmaCase c = random_lemma_case(cfg, rng, 3, replaced);
    benchmark::DoNotOptimize(check_lemma_case(c));
  }
}
BENCHMARK(BM_LemmaCase)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
