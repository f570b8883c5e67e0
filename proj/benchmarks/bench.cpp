#include <benchmark/benchmark.h>

#include "giq/groebner.hpp"
#include "giq/pairing.hpp"
#include "giq/presets.hpp"
#include "giq/problem.hpp"
#include "giq/weights.hpp"

using namespace giq;

static void BM_BuchbergerCstar(benchmark::State& state) {
  int a = static_cast<int>(state.range(0));
  auto spec = problem_pn_cstar(a, 2, a);
  auto order = MonomialOrder::natural(OrderKind::lex, 2);
  for (auto _ : state) {
    auto gb = buchberger(spec.ring.relations, order);
    benchmark::DoNotOptimize(gb);
  }
}
BENCHMARK(BM_BuchbergerCstar)->DenseRange(2, 6, 2);

static void BM_MinNormPoint(benchmark::State& state) {
  std::vector<WeightVector> pts;
  auto n = state.range(0);
  for (long i = 0; i < n; ++i)
    pts.push_back({Rational(i % 5 - 2), Rational((3 * i) % 7 - 3), Rational(1 + i % 2)});
  for (auto _ : state) benchmark::DoNotOptimize(min_norm_point(pts));
}
BENCHMARK(BM_MinNormPoint)->Arg(4)->Arg(8)->Arg(16);

static void BM_ComputeV(benchmark::State& state) {
  auto spec = problem_pn_cstar(3, 2, 3);
  auto ring = build_ring(spec, OrderKind::lex);
  auto constraints = build_constraints(spec, ring, OrderKind::lex);
  for (auto _ : state) benchmark::DoNotOptimize(compute_v(ring, constraints, spec.max_degree));
}
BENCHMARK(BM_ComputeV);

// The largest preset: ring, constraints, kernel and pairing from scratch.
static void BM_Sl2Full(benchmark::State& state) {
  auto spec = problem_p1_sl2(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto ring = build_ring(spec, OrderKind::lex);
    auto v = compute_v(ring, build_constraints(spec, ring, OrderKind::lex), spec.max_degree);
    benchmark::DoNotOptimize(pairing_report(v));
  }
}
BENCHMARK(BM_Sl2Full)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
