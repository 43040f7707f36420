#include "semiortho/painleve.hpp"
#include "semiortho/string_equations.hpp"
#include "semiortho/theta_omega.hpp"

#include <benchmark/benchmark.h>

using namespace semiortho;

namespace {

void BM_MomentTable(benchmark::State& state) {
  const PrecisionContext ctx(static_cast<int>(state.range(0)));
  ScopedPrecision sp(ctx);
  const WeightSpec w(Maxwell{Real(1), Real("0.5")});
  for (auto _ : state) benchmark::DoNotOptimize(build_moment_table(w, 40, ctx));
}
BENCHMARK(BM_MomentTable)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_OracleRecurrence(benchmark::State& state) {
  const PrecisionContext ctx(100);
  ScopedPrecision sp(ctx);
  const int N = static_cast<int>(state.range(0));
  const MomentTable mt = build_moment_table(WeightSpec(Quartic{Real(1)}), 2 * N + 4, ctx);
  for (auto _ : state) benchmark::DoNotOptimize(oracle_recurrence(mt, N));
}
BENCHMARK(BM_OracleRecurrence)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_LewQuarles(benchmark::State& state) {
  const PrecisionContext ctx(50);
  ScopedPrecision sp(ctx);
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lew_quarles(Real(0), N, ctx));
}
BENCHMARK(BM_LewQuarles)->Arg(20)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_IdentitySuite(benchmark::State& state) {
  const PrecisionContext ctx(100);
  ScopedPrecision sp(ctx);
  const WeightSpec w(GenJacobi{Real("-0.25"), parse_real("-1/3"), Real("-0.5"), Real(2)});
  const MomentTable mt = build_moment_table(w, 28, ctx);
  const RecurrenceTable rt = oracle_recurrence(mt, 11);
  const PolySystem ps = build_poly_system(rt, mt, 10, 3);
  for (auto _ : state) {
    const ThetaOmegaSequence tos = build_theta_omega(w, mt, rt, ps, 10);
    benchmark::DoNotOptimize(identity_suite(tos, ps, rt, 10, ctx));
  }
}
BENCHMARK(BM_IdentitySuite)->Unit(benchmark::kMillisecond);

void BM_QuarticFlow(benchmark::State& state) {
  const PrecisionContext ctx(60);
  ScopedPrecision sp(ctx);
  const WeightSpec w(Quartic{Real(0)});
  const RecurrenceTable seed = oracle_recurrence(build_moment_table(w, 34, ctx), 14);
  for (auto _ : state) benchmark::DoNotOptimize(flow_integrate(w, seed, Real(1), FlowWindow{}, ctx));
}
BENCHMARK(BM_QuarticFlow)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
