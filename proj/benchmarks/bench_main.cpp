#include <benchmark/benchmark.h>

#include "ietseq/constructions.hpp"
#include "ietseq/discrepancy.hpp"
#include "ietseq/sequences.hpp"

using namespace ietseq;

static void BM_QuadMul(benchmark::State& state) {
  QuadReal x = beta(3, 2);
  const QuadReal y = beta(3, 2) + QuadReal(1);
  for (auto _ : state) {
    x = frac(x * y);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_QuadMul);

static void BM_QuadCompare(benchmark::State& state) {
  const QuadReal x = golden();
  const QuadReal y = golden() + QuadReal(make_rational(1, 1000000007));
  for (auto _ : state) benchmark::DoNotOptimize(x < y);
}
BENCHMARK(BM_QuadCompare);

static void BM_StarDisc(benchmark::State& state) {
  const auto pts = PointStream::kronecker(golden()).take(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(star_disc_unit(pts));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_StarDisc)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

static void BM_Curve(benchmark::State& state) {
  const auto s = PointStream::kronecker(golden());
  for (auto _ : state) benchmark::DoNotOptimize(curve(s, static_cast<std::size_t>(state.range(0)), 1));
}
BENCHMARK(BM_Curve)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

static void BM_FlsOrbit(benchmark::State& state) {
  const Iet f = fls(3, 2);
  const QuadReal x0 = fls_start(3, 2, 0).x0;
  for (auto _ : state) benchmark::DoNotOptimize(orbit(f, x0, 0, state.range(0)));
}
BENCHMARK(BM_FlsOrbit)->Arg(1000)->Arg(10000);

static void BM_LsPoints(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ls_points(2, 3, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_LsPoints)->Arg(1000);
BENCHMARK_MAIN();
