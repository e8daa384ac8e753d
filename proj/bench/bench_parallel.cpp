// Serial reference vs OpenMP kernels. Argument 0 runs serially, 1 in parallel.

#include "hexmo/harness.hpp"
#include "hexmo/search.hpp"
#include "hexmo/verify.hpp"

#include <benchmark/benchmark.h>

using namespace hexmo;

static void BM_SearchRandomized(benchmark::State& state) {
  SearchOptions opt;
  opt.mode = SearchMode::randomized;
  opt.samples = 2000;
  opt.parallel = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(search_max_knot(3, Setting::hex_standard, opt).max_reduced);
  state.SetItemsProcessed(state.iterations() * static_cast<long>(opt.samples));
}
BENCHMARK(BM_SearchRandomized)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_SearchSaturatedSmoothing(benchmark::State& state) {
  SearchOptions opt;
  opt.mode = SearchMode::saturated_smoothing;
  opt.max_smoothings = 2;
  opt.parallel = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(search_max_knot(3, Setting::hex_standard, opt).max_reduced);
}
BENCHMARK(BM_SearchSaturatedSmoothing)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_VerifyClaims(benchmark::State& state) {
  VerifyOptions opt;
  opt.r_max = 6;
  opt.parallel = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(verify_claims(opt).passed());
}
BENCHMARK(BM_VerifyClaims)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_AdjacentSidesSampled(benchmark::State& state) {
  const bool parallel = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(adjacent_sides_sampled(5, 500, 3, parallel).counterexamples);
}
BENCHMARK(BM_AdjacentSidesSampled)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_ComplementHarness(benchmark::State& state) {
  const bool parallel = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(complement_harness(BoardSpec::hex(4), 200, 9, 4, parallel).problems);
}
BENCHMARK(BM_ComplementHarness)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_PipelineHarness(benchmark::State& state) {
  const bool parallel = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(pipeline_harness(BoardSpec::hex(4), 40, 9, parallel).violations);
}
BENCHMARK(BM_PipelineHarness)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
