#include "cantorq/cantorq.hpp"

#include <benchmark/benchmark.h>

using namespace cantorq;

namespace {

void BM_ClosedForm(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const auto split = canonical_split_set(n);
  for (auto _ : state) benchmark::DoNotOptimize(distortion_closed_form(n, split));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ClosedForm)->RangeMultiplier(4)->Range(4, 1024)->Complexity();

void BM_FastError(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(optimal_error(n));
}
BENCHMARK(BM_FastError)->Arg(3)->Arg(1000)->Arg(1 << 30);

void BM_CumulativeMoments(benchmark::State& state) {
  // 1/4 closes a period of two; 1/13 walks further before repeating
  const Rational b = state.range(0) == 0 ? Rational(1, 4) : Rational(1, 13);
  for (auto _ : state) benchmark::DoNotOptimize(cumulative_moments(b));
}
BENCHMARK(BM_CumulativeMoments)->Arg(0)->Arg(1);

void BM_ExactDistortion(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const PointSet alpha = build_alpha(n, canonical_split_set(n));
  for (auto _ : state) benchmark::DoNotOptimize(exact_distortion(alpha));
}
BENCHMARK(BM_ExactDistortion)->RangeMultiplier(2)->Range(2, 64);

void BM_LloydStep(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const PointSet alpha = build_alpha(n, canonical_split_set(n));
  for (auto _ : state) benchmark::DoNotOptimize(lloyd_step(alpha));
}
BENCHMARK(BM_LloydStep)->RangeMultiplier(2)->Range(2, 32);

void BM_DpOptimal(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const int level = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(dp_optimal(n, level));
}
BENCHMARK(BM_DpOptimal)->Args({4, 8})->Args({16, 8})->Args({16, 10})->Unit(benchmark::kMillisecond);

void BM_SplitEnumeration(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    std::size_t count = 0;
    for_each_split_set(n, [&](const std::vector<Word>&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_SplitEnumeration)->Arg(12)->Arg(24);

}  // namespace
BENCHMARK_MAIN();
