#include <benchmark/benchmark.h>

#include "gsheaf/flag.hpp"
#include "gsheaf/lie_algebra.hpp"
#include "gsheaf/scenarios.hpp"

using namespace gsheaf;

static void BM_MuBracket(benchmark::State& state) {
  const auto g = lie::sl(static_cast<std::size_t>(state.range(0)));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(filt::mu_bracket(g, filt::random_flag(g, seed++)));
}
BENCHMARK(BM_MuBracket)->Arg(2)->Arg(3);

static void BM_MuTensor(benchmark::State& state) {
  const auto g = lie::sl(2);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(filt::mu_tensor(g, filt::random_flag(g, seed++)));
}
BENCHMARK(BM_MuTensor);

static void BM_Killing(benchmark::State& state) {
  const auto g = lie::sl(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(determinant(lie::killing_matrix(g)));
}
BENCHMARK(BM_Killing)->Arg(2)->Arg(3)->Arg(4);

static void BM_Example2Grid(benchmark::State& state) {
  for (auto _ : state) {
    for (long c = -2; c <= 5; ++c) {
      for (long s = -7; s <= 5; ++s) benchmark::DoNotOptimize(scen::example2_report(c, s));
    }
  }
}
BENCHMARK(BM_Example2Grid)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
