#include <benchmark/benchmark.h>

#include "chordstat/exact.hpp"

using namespace chordstat;

static void BM_FirstMatchRow(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(exact::a_row(n));
}
BENCHMARK(BM_FirstMatchRow)->RangeMultiplier(4)->Range(16, 1024);

static void BM_MeanBlocks(benchmark::State& state) {
  const auto n = static_cast<std::int64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(exact::mean_B_exact(n, 3));
}
BENCHMARK(BM_MeanBlocks)->RangeMultiplier(4)->Range(16, 1024);
