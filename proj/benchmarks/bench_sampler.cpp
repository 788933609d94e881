#include <benchmark/benchmark.h>

#include "chordstat/sampler.hpp"

using namespace chordstat;

static void BM_InsertionDeal(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::uint64_t t = 0;
  for (auto _ : state) {
    RngStream rng(1, t++);
    benchmark::DoNotOptimize(sample_deal_insertion(n, rng));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_InsertionDeal)->RangeMultiplier(4)->Range(1 << 8, 1 << 16)->Complexity();

static void BM_InsertionTrace(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::uint64_t t = 0;
  for (auto _ : state) {
    RngStream rng(2, t++);
    benchmark::DoNotOptimize(sample_insertion_trace(n, rng));
  }
}
BENCHMARK(BM_InsertionTrace)->RangeMultiplier(4)->Range(1 << 8, 1 << 16);

static void BM_ShuffleDeal(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::uint64_t t = 0;
  for (auto _ : state) {
    RngStream rng(3, t++);
    benchmark::DoNotOptimize(sample_deal_shuffle(n, rng));
  }
}
BENCHMARK(BM_ShuffleDeal)->RangeMultiplier(4)->Range(1 << 8, 1 << 16);

static void BM_Blocks(benchmark::State& state) {
  RngStream rng(4, 0);
  const auto deal = sample_deal_insertion(static_cast<std::size_t>(state.range(0)), rng).deal;
  for (auto _ : state) benchmark::DoNotOptimize(blocks(deal));
}
BENCHMARK(BM_Blocks)->Range(1 << 10, 1 << 16);

BENCHMARK_MAIN();
