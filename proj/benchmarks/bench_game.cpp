#include <benchmark/benchmark.h>

#include "chordstat/game.hpp"
#include "chordstat/sampler.hpp"

using namespace chordstat;

static void BM_Play(benchmark::State& state) {
  RngStream rng(5, 0);
  const auto deal = sample_deal_insertion(static_cast<std::size_t>(state.range(0)), rng).deal;
  for (auto _ : state) benchmark::DoNotOptimize(play(deal));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Play)->RangeMultiplier(4)->Range(1 << 8, 1 << 16)->Complexity(benchmark::oN);
