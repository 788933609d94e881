#include <benchmark/benchmark.h>

#include "chordstat/urn.hpp"

using namespace chordstat;

static void BM_UrnSimulate(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::uint64_t t = 0;
  for (auto _ : state) {
    RngStream rng(6, t++);
    benchmark::DoNotOptimize(urn::urn_simulate(n, rng));
  }
}
BENCHMARK(BM_UrnSimulate)->RangeMultiplier(10)->Range(1000, 1000000);

static void BM_CharPoly(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(urn::char_poly(m));
}
BENCHMARK(BM_CharPoly)->DenseRange(10, 30, 10);
