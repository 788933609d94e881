#include "chordstat/rng.hpp"

#include <cassert>

namespace chordstat {

RngStream::RngStream(std::uint64_t seed, std::uint64_t index)
    : seed_(seed), index_(index) {
  // seed_seq mixes all words, so neighbouring indices give unrelated streams.
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32),
                    0x63686f72u};
  engine_.seed(seq);
}

std::uint64_t RngStream::uniform(std::uint64_t bound) {
  assert(bound > 0);
  return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(engine_);
}

double RngStream::uniform01() {
  return std::uniform_real_distribution<double>(0.0, 1.0)(engine_);
}

}  // namespace chordstat
