#pragma once

#include <cstdint>
#include <random>

namespace chordstat {

/// Random stream addressed by (seed, index). The pair fully determines the
/// sample path, so trial t of a run always sees the same numbers no matter
/// which thread executes it.
class RngStream {
 public:
  using engine_type = std::mt19937_64;

  RngStream(std::uint64_t seed, std::uint64_t index);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t index() const { return index_; }

  engine_type& engine() { return engine_; }

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t uniform(std::uint64_t bound);

  /// Uniform double in [0, 1).
  double uniform01();

 private:
  std::uint64_t seed_;
  std::uint64_t index_;
  engine_type engine_;
};

}  // namespace chordstat
