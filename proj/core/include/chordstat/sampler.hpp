#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "chordstat/deal.hpp"
#include "chordstat/rng.hpp"

namespace chordstat {

/// Record of a sequential-insertion run.
///
/// Pair k is added by putting its blue card into one of the 2k-1 gaps of the
/// current row and appending its red card. Every gap except the final one
/// belongs to the block of the card immediately to its right, so a block of
/// length i owns i gaps; the final gap has type 0.
struct InsertionTrace {
  /// drawn_types[k-1]: length of the block that received the k-th blue card,
  /// or 0 for the final gap. drawn_types[0] is always 0.
  std::vector<std::uint32_t> drawn_types;
  /// good_counts[k-1]: number of good intervals once k pairs are placed.
  std::vector<std::uint64_t> good_counts;
};

struct InsertionSample {
  Deal deal;
  InsertionTrace trace;
};

/// Uniform random deal: the multiset {1,1,...,n,n} shuffled.
/// Throws std::invalid_argument for n == 0.
Deal sample_deal_shuffle(std::size_t n, RngStream& rng);

/// Uniform random standard deal built by sequential insertion, with its trace.
/// Runs in O(n log n). Throws std::invalid_argument for n == 0.
InsertionSample sample_deal_insertion(std::size_t n, RngStream& rng);

/// Same random process as sample_deal_insertion (same stream consumption,
/// same trace) without materializing the deal.
InsertionTrace sample_insertion_trace(std::size_t n, RngStream& rng);

/// Uniform perfect matching on 1..2n: the smallest unmatched point is paired
/// with a uniformly chosen unmatched partner. Throws for n == 0.
ChordDiagram sample_chord_diagram(std::size_t n, RngStream& rng);

/// Relabels pairs so red cards appear in increasing label order. Idempotent.
Deal standardize(const Deal& deal);

/// Block lengths and block-length counts.
BlockProfile blocks(const Deal& deal);

/// Number of good intervals of a row with this block profile:
/// 1 + n + sum_j B_j floor((j-1)/2).
std::uint64_t good_interval_count(const BlockProfile& profile);

/// Chord endpoints become the two occurrences of one label; labels are
/// assigned in order of right endpoints, so the result is standard.
Deal deal_from_chords(const ChordDiagram& diagram);

/// Inverse of deal_from_chords on standard deals; on any deal, returns the
/// diagram of its standardization.
ChordDiagram chords_from_deal(const Deal& deal);

inline constexpr std::size_t kDefaultEnumerationCap = 8;

/// Enumerates every standard deal of size n exactly once, (2n-1)!! in total.
///
/// Deals are produced by inserting pair k's blue card into each of the 2k-1
/// gaps (red card appended); the order is lexicographic in the vector of gap
/// choices (g_1, ..., g_n), g_k in [0, 2k-2].
///
///   StandardDealStream stream(4);
///   while (stream.next()) use(stream.current());
class StandardDealStream {
 public:
  /// Throws std::invalid_argument for n == 0 and std::length_error for n > cap.
  explicit StandardDealStream(std::size_t n, std::size_t cap = kDefaultEnumerationCap);

  /// Advances to the next deal; false once the enumeration is exhausted.
  bool next();
  const Deal& current() const { return current_; }
  const std::vector<std::uint32_t>& choices() const { return choices_; }

 private:
  void rebuild();

  std::size_t n_;
  bool started_ = false;
  bool done_ = false;
  std::vector<std::uint32_t> choices_;
  Deal current_;
};

}  // namespace chordstat
