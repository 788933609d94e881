#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "chordstat/deal.hpp"

namespace chordstat {

/// One round of play. Positions are 1-based.
struct Move {
  std::uint32_t round = 0;
  std::vector<std::uint32_t> flipped;
  std::optional<Label> removed;
  bool lucky = false;

  friend bool operator==(const Move&, const Move&) = default;
};

struct GameRecord {
  GameStats stats;
  std::vector<Move> trace;
};

/// Plays the perfect-memory strategy, flipping unseen cards left to right.
///
/// Before round t, a pair whose second card was revealed in round t-1 and
/// whose first card was revealed earlier is removed; that removal is a full
/// round. Otherwise the first unflipped card is turned; if its partner is
/// known both are removed, else the next unflipped card is turned too. A
/// round in which two adjacent, never-flipped partners are turned together
/// is lucky.
GameStats play(const Deal& deal);

/// As play(), also returning the per-round trace.
GameRecord play_with_trace(const Deal& deal);

/// Y_n: number of blocks of even length.
std::uint32_t even_block_count(const BlockProfile& profile);

/// Checks 2 G_n = 3n + Y_n - 2 L_n in exact integer arithmetic.
bool verify_length_identity(const Deal& deal);

}  // namespace chordstat
