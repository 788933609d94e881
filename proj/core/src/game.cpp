#include "chordstat/game.hpp"

#include <cassert>
#include <cstdint>

#include "chordstat/sampler.hpp"

namespace chordstat {
namespace {

constexpr std::uint32_t kUnseen = UINT32_MAX;

// Shared driver; Sink receives (flipped..., removed, lucky) for each round.
template <typename Sink>
GameStats run(const Deal& deal, Sink&& sink) {
  const std::uint32_t size = static_cast<std::uint32_t>(deal.size());
  // seen_at[x]: 0-based position of the revealed, not yet removed card x.
  std::vector<std::uint32_t> seen_at(deal.pairs() + 1, kUnseen);
  GameStats stats;
  std::uint32_t next = 0;
  // Pair revealed last round whose partner was revealed before it.
  std::uint32_t pending_a = kUnseen, pending_b = kUnseen;

  auto note_first_match = [&](std::uint32_t pos) {
    if (stats.first_match == 0) stats.first_match = pos + 1;
  };

  while (next < size || pending_a != kUnseen) {
    ++stats.length;
    if (pending_a != kUnseen) {
      sink(stats.length, pending_a, pending_b, deal[pending_a], false);
      pending_a = pending_b = kUnseen;
      continue;
    }
    const std::uint32_t c = next++;
    const Label a = deal[c];
    if (seen_at[a] != kUnseen) {
      note_first_match(c);
      sink(stats.length, c, seen_at[a], a, false);
      seen_at[a] = kUnseen;
      continue;
    }
    // The partner of the last unflipped card has always been seen already.
    assert(next < size);
    const std::uint32_t d = next++;
    const Label b = deal[d];
    if (b == a) {
      note_first_match(d);
      ++stats.lucky;
      sink(stats.length, c, d, a, true);
      continue;
    }
    seen_at[a] = c;
    if (seen_at[b] != kUnseen) {
      note_first_match(d);
      pending_a = seen_at[b];
      pending_b = d;
      seen_at[b] = kUnseen;
    } else {
      seen_at[b] = d;
    }
    sink(stats.length, c, d, std::optional<Label>{}, false);
  }
  return stats;
}

}  // namespace

GameStats play(const Deal& deal) {
  return run(deal, [](std::uint32_t, std::uint32_t, std::uint32_t,
                      std::optional<Label>, bool) {});
}

GameRecord play_with_trace(const Deal& deal) {
  GameRecord record;
  record.stats = run(deal, [&](std::uint32_t round, std::uint32_t p, std::uint32_t q,
                               std::optional<Label> removed, bool lucky) {
    record.trace.push_back(Move{round, {p + 1, q + 1}, removed, lucky});
  });
  return record;
}

std::uint32_t even_block_count(const BlockProfile& profile) {
  std::uint32_t y = 0;
  for (std::size_t i = 2; i < profile.counts.size(); i += 2) y += profile.counts[i];
  return y;
}

bool verify_length_identity(const Deal& deal) {
  const GameStats g = play(deal);
  const std::int64_t n = static_cast<std::int64_t>(deal.pairs());
  const std::int64_t y = even_block_count(blocks(deal));
  return 2 * static_cast<std::int64_t>(g.length) ==
         3 * n + y - 2 * static_cast<std::int64_t>(g.lucky);
}

}  // namespace chordstat
