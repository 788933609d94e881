#include "chordstat/sampler.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "chordstat/detail/fenwick.hpp"

namespace chordstat {
namespace {

void require_pairs(std::size_t n) {
  if (n == 0) throw std::invalid_argument("pair count must be positive");
}

// Gap choices and block bookkeeping shared by the two insertion entry points.
// positions[k-1] receives the gap index chosen for pair k when non-null.
InsertionTrace run_insertion(std::size_t n, RngStream& rng,
                             std::vector<std::uint32_t>* positions) {
  InsertionTrace trace;
  trace.drawn_types.reserve(n);
  trace.good_counts.reserve(n);
  if (positions) positions->reserve(n);

  // Block b (0-based) ends with red card b+1; its weight is its length.
  detail::FenwickTree lengths(n);
  std::uint64_t good = 1;  // the empty row has a single interval, I_1
  for (std::size_t k = 1; k <= n; ++k) {
    const std::uint64_t row = 2 * (k - 1);
    const std::uint64_t gap = rng.uniform(row + 1);
    std::uint32_t type = 0;
    if (gap == row) {
      lengths.add(k - 1, 2);
    } else {
      const std::size_t b = lengths.find(gap);
      type = static_cast<std::uint32_t>(lengths.value(b));
      lengths.add(b, 1);
      lengths.add(k - 1, 1);
      // Growing an even block by one adds one more even-indexed interval.
      if (type % 2 == 0) ++good;
    }
    ++good;
    trace.drawn_types.push_back(type);
    trace.good_counts.push_back(good);
    if (positions) positions->push_back(static_cast<std::uint32_t>(gap));
  }
  return trace;
}

}  // namespace

Deal sample_deal_shuffle(std::size_t n, RngStream& rng) {
  require_pairs(n);
  std::vector<Label> labels(2 * n);
  for (std::size_t i = 0; i < 2 * n; ++i) labels[i] = static_cast<Label>(i / 2 + 1);
  std::shuffle(labels.begin(), labels.end(), rng.engine());
  return Deal(std::move(labels));
}

InsertionSample sample_deal_insertion(std::size_t n, RngStream& rng) {
  require_pairs(n);
  std::vector<std::uint32_t> gaps;
  InsertionTrace trace = run_insertion(n, rng, &gaps);

  // Replay the insertions backwards: an element inserted at index p of the
  // then-current row lands on the p-th slot still free in the final row.
  const std::size_t size = 2 * n;
  detail::FenwickTree free_slots(size);
  for (std::size_t i = 0; i < size; ++i) free_slots.add(i, 1);
  std::vector<Label> labels(size, 0);
  for (std::size_t k = n; k >= 1; --k) {
    const std::size_t red = free_slots.find(free_slots.total() - 1);
    labels[red] = static_cast<Label>(k);
    free_slots.add(red, -1);
    const std::size_t blue = free_slots.find(gaps[k - 1]);
    labels[blue] = static_cast<Label>(k);
    free_slots.add(blue, -1);
  }
  return {Deal(std::move(labels)), std::move(trace)};
}

InsertionTrace sample_insertion_trace(std::size_t n, RngStream& rng) {
  require_pairs(n);
  return run_insertion(n, rng, nullptr);
}

ChordDiagram sample_chord_diagram(std::size_t n, RngStream& rng) {
  require_pairs(n);
  const std::uint32_t points = static_cast<std::uint32_t>(2 * n);
  // Unmatched points kept in a swap-remove pool with a reverse index.
  std::vector<std::uint32_t> pool(points);
  std::iota(pool.begin(), pool.end(), 1u);
  std::vector<std::uint32_t> where(points + 1);
  for (std::uint32_t i = 0; i < points; ++i) where[pool[i]] = i;
  auto remove = [&](std::uint32_t p) {
    const std::uint32_t slot = where[p];
    const std::uint32_t last = pool.back();
    pool[slot] = last;
    where[last] = slot;
    pool.pop_back();
  };

  std::vector<std::uint8_t> matched(points + 1, 0);
  std::vector<Chord> chords;
  chords.reserve(n);
  std::uint32_t smallest = 1;
  for (std::size_t c = 0; c < n; ++c) {
    while (matched[smallest]) ++smallest;
    remove(smallest);
    const std::uint32_t partner = pool[rng.uniform(pool.size())];
    remove(partner);
    matched[smallest] = matched[partner] = 1;
    chords.push_back({smallest, partner});
  }
  return ChordDiagram(std::move(chords));
}

Deal standardize(const Deal& deal) {
  const std::size_t n = deal.pairs();
  std::vector<Label> rename(n + 1, 0);
  std::vector<std::uint8_t> seen(n + 1, 0);
  Label next = 1;
  for (Label x : deal.labels()) {
    if (seen[x]++ == 1) rename[x] = next++;
  }
  std::vector<Label> out(deal.labels().begin(), deal.labels().end());
  for (Label& x : out) x = rename[x];
  return Deal(std::move(out));
}

BlockProfile blocks(const Deal& deal) {
  const std::size_t n = deal.pairs();
  BlockProfile profile;
  profile.lengths.reserve(n);
  profile.counts.assign(n + 2, 0);
  std::vector<std::uint8_t> seen(n + 1, 0);
  std::uint32_t start = 0;
  for (std::uint32_t pos = 0; pos < deal.size(); ++pos) {
    if (seen[deal[pos]]++ == 1) {
      const std::uint32_t len = pos + 1 - start;
      profile.lengths.push_back(len);
      ++profile.counts[len];
      start = pos + 1;
    }
  }
  return profile;
}

std::uint64_t good_interval_count(const BlockProfile& profile) {
  std::uint64_t s = 1 + profile.lengths.size();
  for (std::size_t j = 3; j < profile.counts.size(); ++j) {
    s += static_cast<std::uint64_t>(profile.counts[j]) * ((j - 1) / 2);
  }
  return s;
}

Deal deal_from_chords(const ChordDiagram& diagram) {
  const std::size_t n = diagram.chords();
  std::vector<Chord> by_right(diagram.pairs().begin(), diagram.pairs().end());
  std::sort(by_right.begin(), by_right.end(),
            [](const Chord& a, const Chord& b) { return a.right < b.right; });
  std::vector<Label> labels(2 * n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    labels[by_right[k].left - 1] = static_cast<Label>(k + 1);
    labels[by_right[k].right - 1] = static_cast<Label>(k + 1);
  }
  return Deal(std::move(labels));
}

ChordDiagram chords_from_deal(const Deal& deal) {
  const std::size_t n = deal.pairs();
  std::vector<std::uint32_t> first(n + 1, 0);
  std::vector<Chord> chords;
  chords.reserve(n);
  for (std::uint32_t pos = 0; pos < deal.size(); ++pos) {
    const Label x = deal[pos];
    if (first[x] == 0) {
      first[x] = pos + 1;
    } else {
      chords.push_back({first[x], pos + 1});
    }
  }
  return ChordDiagram(std::move(chords));
}

StandardDealStream::StandardDealStream(std::size_t n, std::size_t cap)
    : n_(n), current_(std::vector<Label>{1, 1}) {
  require_pairs(n);
  if (n > cap) {
    throw std::length_error("standard deal enumeration capped at n = " +
                            std::to_string(cap));
  }
  choices_.assign(n, 0);
}

bool StandardDealStream::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    rebuild();
    return true;
  }
  // Odometer on the gap choices, last pair varying fastest.
  for (std::size_t k = n_; k-- > 0;) {
    const std::uint32_t limit = static_cast<std::uint32_t>(2 * k);  // gaps 0..2k
    if (choices_[k] < limit) {
      ++choices_[k];
      std::fill(choices_.begin() + static_cast<std::ptrdiff_t>(k) + 1, choices_.end(), 0u);
      rebuild();
      return true;
    }
  }
  done_ = true;
  return false;
}

void StandardDealStream::rebuild() {
  std::vector<Label> row;
  row.reserve(2 * n_);
  for (std::size_t k = 0; k < n_; ++k) {
    const Label label = static_cast<Label>(k + 1);
    row.insert(row.begin() + choices_[k], label);
    row.push_back(label);
  }
  current_ = Deal(std::move(row));
}

}  // namespace chordstat
