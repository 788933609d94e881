#include "chordstat/deal.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace chordstat {

Deal::Deal(std::vector<Label> labels) : labels_(std::move(labels)) {
  if (labels_.empty() || labels_.size() % 2 != 0) {
    throw std::invalid_argument("deal must have a positive even number of cards");
  }
  const std::size_t n = labels_.size() / 2;
  std::vector<std::uint8_t> seen(n + 1, 0);
  for (Label x : labels_) {
    if (x < 1 || x > n) {
      throw std::invalid_argument("deal label " + std::to_string(x) +
                                  " outside 1.." + std::to_string(n));
    }
    if (++seen[x] > 2) {
      throw std::invalid_argument("deal label " + std::to_string(x) +
                                  " occurs more than twice");
    }
  }
}

bool Deal::is_standard() const {
  std::vector<std::uint8_t> seen(pairs() + 1, 0);
  Label next_red = 1;
  for (Label x : labels_) {
    if (seen[x]++ == 1) {
      if (x != next_red) return false;
      ++next_red;
    }
  }
  return true;
}

ChordDiagram::ChordDiagram(std::vector<Chord> chords) : chords_(std::move(chords)) {
  if (chords_.empty()) throw std::invalid_argument("chord diagram is empty");
  const std::size_t points = 2 * chords_.size();
  std::vector<std::uint8_t> used(points + 1, 0);
  for (const Chord& c : chords_) {
    if (c.left < 1 || c.right > points || c.left >= c.right) {
      throw std::invalid_argument("chord endpoints must satisfy 1 <= left < right <= 2n");
    }
    if (used[c.left]++ || used[c.right]++) {
      throw std::invalid_argument("chord endpoints overlap");
    }
  }
  std::sort(chords_.begin(), chords_.end());
}

}  // namespace chordstat
