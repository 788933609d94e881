#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace chordstat {

using Label = std::uint32_t;

/// A deal of n pairs: 2n card slots in which every label 1..n occurs exactly
/// twice. Colors are derived, never stored: the first occurrence of a label is
/// its blue card and the second its red card.
///
/// Positions are 0-based in the API; JSON and traces use 1-based positions.
class Deal {
 public:
  /// Throws std::invalid_argument if the sequence is empty, has odd length,
  /// or some label in 1..n does not occur exactly twice.
  explicit Deal(std::vector<Label> labels);

  std::size_t pairs() const { return labels_.size() / 2; }
  std::size_t size() const { return labels_.size(); }
  std::span<const Label> labels() const { return labels_; }
  Label operator[](std::size_t pos) const { return labels_[pos]; }

  /// True when red cards appear in increasing label order.
  bool is_standard() const;

  friend bool operator==(const Deal&, const Deal&) = default;

 private:
  std::vector<Label> labels_;
};

struct Chord {
  std::uint32_t left = 0;   ///< 1-based point, left < right
  std::uint32_t right = 0;

  friend auto operator<=>(const Chord&, const Chord&) = default;
};

/// Perfect matching on points 1..2n, stored sorted by left endpoint.
class ChordDiagram {
 public:
  /// Throws std::invalid_argument unless the chords partition {1, ..., 2n}
  /// with left < right in every chord.
  explicit ChordDiagram(std::vector<Chord> chords);

  std::size_t chords() const { return chords_.size(); }
  std::span<const Chord> pairs() const { return chords_; }

  friend bool operator==(const ChordDiagram&, const ChordDiagram&) = default;

 private:
  std::vector<Chord> chords_;
};

/// Block decomposition of a deal. The k-th block ends with the k-th red card.
struct BlockProfile {
  /// D_{n,1}, ..., D_{n,n} in deal order.
  std::vector<std::uint32_t> lengths;
  /// counts[i] = B_{n,i}, the number of blocks of length i; size n + 2.
  std::vector<std::uint32_t> counts;

  std::uint32_t count(std::size_t i) const {
    return i < counts.size() ? counts[i] : 0;
  }
};

/// Outcome of optimal perfect-memory play.
struct GameStats {
  std::uint32_t length = 0;       ///< G_n, rounds
  std::uint32_t lucky = 0;        ///< L_n
  std::uint32_t first_match = 0;  ///< D_{n,1}, 1-based position of the first red card

  friend bool operator==(const GameStats&, const GameStats&) = default;
};

}  // namespace chordstat
