#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace chordstat::detail {

// Binary indexed tree over nonnegative weights with prefix-sum search.
class FenwickTree {
 public:
  explicit FenwickTree(std::size_t size = 0) : values_(size, 0), tree_(size + 1, 0) {}

  std::size_t size() const { return values_.size(); }
  std::uint64_t total() const { return total_; }
  std::uint64_t value(std::size_t i) const { return values_[i]; }

  // Grows the index range, keeping existing weights.
  void resize(std::size_t size) {
    if (size <= values_.size()) return;
    values_.resize(size, 0);
    tree_.assign(size + 1, 0);
    for (std::size_t i = 0; i < size; ++i) {
      std::size_t k = i + 1;
      tree_[k] += values_[i];
      std::size_t parent = k + (k & (~k + 1));
      if (parent <= size) tree_[parent] += tree_[k];
    }
  }

  void add(std::size_t i, std::int64_t delta) {
    assert(i < values_.size());
    values_[i] = static_cast<std::uint64_t>(static_cast<std::int64_t>(values_[i]) + delta);
    total_ = static_cast<std::uint64_t>(static_cast<std::int64_t>(total_) + delta);
    for (std::size_t k = i + 1; k < tree_.size(); k += k & (~k + 1)) {
      tree_[k] = static_cast<std::uint64_t>(static_cast<std::int64_t>(tree_[k]) + delta);
    }
  }

  // Sum of weights at indices [0, count).
  std::uint64_t prefix(std::size_t count) const {
    std::uint64_t s = 0;
    for (std::size_t k = count; k > 0; k -= k & (~k + 1)) s += tree_[k];
    return s;
  }

  // Smallest index i with prefix(i + 1) > target. Requires target < total().
  std::size_t find(std::uint64_t target) const {
    assert(target < total_);
    std::size_t pos = 0;
    const std::size_t n = values_.size();
    for (std::size_t step = std::bit_floor(n); step > 0; step >>= 1) {
      const std::size_t next = pos + step;
      if (next <= n && tree_[next] <= target) {
        pos = next;
        target -= tree_[next];
      }
    }
    return pos;
  }

 private:
  std::vector<std::uint64_t> values_;
  std::vector<std::uint64_t> tree_;
  std::uint64_t total_ = 0;
};

}  // namespace chordstat::detail
