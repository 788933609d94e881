#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "chordstat/combinatorics.hpp"
#include "chordstat/detail/fenwick.hpp"
#include "chordstat/rng.hpp"

namespace chordstat::urn {

// Urn with one immigration ball (type 0) and balls of types 1, 2, ...
// A type-i ball is drawn with weight i, the immigration ball with weight 1.
// Drawing type i >= 1 replaces it by one ball of type 1 and one of type i+1;
// drawing type 0 returns it together with a new type-2 ball.
struct UrnState {
  std::vector<std::uint64_t> counts{1};  // counts[0] == 1 always
  std::uint64_t draws = 0;

  std::uint64_t count(std::size_t type) const { return type < counts.size() ? counts[type] : 0; }
  // Total draw weight, 2 * draws + 1.
  std::uint64_t total_weight() const { return 2 * draws + 1; }
};

struct StepResult {
  UrnState state;
  std::uint32_t drawn = 0;
};

// One draw by linear scan over the types. O(types) per call; the Urn class
// below is the fast path.
StepResult urn_step(UrnState state, RngStream& rng);

// Incremental urn with O(log types) draws.
class Urn {
 public:
  Urn();

  // Draws one ball from the urn and applies the replacement rule.
  std::uint32_t step(RngStream& rng);
  // Applies the replacement rule for a ball of the given type without
  // drawing. Throws std::invalid_argument if no such ball is present.
  void apply(std::uint32_t type);

  const UrnState& state() const { return state_; }

 private:
  void bump(std::size_t type, std::int64_t delta);

  UrnState state_;
  detail::FenwickTree weights_;  // index i holds i * counts[i]
};

// n draws from the initial state {0: 1}.
UrnState urn_simulate(std::size_t n, RngStream& rng);

// Truncated replacement matrix in activity units: column i is the change in
// per-type draw weight caused by drawing type i, with all types >= M merged.
struct ReplacementMatrix {
  std::size_t truncation = 0;  // M
  std::size_t dim = 0;         // M + 1, or M after removing type 0
  std::vector<std::int64_t> entries;  // row-major dim x dim

  std::int64_t at(std::size_t row, std::size_t col) const { return entries[row * dim + col]; }
  // Drops the type-0 row and column.
  ReplacementMatrix without_immigration() const;
};

// Throws std::invalid_argument for M < 2.
ReplacementMatrix replacement_matrix(std::size_t M);

// Coefficients of det(A - x I), lowest degree first, computed exactly by the
// Faddeev-LeVerrier recursion.
std::vector<BigInt> char_poly(const ReplacementMatrix& a);
std::vector<BigInt> char_poly(std::size_t M);

// (-1)^{M-1} x (x - 2) (x + 1) (x + 2) ... (x + M - 1), the characteristic
// polynomial of replacement_matrix(M). Lowest degree first.
std::vector<BigInt> closed_form_char_poly(std::size_t M);

// (-1)^{M-1} x (x - 2) x (x + 1) ... (x + M - 1), with the product starting
// at j = 0. It has degree M + 2, one more than the matrix order, so it never
// equals char_poly(M); it exists so that form can be checked directly.
std::vector<BigInt> char_poly_product_from_zero(std::size_t M);

// Evaluates a coefficient vector (lowest degree first) at an integer.
BigInt evaluate(const std::vector<BigInt>& poly, std::int64_t x);

// Eigenvector of replacement_matrix(M) for eigenvalue 2, normalized to sum 1:
// v_0 = 0, v_j = 2/((j+1)(j+2)) for 1 <= j < M, v_M = 2/(M+1).
std::vector<BigRational> top_eigenvector(std::size_t M);

}  // namespace chordstat::urn
