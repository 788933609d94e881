#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "chordstat/combinatorics.hpp"

namespace chordstat::exact {

/// Largest n_max for which a_table() keeps every row; a_row() goes further.
inline constexpr std::size_t kATableCap = 500;
inline constexpr std::size_t kARowCap = 2000;

/// a(n, j): number of standard deals of size n whose first red card sits at
/// position j. Built from a(n,j) = (2n-1-j) a(n-1,j) + (j-1) a(n-1,j-1),
/// a(1,2) = 1. Rows are immutable once built and may be shared across threads.
class ATable {
 public:
  /// Throws std::invalid_argument for n_max == 0 and std::length_error above
  /// kATableCap.
  explicit ATable(std::size_t n_max);

  std::size_t max_n() const { return rows_.size() - 1; }

  /// a(n, j); zero outside 2 <= j <= n+1. Requires 1 <= n <= max_n().
  BigInt operator()(std::size_t n, std::int64_t j) const;

  /// Row n as a vector indexed by j = 0..n+1.
  const std::vector<BigInt>& row(std::size_t n) const { return rows_.at(n); }

  /// A_n(1) = sum_j a(n, j).
  BigInt row_sum(std::size_t n) const;

 private:
  std::vector<std::vector<BigInt>> rows_;
};

ATable a_table(std::size_t n_max);

/// Single row a(n, .) indexed by j = 0..n+1, computed with O(n) live rows.
/// Throws std::length_error above kARowCap.
std::vector<BigInt> a_row(std::size_t n);

/// P(D_{n,1} = t) = ((t-1)/(2n-t+1)) 2^{t-1} (n)_{t-1} / (2n)_{t-1};
/// zero unless 2 <= t <= n+1.
BigRational p_first_match(std::int64_t n, std::int64_t t);

/// P(D_{n,1} = t_1, ..., D_{n,k} = t_k), with t = t_1 + ... + t_k:
///   2^{t-k} (n)_{t-k} / (2n)_{t-k} * prod_j (t_1+...+t_j - 2j + 1) / (2n-t+k)_k.
/// Zero for infeasible vectors.
BigRational joint_first_k(std::int64_t n, std::span<const std::int64_t> lengths);

/// E[D_{n,1}] = 4^n / C(2n, n).
BigRational mean_D1(std::int64_t n);

/// E[(D_{n,1})_r] from the moment recurrence
///   E[(D_n)_r] = ((2n-1+r)/(2n-1)) E[(D_{n-1})_r] + (r(r-1)/(2n-1)) E[(D_{n-1})_{r-1}]
/// started at D_{1,1} = 2.
BigRational factorial_moment_D1(std::int64_t n, std::int64_t r);

/// Closed forms of E[(D_{n,1})_r] for r <= 3. With mu = E[D_{n,1}]:
///   r = 2: 2(2n+1) - ((2n+1)/(n+1)) 4^{n+1} / C(2n+2, n+1)
///   r = 3: 6((n+2) mu - 4n - 2)
/// Gamma(n+1/2) is carried as sqrt(pi)(2n-1)!!/2^n so every value is rational.
/// Throws std::invalid_argument for r > 3.
BigRational factorial_moment_D1_closed(std::int64_t n, std::int64_t r);

/// var(D_{n,1}) = E[(D)_2] + E[D] - E[D]^2, exact.
BigRational var_D1(std::int64_t n);

/// Floating-point fast path (log-gamma) for E[D_{n,1}] and var(D_{n,1}).
double mean_D1_approx(std::int64_t n);
double var_D1_approx(std::int64_t n);

/// E[B_{n,i}] = E[xi_i] + n(n-1)(E_1 + E_2), where xi_i indicates a first
/// block of length i and
///   E_1 = 2^{i+2}/(i+2)_3 * (n-2)_{i-1} / (2n)_i,
///   E_2 = 2^i / i * (n-2)_{i-2} / (2n)_i   (only for i >= 2).
/// Zero outside 1 <= i <= n+1.
BigRational mean_B_exact(std::int64_t n, std::int64_t i);

/// Leading term 4n / (i+2)_3.
double mean_B_asymptotic(std::int64_t n, std::int64_t i);

/// Upper bound E[xi_i] + 4 e^{1/2} n / (i+2)_3, valid for 1 <= i <= n+1.
double upper_bound_B(std::int64_t n, std::int64_t i);

}  // namespace chordstat::exact
