#include "chordstat/exact.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace chordstat::exact {
namespace {

BigInt pow2(std::int64_t e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return r;
}

void next_a_row(const std::vector<BigInt>& prev, std::size_t n, std::vector<BigInt>& out) {
  out.assign(n + 2, 0);
  const std::int64_t nn = static_cast<std::int64_t>(n);
  for (std::int64_t j = 2; j <= nn + 1; ++j) {
    const std::size_t ju = static_cast<std::size_t>(j);
    BigInt v = 0;
    if (ju < prev.size()) v += BigInt(static_cast<long>(2 * nn - 1 - j)) * prev[ju];
    if (ju - 1 < prev.size()) v += BigInt(static_cast<long>(j - 1)) * prev[ju - 1];
    out[ju] = std::move(v);
  }
}

void require_n(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
}

}  // namespace

ATable::ATable(std::size_t n_max) {
  if (n_max == 0) throw std::invalid_argument("a_table: n_max must be positive");
  if (n_max > kATableCap) {
    throw std::length_error("a_table: full table capped at n = " +
                            std::to_string(kATableCap) + "; use a_row");
  }
  rows_.resize(n_max + 1);
  rows_[1] = {0, 0, 1};
  for (std::size_t n = 2; n <= n_max; ++n) next_a_row(rows_[n - 1], n, rows_[n]);
}

BigInt ATable::operator()(std::size_t n, std::int64_t j) const {
  const auto& r = rows_.at(n);
  if (j < 2 || j >= static_cast<std::int64_t>(r.size())) return 0;
  return r[static_cast<std::size_t>(j)];
}

BigInt ATable::row_sum(std::size_t n) const {
  BigInt s = 0;
  for (const BigInt& v : rows_.at(n)) s += v;
  return s;
}

ATable a_table(std::size_t n_max) { return ATable(n_max); }

std::vector<BigInt> a_row(std::size_t n) {
  if (n == 0) throw std::invalid_argument("a_row: n must be positive");
  if (n > kARowCap) {
    throw std::length_error("a_row: capped at n = " + std::to_string(kARowCap));
  }
  std::vector<BigInt> row{0, 0, 1}, next;
  for (std::size_t m = 2; m <= n; ++m) {
    next_a_row(row, m, next);
    row.swap(next);
  }
  return row;
}

BigRational p_first_match(std::int64_t n, std::int64_t t) {
  require_n(n);
  if (t < 2 || t > n + 1) return 0;
  const BigInt num = BigInt(static_cast<long>(t - 1)) * pow2(t - 1) * falling_factorial(n, t - 1);
  const BigInt den = BigInt(static_cast<long>(2 * n - t + 1)) * falling_factorial(2 * n, t - 1);
  return make_rational(num, den);
}

BigRational joint_first_k(std::int64_t n, std::span<const std::int64_t> lengths) {
  require_n(n);
  const std::int64_t k = static_cast<std::int64_t>(lengths.size());
  if (k == 0) return 1;
  if (k > n) return 0;
  std::int64_t prefix = 0;
  BigInt placements = 1;  // choices for the blue partner of each red card
  for (std::int64_t j = 1; j <= k; ++j) {
    const std::int64_t tj = lengths[static_cast<std::size_t>(j - 1)];
    if (tj < 1) return 0;
    prefix += tj;
    const std::int64_t slots = prefix - 2 * j + 1;
    if (slots < 1) return 0;
    placements *= BigInt(static_cast<long>(slots));
  }
  const std::int64_t t = prefix;
  if (t > 2 * n || t - 2 * k > n - k) return 0;
  const BigInt num = pow2(t - k) * falling_factorial(n, t - k) * placements;
  const BigInt den = falling_factorial(2 * n, t - k) * falling_factorial(2 * n - t + k, k);
  return make_rational(num, den);
}

BigRational mean_D1(std::int64_t n) {
  require_n(n);
  BigInt four_n;
  mpz_ui_pow_ui(four_n.get_mpz_t(), 4, static_cast<unsigned long>(n));
  return make_rational(four_n, binomial(2 * n, n));
}

BigRational factorial_moment_D1(std::int64_t n, std::int64_t r) {
  require_n(n);
  if (r < 0) throw std::invalid_argument("factorial_moment_D1: r < 0");
  // moments[q] = E[(D_{m,1})_q] for the current m; D_{1,1} = 2.
  std::vector<BigRational> moments(static_cast<std::size_t>(r) + 1);
  for (std::int64_t q = 0; q <= r; ++q) {
    moments[static_cast<std::size_t>(q)] = BigRational(falling_factorial(2, q));
  }
  for (std::int64_t m = 2; m <= n; ++m) {
    const BigInt denom(static_cast<long>(2 * m - 1));
    for (std::int64_t q = r; q >= 1; --q) {
      const auto qi = static_cast<std::size_t>(q);
      BigRational next = moments[qi] * make_rational(BigInt(static_cast<long>(2 * m - 1 + q)), denom);
      next += moments[qi - 1] * make_rational(BigInt(static_cast<long>(q * (q - 1))), denom);
      moments[qi] = std::move(next);
    }
  }
  return moments[static_cast<std::size_t>(r)];
}

BigRational factorial_moment_D1_closed(std::int64_t n, std::int64_t r) {
  require_n(n);
  switch (r) {
    case 0:
      return 1;
    case 1:
      return mean_D1(n);
    case 2: {
      BigRational tail = mean_D1(n + 1) * make_rational(BigInt(static_cast<long>(2 * n + 1)),
                                                        BigInt(static_cast<long>(n + 1)));
      BigRational out = BigRational(BigInt(static_cast<long>(2 * (2 * n + 1)))) - tail;
      out.canonicalize();
      return out;
    }
    case 3: {
      // sqrt(pi) (n+2) n! / Gamma(n+1/2) = (n+2) n! 2^n / (2n-1)!! = (n+2) E[D_{n,1}]
      BigRational out = mean_D1(n) * BigInt(static_cast<long>(n + 2)) -
                        BigRational(BigInt(static_cast<long>(4 * n + 2)));
      out *= 6;
      out.canonicalize();
      return out;
    }
    default:
      throw std::invalid_argument("factorial_moment_D1_closed: r must be <= 3");
  }
}

BigRational var_D1(std::int64_t n) {
  const BigRational mu = mean_D1(n);
  BigRational v = factorial_moment_D1_closed(n, 2) + mu - mu * mu;
  v.canonicalize();
  return v;
}

double mean_D1_approx(std::int64_t n) {
  require_n(n);
  const double nd = static_cast<double>(n);
  // 4^n / C(2n, n) = exp(n ln 4 - lgamma(2n+1) + 2 lgamma(n+1))
  return std::exp(nd * std::log(4.0) - std::lgamma(2.0 * nd + 1.0) + 2.0 * std::lgamma(nd + 1.0));
}

double var_D1_approx(std::int64_t n) {
  const double nd = static_cast<double>(n);
  const double mu = mean_D1_approx(n);
  const double second = 2.0 * (2.0 * nd + 1.0) -
                        (2.0 * nd + 1.0) / (nd + 1.0) * mean_D1_approx(n + 1);
  return second + mu - mu * mu;
}

BigRational mean_B_exact(std::int64_t n, std::int64_t i) {
  require_n(n);
  if (i < 1 || i > n + 1) return 0;
  const BigInt two_n_i = falling_factorial(2 * n, i);
  BigRational total = p_first_match(n, i);
  const BigInt pairs(static_cast<long>(n * (n - 1)));
  if (pairs == 0) return total;

  BigRational e1 = make_rational(pow2(i + 2) * falling_factorial(n - 2, i - 1),
                                 falling_factorial(i + 2, 3) * two_n_i);
  total += pairs * e1;
  if (i >= 2) {
    BigRational e2 = make_rational(pow2(i) * falling_factorial(n - 2, i - 2),
                                   BigInt(static_cast<long>(i)) * two_n_i);
    total += pairs * e2;
  }
  total.canonicalize();
  return total;
}

double mean_B_asymptotic(std::int64_t n, std::int64_t i) {
  const double id = static_cast<double>(i);
  return 4.0 * static_cast<double>(n) / (id * (id + 1.0) * (id + 2.0));
}

double upper_bound_B(std::int64_t n, std::int64_t i) {
  return to_double(p_first_match(n, i)) + std::exp(0.5) * mean_B_asymptotic(n, i);
}

}  // namespace chordstat::exact
