#include "chordstat/combinatorics.hpp"

#include <cmath>
#include <stdexcept>

namespace chordstat {

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("make_rational: zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

BigInt falling_factorial(std::int64_t n, std::int64_t m) {
  if (m < 0) throw std::invalid_argument("falling_factorial: m < 0");
  if (m == 0) return 1;
  if (n >= 0 && m > n) return 0;
  if (n >= 0) {
    // (n)_m = C(n, m) m!
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(m));
    return binomial(n, m) * f;
  }
  BigInt r = 1;
  for (std::int64_t j = 0; j < m; ++j) r *= BigInt(static_cast<long>(n - j));
  return r;
}

BigInt odd_double_factorial(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("odd_double_factorial: n < 0");
  if (n == 0) return 1;
  BigInt r;
  mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(2 * n - 1));
  return r;
}

double FallingFactorialApprox::approx() const { return std::exp(log_approx); }
double FallingFactorialApprox::exact() const { return std::exp(log_exact); }

FallingFactorialApprox fallfact_ratio_approx(std::int64_t n, std::int64_t m) {
  if (n < 1) throw std::invalid_argument("fallfact_ratio_approx: n < 1");
  if (m < 0 || m > n) {
    throw std::invalid_argument("fallfact_ratio_approx: need 0 <= m <= n");
  }
  const double nd = static_cast<double>(n);
  const double md = static_cast<double>(m);
  FallingFactorialApprox out;
  out.log_approx = md * std::log(nd) - md * (md - 1.0) / 2.0 / nd;
  // ln (n)_m - m ln n = sum ln(1 - j/n); log1p keeps the small terms accurate.
  double log_ratio = 0.0;
  for (std::int64_t j = 1; j < m; ++j) log_ratio += std::log1p(-static_cast<double>(j) / nd);
  out.log_exact = md * std::log(nd) + log_ratio;
  out.relative_error = std::abs(std::expm1(out.log_approx - out.log_exact));
  out.error_scale = md * md * md / (nd * nd);
  return out;
}

BigInt sum_identity_single(std::int64_t N, std::int64_t i, std::int64_t j) {
  return binomial(N + 1, i + j + 1);
}

BigInt sum_identity_double(std::int64_t N, std::int64_t i, std::int64_t j,
                           std::int64_t l) {
  return binomial(i + j, i) * binomial(N + 1, i + j + l + 1);
}

BigInt f_xy(std::int64_t x, std::int64_t y) {
  return 6 * binomial(x + y - 1, y) + 3 * binomial(x + y, y + 1) +
         binomial(x + y + 1, y + 2);
}

double to_double(const BigRational& q) { return q.get_d(); }

}  // namespace chordstat
