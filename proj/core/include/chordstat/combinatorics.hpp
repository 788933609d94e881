#pragma once

#include <cstdint>

#include <gmpxx.h>

namespace chordstat {

/// Arbitrary-precision integer used by every exact computation.
using BigInt = mpz_class;

/// Arbitrary-precision rational. Values produced by this library are always
/// canonical: positive denominator, numerator and denominator coprime.
using BigRational = mpq_class;

/// Builds a canonical rational num/den. Throws std::domain_error on den == 0.
BigRational make_rational(const BigInt& num, const BigInt& den);

/// C(n, k). Zero whenever k < 0, k > n or n < 0, so that sums may run over
/// any index range without guarding the summand.
BigInt binomial(std::int64_t n, std::int64_t k);

/// (n)_m = n (n-1) ... (n-m+1); 1 when m == 0. n may be negative.
/// Throws std::invalid_argument for m < 0.
BigInt falling_factorial(std::int64_t n, std::int64_t m);

/// (2n-1)!! = 1 * 3 * ... * (2n-1); 1 when n == 0.
BigInt odd_double_factorial(std::int64_t n);

/// Lower-order approximation (n)_m ~ n^m exp(-C(m,2)/n), valid for m = o(n^{2/3}).
///
/// Everything is reported on the log scale because n^m overflows a double long
/// before the approximation stops being interesting.
struct FallingFactorialApprox {
  double log_approx = 0.0;      ///< m ln n - C(m,2)/n
  double log_exact = 0.0;       ///< sum_{j<m} ln(n-j)
  double relative_error = 0.0;  ///< |approx / exact - 1|
  double error_scale = 0.0;     ///< m^3 / n^2, the order of the relative error

  double approx() const;
  double exact() const;
};

/// Throws std::invalid_argument unless 0 <= m <= n and n >= 1.
FallingFactorialApprox fallfact_ratio_approx(std::int64_t n, std::int64_t m);

/// Closed form of sum_k C(N-k, i) C(k, j) = C(N+1, i+j+1).
BigInt sum_identity_single(std::int64_t N, std::int64_t i, std::int64_t j);

/// Closed form of sum_k C(k, l) C(N-k, i) C(N-k-i, j) = C(i+j, i) C(N+1, i+j+l+1).
BigInt sum_identity_double(std::int64_t N, std::int64_t i, std::int64_t j,
                           std::int64_t l);

/// f_xy = 6 C(x+y-1, y) + 3 C(x+y, y+1) + C(x+y+1, y+2).
///
/// For x, y not both zero, f_xy + f_yx = (x+y+4)! / ((x+2)! (y+2)!).
/// At x = y = 0 the first binomial has a negative top argument and the
/// identity does not hold under either the zero or the generalized
/// convention for C(-1, 0).
BigInt f_xy(std::int64_t x, std::int64_t y);

/// Converts an exact rational to the nearest double (via mpq_get_d, truncating
/// toward zero; adequate for reporting).
double to_double(const BigRational& q);

}  // namespace chordstat
