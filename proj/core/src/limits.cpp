#include "chordstat/limits.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "chordstat/combinatorics.hpp"

namespace chordstat::limits {
namespace {

const double kLn2 = std::numbers::ln2;

// (x)_m as a double, for small m.
double fall(double x, int m) {
  double r = 1.0;
  for (int t = 0; t < m; ++t) r *= x - t;
  return r;
}

void require_index(std::int64_t i, std::int64_t j) {
  if (i < 0 || j < 0) throw std::invalid_argument("sigma: negative index");
}

// Lower-triangular Cholesky factor of a row-major k x k matrix.
std::vector<double> cholesky(const std::vector<double>& a, std::size_t k) {
  std::vector<double> l(k * k, 0.0);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c <= r; ++c) {
      double s = a[r * k + c];
      for (std::size_t t = 0; t < c; ++t) s -= l[r * k + t] * l[c * k + t];
      if (r == c) {
        if (s <= 0.0) throw std::domain_error("covariance block is not positive definite");
        l[r * k + r] = std::sqrt(s);
      } else {
        l[r * k + c] = s / l[c * k + c];
      }
    }
  }
  return l;
}

double first(std::span<const double> x) {
  if (x.empty()) throw std::invalid_argument("LimitLaw::density: empty argument");
  return x[0];
}

}  // namespace

double weibull2_pdf(double x) { return x > 0.0 ? 2.0 * x * std::exp(-x * x) : 0.0; }

double weibull2_cdf(double x) { return x >= 0.0 ? -std::expm1(-x * x) : 0.0; }

double joint_density_k(std::span<const double> x) {
  if (x.empty()) throw std::invalid_argument("joint_density_k: k must be at least 1");
  double partial = 0.0;
  double prod = 1.0;
  for (double xi : x) {
    if (xi < 0.0) return 0.0;
    partial += xi;
    prod *= 2.0 * partial;
  }
  return prod * std::exp(-partial * partial);
}

double sigma_entry(std::int64_t i, std::int64_t j) {
  require_index(i, j);
  if (i == 0 || j == 0) return 0.0;
  const double fi = fall(static_cast<double>(i + 2), 3);
  const double fj = fall(static_cast<double>(j + 2), 3);
  double v = 16.0 / (fi * fj) - 24.0 / fall(static_cast<double>(i + j + 2), 4);
  if (i == j) v += 4.0 / fi;
  return v;
}

double sigma_entry_doublesum(std::int64_t i, std::int64_t j) {
  require_index(i, j);
  if (i == 0 || j == 0) return 0.0;
  BigRational total = 0;
  for (std::int64_t k = 0; k < i; ++k) {
    for (std::int64_t l = 0; l < j; ++l) {
      const BigInt kl4 = BigInt(static_cast<long>(k + l + 4));
      BigRational inner = make_rational(
          2 * falling_factorial(k + l + 4, k + l + 4),
          falling_factorial(k + 3, k + 3) * falling_factorial(l + 3, l + 3));
      inner -= 1;
      inner -= make_rational(BigInt(static_cast<long>((k + 1) * (l + 1))),
                             BigInt(static_cast<long>((k + 3) * (l + 3))));
      BigRational term = inner * binomial(i - 1, k) * binomial(j - 1, l) / kl4;
      if ((k + l) % 2 == 0) {
        total += term;
      } else {
        total -= term;
      }
    }
  }
  total *= 2;
  total.canonicalize();
  return to_double(total);
}

std::vector<double> sigma_matrix(std::size_t k) {
  std::vector<double> m(k * k);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) {
      m[r * k + c] = sigma_entry(static_cast<std::int64_t>(r + 1), static_cast<std::int64_t>(c + 1));
    }
  }
  return m;
}

double sigma_sq_even() { return 16.0 * kLn2 * kLn2 + 8.0 * kLn2 - 13.0; }

double sigma_sq_even_from_covariance() { return 16.0 * kLn2 * kLn2 - 8.0 * kLn2 - 2.0; }

double sigma_sq_from_matrix(std::size_t terms) {
  double s = 0.0;
  for (std::size_t i = 1; i <= terms; ++i) {
    for (std::size_t j = 1; j <= terms; ++j) {
      s += sigma_entry(static_cast<std::int64_t>(2 * i), static_cast<std::int64_t>(2 * j));
    }
  }
  return s;
}

double sigma_sq_series(std::size_t terms) {
  double single = 0.0;
  for (std::size_t i = 1; i <= terms; ++i) single += 1.0 / fall(2.0 * static_cast<double>(i) + 2.0, 3);
  // Group the double sum by m = i + j; m occurs min(m-1, 2T-m+1) times.
  double cross = 0.0;
  const std::size_t t = terms;
  for (std::size_t m = 2; m <= 2 * t; ++m) {
    const std::size_t mult = m <= t + 1 ? m - 1 : 2 * t - m + 1;
    cross += static_cast<double>(mult) / fall(2.0 * static_cast<double>(m) + 4.0, 4);
  }
  return 4.0 * single + 16.0 * single * single - 24.0 * cross;
}

double poisson_ln2_pmf(std::int64_t k) {
  if (k < 0) return 0.0;
  const double kd = static_cast<double>(k);
  return std::exp(kd * std::log(kLn2) - std::lgamma(kd + 1.0)) / 2.0;
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

double NamedConstants::block_rate(std::int64_t i) {
  if (i < 1) throw std::invalid_argument("block_rate: i must be at least 1");
  return 4.0 / fall(static_cast<double>(i + 2), 3);
}

NamedConstants named_constants() {
  NamedConstants c{};
  c.even_block_mean_rate = 3.0 - 4.0 * kLn2;
  c.game_length_rate = 3.0 - 2.0 * kLn2;
  c.good_interval_rate = 2.0 * kLn2;
  c.sigma_sq = sigma_sq_even();
  c.game_length_variance = c.sigma_sq / 4.0;
  c.sigma_sq_from_covariance = sigma_sq_even_from_covariance();
  c.game_length_variance_from_covariance = c.sigma_sq_from_covariance / 4.0;
  c.weibull2_mean = std::sqrt(std::numbers::pi) / 2.0;
  c.lucky_mean = kLn2;
  return c;
}

double LimitLaw::density(std::span<const double> x) const {
  switch (kind) {
    case LimitKind::weibull2:
      return weibull2_pdf(first(x));
    case LimitKind::joint_k:
      if (x.size() != dimension) throw std::invalid_argument("joint_k: wrong dimension");
      return joint_density_k(x);
    case LimitKind::gaussian_blocks: {
      if (x.size() != dimension) throw std::invalid_argument("gaussian_blocks: wrong dimension");
      const std::size_t k = dimension;
      const auto l = cholesky(sigma_matrix(k), k);
      // Solve L y = x; density = exp(-|y|^2/2) / ((2 pi)^{k/2} det L).
      std::vector<double> y(k);
      double log_det = 0.0, quad = 0.0;
      for (std::size_t r = 0; r < k; ++r) {
        double s = x[r];
        for (std::size_t c = 0; c < r; ++c) s -= l[r * k + c] * y[c];
        y[r] = s / l[r * k + r];
        quad += y[r] * y[r];
        log_det += std::log(l[r * k + r]);
      }
      return std::exp(-0.5 * quad - log_det -
                      0.5 * static_cast<double>(k) * std::log(2.0 * std::numbers::pi));
    }
    case LimitKind::game_length_normal: {
      const double z = first(x) / std::sqrt(variance);
      return std::exp(-0.5 * z * z) / std::sqrt(2.0 * std::numbers::pi * variance);
    }
    case LimitKind::poisson_ln2:
      return poisson_ln2_pmf(static_cast<std::int64_t>(std::floor(first(x))));
  }
  return 0.0;
}

double LimitLaw::cdf(double x) const {
  switch (kind) {
    case LimitKind::weibull2:
      return weibull2_cdf(x);
    case LimitKind::game_length_normal:
      return normal_cdf(x / std::sqrt(variance));
    case LimitKind::poisson_ln2: {
      if (x < 0.0) return 0.0;
      double s = 0.0;
      for (std::int64_t k = 0; k <= static_cast<std::int64_t>(std::floor(x)); ++k) s += poisson_ln2_pmf(k);
      return s;
    }
    case LimitKind::joint_k:
    case LimitKind::gaussian_blocks:
      break;
  }
  throw std::invalid_argument("LimitLaw::cdf: only defined for one-dimensional laws");
}

}  // namespace chordstat::limits
