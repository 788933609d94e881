#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace chordstat::limits {

/// Weibull law with shape 2: density 2x e^{-x^2} on x > 0. Limit of D_{n,1}/(2 sqrt n).
double weibull2_pdf(double x);
double weibull2_cdf(double x);

/// Joint limit density of the first k normalized block lengths:
/// 2^k x_1 (x_1+x_2) ... (x_1+...+x_k) e^{-(x_1+...+x_k)^2} on the orthant.
double joint_density_k(std::span<const double> x);

/// Covariance sigma_ij of the Gaussian limit of (B_{n,i} - 4n/(i+2)_3)/sqrt(n):
///   i != j: 16/((i+2)_3 (j+2)_3) - 24/(i+j+2)_4
///   i == j: 4/(j+2)_3 + 16/(j+2)_3^2 - 24/(2j+2)_4
/// Index 0 is the degenerate immigration coordinate: sigma_0j = sigma_i0 = 0.
double sigma_entry(std::int64_t i, std::int64_t j);

/// The same covariance from the alternating urn double sum
///   2 sum_{k<i} sum_{l<j} (-1)^{k+l}/(k+l+4) C(i-1,k) C(j-1,l)
///     * (2(k+l+4)!/((k+3)!(l+3)!) - 1 - (k+1)(l+1)/((k+3)(l+3))).
/// The sum cancels heavily, so it is accumulated in exact rationals and
/// rounded once at the end.
double sigma_entry_doublesum(std::int64_t i, std::int64_t j);

/// Leading k x k block of the covariance matrix (indices 1..k), row-major.
std::vector<double> sigma_matrix(std::size_t k);

/// (4 ln 2)^2 + 8 ln 2 - 13 ~ 0.2324, the closed form usually quoted for the
/// limiting variance of the normalized even-block count Y_n. It does not
/// match the block covariance; see sigma_sq_even_from_covariance().
double sigma_sq_even();

/// The variance actually implied by the block covariance:
/// sum_{i,j>=1} sigma_{2i,2j} = (4 ln 2)^2 - 8 ln 2 - 2 ~ 0.1421.
/// sigma_sq_even() is what results from (2i+2j+4)_4 in place of (2i+2j+2)_4
/// in the cross term.
double sigma_sq_even_from_covariance();

/// sum_{i,j <= terms} sigma_{2i,2j} (covariance-matrix route).
double sigma_sq_from_matrix(std::size_t terms);

/// The series
///   4 sum 1/(2i+2)_3 + 16 (sum 1/(2i+2)_3)^2 - 24 sum_{i,j} 1/(2i+2j+4)_4,
/// each sum truncated at index `terms`. Converges to sigma_sq_even().
double sigma_sq_series(std::size_t terms);

/// Poisson(ln 2) pmf: (ln 2)^k / (2 k!).
double poisson_ln2_pmf(std::int64_t k);

/// Standard normal cdf.
double normal_cdf(double z);

struct NamedConstants {
  double even_block_mean_rate;  ///< 3 - 4 ln 2, E[Y_n]/n
  double game_length_rate;      ///< 3 - 2 ln 2, E[G_n]/n
  double good_interval_rate;    ///< 2 ln 2, E[s]/n
  double sigma_sq;              ///< quoted limiting var of (Y_n - (3-4ln2)n)/sqrt(n)
  double game_length_variance;  ///< sigma_sq / 4
  double sigma_sq_from_covariance;              ///< sum of sigma_{2i,2j}
  double game_length_variance_from_covariance;  ///< sigma_sq_from_covariance / 4
  double weibull2_mean;         ///< sqrt(pi)/2
  double lucky_mean;            ///< ln 2

  /// 4 / (i+2)_3, the limiting fraction B_{n,i}/n.
  static double block_rate(std::int64_t i);
};

NamedConstants named_constants();

/// Limit laws by kind, for reporting.
enum class LimitKind { weibull2, joint_k, gaussian_blocks, game_length_normal, poisson_ln2 };

struct LimitLaw {
  LimitKind kind;
  std::size_t dimension = 1;  ///< k for joint_k and gaussian_blocks
  double variance = 0.0;      ///< for game_length_normal

  /// Density (pmf for poisson_ln2, evaluated at floor(x[0])). gaussian_blocks
  /// uses the leading dimension x dimension covariance block.
  double density(std::span<const double> x) const;
  /// Cumulative distribution for one-dimensional kinds.
  double cdf(double x) const;
};

}  // namespace chordstat::limits
