#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace chordstat::harness {

// Running mean and variance (Welford), mergeable in a fixed order.
class MomentAccumulator {
 public:
  void add(double x);
  void merge(const MomentAccumulator& other);

  std::uint64_t count() const { return count_; }
  double mean() const { return mean_; }
  // Unbiased sample variance; 0 with fewer than two observations.
  double variance() const;
  // Standard error of the mean.
  double std_error() const;

 private:
  std::uint64_t count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

// Row-major square matrix.
struct Matrix {
  std::size_t dim = 0;
  std::vector<double> data;

  double operator()(std::size_t r, std::size_t c) const { return data[r * dim + c]; }
};

// sup over sample points x of |F_n(x) - F(x)| and |F_n(x-) - F(x-)|, with F(x-)
// taken at the next representable double below x. For continuous F this is
// the two-sided Kolmogorov-Smirnov statistic. Throws on empty input.
double ks_distance(std::span<const double> samples, const std::function<double(double)>& cdf);

// KS statistic for integer-valued samples against a continuous reference,
// with continuity correction: at each observed value g compares F_n(g) with
// F(g + 1/2) and F_n(g-1) with F(g - 1/2). Throws on empty input.
double ks_distance_discrete(std::span<const std::int64_t> samples,
                            const std::function<double(double)>& cdf);

// Empirical pmf on 0..max(samples). Throws on empty input or negative values.
std::vector<double> empirical_pmf(std::span<const std::int64_t> samples);

// (1/2) sum_k |p_k - q_k|, missing entries treated as 0.
double tv_distance(std::span<const double> p, std::span<const double> q);

// TV distance against a pmf on the nonnegative integers; the reference is
// summed until its remaining mass is below 1e-15.
double tv_distance(std::span<const double> p, const std::function<double(std::int64_t)>& pmf);

// Unbiased sample covariance of vector observations (all of equal length).
// Throws std::invalid_argument for fewer than two samples.
Matrix empirical_cov(const std::vector<std::vector<double>>& samples);

}  // namespace chordstat::harness
