#include "chordstat/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace chordstat::harness {

void MomentAccumulator::add(double x) {
  ++count_;
  const double delta = x - mean_;
  mean_ += delta / static_cast<double>(count_);
  m2_ += delta * (x - mean_);
}

void MomentAccumulator::merge(const MomentAccumulator& other) {
  if (other.count_ == 0) return;
  if (count_ == 0) {
    *this = other;
    return;
  }
  const double na = static_cast<double>(count_), nb = static_cast<double>(other.count_);
  const double delta = other.mean_ - mean_;
  const double n = na + nb;
  mean_ += delta * nb / n;
  m2_ += other.m2_ + delta * delta * na * nb / n;
  count_ += other.count_;
}

double MomentAccumulator::variance() const {
  return count_ < 2 ? 0.0 : m2_ / static_cast<double>(count_ - 1);
}

double MomentAccumulator::std_error() const {
  return count_ == 0 ? 0.0 : std::sqrt(variance() / static_cast<double>(count_));
}

double ks_distance(std::span<const double> samples, const std::function<double(double)>& cdf) {
  if (samples.empty()) throw std::invalid_argument("ks_distance: no samples");
  std::vector<double> xs(samples.begin(), samples.end());
  std::sort(xs.begin(), xs.end());
  const double n = static_cast<double>(xs.size());
  double d = 0.0;
  std::size_t i = 0;
  while (i < xs.size()) {
    std::size_t j = i;
    while (j < xs.size() && xs[j] == xs[i]) ++j;
    const double below = static_cast<double>(i) / n;  // F_n(x-)
    const double at = static_cast<double>(j) / n;     // F_n(x)
    const double left = cdf(std::nextafter(xs[i], -std::numeric_limits<double>::infinity()));
    d = std::max({d, std::abs(at - cdf(xs[i])), std::abs(below - left)});
    i = j;
  }
  return d;
}

double ks_distance_discrete(std::span<const std::int64_t> samples,
                            const std::function<double(double)>& cdf) {
  if (samples.empty()) throw std::invalid_argument("ks_distance_discrete: no samples");
  std::vector<std::int64_t> xs(samples.begin(), samples.end());
  std::sort(xs.begin(), xs.end());
  const double n = static_cast<double>(xs.size());
  double d = 0.0;
  std::size_t i = 0;
  while (i < xs.size()) {
    std::size_t j = i;
    while (j < xs.size() && xs[j] == xs[i]) ++j;
    const double g = static_cast<double>(xs[i]);
    d = std::max({d, std::abs(static_cast<double>(j) / n - cdf(g + 0.5)),
                  std::abs(static_cast<double>(i) / n - cdf(g - 0.5))});
    i = j;
  }
  return d;
}

std::vector<double> empirical_pmf(std::span<const std::int64_t> samples) {
  if (samples.empty()) throw std::invalid_argument("empirical_pmf: no samples");
  const auto [lo, hi] = std::minmax_element(samples.begin(), samples.end());
  if (*lo < 0) throw std::invalid_argument("empirical_pmf: negative value");
  std::vector<double> p(static_cast<std::size_t>(*hi) + 1, 0.0);
  const double w = 1.0 / static_cast<double>(samples.size());
  for (auto x : samples) p[static_cast<std::size_t>(x)] += w;
  return p;
}

double tv_distance(std::span<const double> p, std::span<const double> q) {
  const std::size_t m = std::max(p.size(), q.size());
  double s = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    const double a = k < p.size() ? p[k] : 0.0;
    const double b = k < q.size() ? q[k] : 0.0;
    s += std::abs(a - b);
  }
  return s / 2.0;
}

double tv_distance(std::span<const double> p, const std::function<double(std::int64_t)>& pmf) {
  std::vector<double> q;
  double mass = 0.0;
  for (std::int64_t k = 0; k < 100000; ++k) {
    if (static_cast<std::size_t>(k) >= p.size() && 1.0 - mass < 1e-15) break;
    q.push_back(pmf(k));
    mass += q.back();
  }
  return tv_distance(p, q);
}

Matrix empirical_cov(const std::vector<std::vector<double>>& samples) {
  if (samples.size() < 2) throw std::invalid_argument("empirical_cov: need at least two samples");
  const std::size_t k = samples.front().size();
  std::vector<double> mean(k, 0.0);
  for (const auto& s : samples) {
    if (s.size() != k) throw std::invalid_argument("empirical_cov: ragged samples");
    for (std::size_t i = 0; i < k; ++i) mean[i] += s[i];
  }
  for (auto& m : mean) m /= static_cast<double>(samples.size());
  Matrix c{k, std::vector<double>(k * k, 0.0)};
  for (const auto& s : samples) {
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) c.data[i * k + j] += (s[i] - mean[i]) * (s[j] - mean[j]);
    }
  }
  for (auto& v : c.data) v /= static_cast<double>(samples.size() - 1);
  return c;
}

}  // namespace chordstat::harness
