#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "chordstat/limits.hpp"

using namespace chordstat::limits;

namespace {

constexpr double kLn2 = std::numbers::ln2;

// Composite Simpson rule on [a, b] with an even number of panels.
template <typename F>
double simpson(F f, double a, double b, int panels) {
  const double h = (b - a) / panels;
  double s = f(a) + f(b);
  for (int i = 1; i < panels; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.
std::vector<double> symmetric_eigenvalues(std::vector<double> a, std::size_t k) {
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < k; ++p)
      for (std::size_t q = p + 1; q < k; ++q) off += a[p * k + q] * a[p * k + q];
    if (off < 1e-30) break;
    for (std::size_t p = 0; p < k; ++p) {
      for (std::size_t q = p + 1; q < k; ++q) {
        if (std::abs(a[p * k + q]) < 1e-300) continue;
        const double theta = (a[q * k + q] - a[p * k + p]) / (2.0 * a[p * k + q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (std::size_t r = 0; r < k; ++r) {
          const double arp = a[r * k + p], arq = a[r * k + q];
          a[r * k + p] = c * arp - s * arq;
          a[r * k + q] = s * arp + c * arq;
        }
        for (std::size_t r = 0; r < k; ++r) {
          const double apr = a[p * k + r], aqr = a[q * k + r];
          a[p * k + r] = c * apr - s * aqr;
          a[q * k + r] = s * apr + c * aqr;
        }
      }
    }
  }
  std::vector<double> ev(k);
  for (std::size_t i = 0; i < k; ++i) ev[i] = a[i * k + i];
  return ev;
}

}  // namespace

TEST(Weibull2, Values) {
  EXPECT_EQ(weibull2_cdf(0.0), 0.0);
  EXPECT_EQ(weibull2_cdf(-1.0), 0.0);
  EXPECT_EQ(weibull2_pdf(-1.0), 0.0);
  EXPECT_NEAR(weibull2_pdf(1.0), 2.0 / std::exp(1.0), 1e-15);
  EXPECT_NEAR(weibull2_cdf(1.5), 1.0 - std::exp(-2.25), 1e-15);
}

TEST(Weibull2, MomentsByQuadrature) {
  EXPECT_NEAR(simpson(weibull2_pdf, 0.0, 8.0, 4000), 1.0, 1e-9);
  EXPECT_NEAR(simpson([](double x) { return x * weibull2_pdf(x); }, 0.0, 8.0, 4000),
              std::sqrt(std::numbers::pi) / 2.0, 1e-9);
  // cdf is the integral of the pdf.
  for (double x : {0.3, 1.0, 2.2}) EXPECT_NEAR(simpson(weibull2_pdf, 0.0, x, 2000), weibull2_cdf(x), 1e-10);
}

TEST(JointDensity, ReducesAndVanishes) {
  for (double x : {0.1, 0.7, 1.9}) {
    const double v[] = {x};
    EXPECT_DOUBLE_EQ(joint_density_k(v), weibull2_pdf(x));
  }
  const double zero_first[] = {0.0, 0.8};
  EXPECT_EQ(joint_density_k(zero_first), 0.0);
  const double negative[] = {0.5, -0.1};
  EXPECT_EQ(joint_density_k(negative), 0.0);
}

TEST(JointDensity, IntegratesToOne) {
  const double k2 = simpson([](double a) {
    return simpson([a](double b) { const double v[] = {a, b}; return joint_density_k(v); }, 0.0, 6.0, 600);
  }, 0.0, 6.0, 600);
  EXPECT_NEAR(k2, 1.0, 1e-6);

  const double k3 = simpson([](double a) {
    return simpson([a](double b) {
      return simpson([a, b](double c) { const double v[] = {a, b, c}; return joint_density_k(v); },
                     0.0, 5.0, 160);
    }, 0.0, 5.0, 160);
  }, 0.0, 5.0, 160);
  EXPECT_NEAR(k3, 1.0, 1e-6);
}

TEST(JointDensity, MarginalOfFirstIsWeibull) {
  for (double a : {0.2, 0.9, 1.6}) {
    const double m = simpson([a](double b) { const double v[] = {a, b}; return joint_density_k(v); }, 0.0, 8.0, 2000);
    EXPECT_NEAR(m, weibull2_pdf(a), 1e-9);
  }
}

TEST(Sigma, SpotValues) {
  EXPECT_NEAR(sigma_entry(1, 1), 1.0 / 9.0, 1e-16);
  EXPECT_NEAR(sigma_entry(1, 2), -4.0 / 45.0, 1e-16);
  EXPECT_NEAR(sigma_entry(2, 1), -4.0 / 45.0, 1e-16);
  EXPECT_NEAR(sigma_entry(2, 2), 23.0 / 180.0, 1e-16);
  EXPECT_EQ(sigma_entry(0, 3), 0.0);
  EXPECT_EQ(sigma_entry(4, 0), 0.0);
  EXPECT_EQ(sigma_entry_doublesum(0, 0), 0.0);
}

TEST(Sigma, ClosedFormEqualsDoubleSum) {
  for (std::int64_t i = 1; i <= 15; ++i) {
    for (std::int64_t j = 1; j <= 15; ++j) {
      const double a = sigma_entry(i, j), b = sigma_entry_doublesum(i, j);
      ASSERT_LE(std::abs(a - b), 1e-12 * std::abs(a)) << i << "," << j;
    }
  }
}

TEST(Sigma, SymmetricPositiveSemidefinite) {
  for (std::size_t k = 1; k <= 10; ++k) {
    const auto m = sigma_matrix(k);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) ASSERT_EQ(m[r * k + c], m[c * k + r]);
    for (double ev : symmetric_eigenvalues(m, k)) ASSERT_GE(ev, -1e-10) << "k=" << k;
  }
}

TEST(Sigma, RowsSumToZero) {
  // sum_j B_j = n exactly, so the full covariance has zero row sums.
  for (std::int64_t i = 1; i <= 5; ++i) {
    double s = 0.0;
    for (std::int64_t j = 1; j <= 200000; ++j) s += sigma_entry(i, j);
    EXPECT_NEAR(s, 0.0, 1e-8);
  }
}

TEST(SigmaSq, ClosedFormAndSeries) {
  EXPECT_NEAR(sigma_sq_even(), 0.2324, 5e-5);
  EXPECT_NEAR(sigma_sq_even(), 16 * kLn2 * kLn2 + 8 * kLn2 - 13, 1e-15);
  EXPECT_NEAR(sigma_sq_series(2000), sigma_sq_even(), 1e-4);
  EXPECT_NEAR(sigma_sq_even() / 4.0, 0.0581, 5e-5);
}

TEST(SigmaSq, CovarianceRouteGivesDifferentConstant) {
  EXPECT_NEAR(sigma_sq_from_matrix(2000), sigma_sq_even_from_covariance(), 1e-4);
  EXPECT_NEAR(sigma_sq_even_from_covariance(), 0.142070778, 1e-9);
  EXPECT_GT(sigma_sq_even() - sigma_sq_from_matrix(2000), 0.09);
}

TEST(Poisson, Values) {
  EXPECT_DOUBLE_EQ(poisson_ln2_pmf(0), 0.5);
  EXPECT_NEAR(poisson_ln2_pmf(1), kLn2 / 2.0, 1e-16);
  EXPECT_EQ(poisson_ln2_pmf(-1), 0.0);
  double mass = 0.0, mean = 0.0;
  for (int k = 0; k < 60; ++k) {
    mass += poisson_ln2_pmf(k);
    mean += k * poisson_ln2_pmf(k);
  }
  EXPECT_NEAR(mass, 1.0, 1e-15);
  EXPECT_NEAR(mean, kLn2, 1e-15);
}

TEST(NamedConstants, Values) {
  const auto c = named_constants();
  EXPECT_NEAR(c.even_block_mean_rate, 0.2274, 1e-4);
  EXPECT_NEAR(c.game_length_rate, 1.6137, 1e-4);
  EXPECT_NEAR(c.good_interval_rate, 1.3863, 1e-4);
  EXPECT_NEAR(c.game_length_rate, 1.5 + c.even_block_mean_rate / 2.0, 1e-15);
  EXPECT_DOUBLE_EQ(NamedConstants::block_rate(1), 2.0 / 3.0);

  double all = 0.0, even = 0.0;
  for (std::int64_t i = 1; i <= 2000000; ++i) {
    all += NamedConstants::block_rate(i);
    if (i % 2 == 0) even += NamedConstants::block_rate(i);
  }
  EXPECT_NEAR(all, 1.0, 1e-8);
  EXPECT_NEAR(even, c.even_block_mean_rate, 1e-8);
}

TEST(LimitLaw, Dispatch) {
  const LimitLaw w{LimitKind::weibull2};
  const double one[] = {1.0};
  EXPECT_DOUBLE_EQ(w.density(one), weibull2_pdf(1.0));
  EXPECT_DOUBLE_EQ(w.cdf(1.0), weibull2_cdf(1.0));

  const LimitLaw p{LimitKind::poisson_ln2};
  const double two[] = {2.5};
  EXPECT_DOUBLE_EQ(p.density(two), poisson_ln2_pmf(2));
  EXPECT_NEAR(p.cdf(1.0), poisson_ln2_pmf(0) + poisson_ln2_pmf(1), 1e-16);

  const LimitLaw g{LimitKind::game_length_normal, 1, 0.04};
  EXPECT_NEAR(g.cdf(0.0), 0.5, 1e-15);
  EXPECT_NEAR(simpson([&](double x) { const double v[] = {x}; return g.density(v); }, -3, 3, 2000), 1.0, 1e-8);

  const LimitLaw b{LimitKind::gaussian_blocks, 2};
  EXPECT_THROW(b.cdf(0.0), std::invalid_argument);
  // Bivariate normal density integrates to one over a wide box.
  const double mass = simpson([&](double x) {
    return simpson([&](double y) { const double v[] = {x, y}; return b.density(v); }, -3, 3, 400);
  }, -3, 3, 400);
  EXPECT_NEAR(mass, 1.0, 1e-6);
}
