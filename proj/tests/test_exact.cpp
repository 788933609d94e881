#include <cmath>
#include <numbers>
#include <map>
#include <stdexcept>

#include <gtest/gtest.h>

#include "chordstat/exact.hpp"
#include "chordstat/sampler.hpp"

using namespace chordstat;
using namespace chordstat::exact;

namespace {

// Joint law of the first k block lengths over every standard deal of size n.
std::map<std::vector<std::int64_t>, std::uint64_t> enumerate_prefixes(std::size_t n, std::size_t k) {
  std::map<std::vector<std::int64_t>, std::uint64_t> out;
  StandardDealStream s(n);
  while (s.next()) {
    const auto p = blocks(s.current());
    std::vector<std::int64_t> key(p.lengths.begin(), p.lengths.begin() + static_cast<std::ptrdiff_t>(k));
    ++out[key];
  }
  return out;
}

// Exact factorial moments of D_{n,1} straight from the a-table.
BigRational moment_from_table(const ATable& t, std::size_t n, std::int64_t r) {
  BigRational s = 0;
  for (std::int64_t j = 2; j <= static_cast<std::int64_t>(n) + 1; ++j) s += t(n, j) * falling_factorial(j, r);
  s /= odd_double_factorial(static_cast<std::int64_t>(n));
  return s;
}

}  // namespace

TEST(ATable, SmallRows) {
  const auto t = a_table(3);
  EXPECT_EQ(t(1, 2), 1);
  EXPECT_EQ(t(3, 2), 3);
  EXPECT_EQ(t(3, 3), 6);
  EXPECT_EQ(t(3, 4), 6);
  EXPECT_EQ(t(3, 5), 0);
  EXPECT_EQ(t(3, 1), 0);
}

TEST(ATable, RowSumsAreOddDoubleFactorials) {
  const auto t = a_table(60);
  for (std::size_t n = 1; n <= 60; ++n) ASSERT_EQ(t.row_sum(n), odd_double_factorial(static_cast<std::int64_t>(n)));
}

TEST(ATable, MatchesEnumeration) {
  const auto t = a_table(7);
  for (std::size_t n = 1; n <= 7; ++n) {
    const auto law = enumerate_prefixes(n, 1);
    for (std::int64_t j = 2; j <= static_cast<std::int64_t>(n) + 1; ++j) {
      const auto it = law.find({j});
      ASSERT_EQ(t(n, j), BigInt(static_cast<unsigned long>(it == law.end() ? 0 : it->second)));
    }
  }
}

TEST(ATable, CapsAndSingleRow) {
  EXPECT_THROW(a_table(0), std::invalid_argument);
  EXPECT_THROW(a_table(kATableCap + 1), std::length_error);
  EXPECT_THROW(a_row(kARowCap + 1), std::length_error);
  const auto t = a_table(80);
  EXPECT_EQ(a_row(80), t.row(80));
  const auto big = a_row(kARowCap);
  BigInt s = 0;
  for (const auto& v : big) s += v;
  EXPECT_EQ(s, odd_double_factorial(static_cast<std::int64_t>(kARowCap)));
}

TEST(FirstMatch, LawMatchesTable) {
  const auto t = a_table(60);
  for (std::int64_t n = 1; n <= 60; ++n) {
    BigRational total = 0;
    for (std::int64_t j = 0; j <= 2 * n + 1; ++j) {
      const BigRational p = p_first_match(n, j);
      ASSERT_EQ(p, make_rational(t(static_cast<std::size_t>(n), j), odd_double_factorial(n)));
      total += p;
    }
    ASSERT_EQ(total, 1);
  }
  EXPECT_EQ(p_first_match(3, 2), make_rational(1, 5));
  EXPECT_THROW(p_first_match(0, 2), std::invalid_argument);
}

TEST(JointFirstK, SmallCases) {
  const std::vector<std::int64_t> a{2, 2}, b{3, 1}, c{1, 3};
  EXPECT_EQ(joint_first_k(2, a), make_rational(1, 3));
  EXPECT_EQ(joint_first_k(2, b), make_rational(2, 3));
  EXPECT_EQ(joint_first_k(2, c), 0);
  const std::vector<std::int64_t> one{2};
  EXPECT_EQ(joint_first_k(4, one), p_first_match(4, 2));
}

TEST(JointFirstK, MatchesEnumeration) {
  for (std::size_t n = 1; n <= 7; ++n) {
    const BigInt total = odd_double_factorial(static_cast<std::int64_t>(n));
    for (std::size_t k = 1; k <= std::min<std::size_t>(3, n); ++k) {
      const auto law = enumerate_prefixes(n, k);
      // Every vector with entries 1..n+1, including infeasible ones.
      std::vector<std::int64_t> v(k, 1);
      while (true) {
        const auto it = law.find(v);
        const BigInt count(static_cast<unsigned long>(it == law.end() ? 0 : it->second));
        ASSERT_EQ(joint_first_k(static_cast<std::int64_t>(n), v), make_rational(count, total))
            << "n=" << n << " k=" << k;
        std::size_t pos = 0;
        while (pos < k && ++v[pos] > static_cast<std::int64_t>(n) + 1) v[pos++] = 1;
        if (pos == k) break;
      }
    }
  }
}

TEST(MeanD1, ClosedFormAndTable) {
  EXPECT_EQ(mean_D1(1), 2);
  EXPECT_EQ(mean_D1(2), make_rational(8, 3));
  const auto t = a_table(40);
  for (std::int64_t n = 1; n <= 40; ++n) {
    ASSERT_EQ(mean_D1(n), moment_from_table(t, static_cast<std::size_t>(n), 1));
  }
}

TEST(FactorialMoments, RecurrenceMatchesTable) {
  const auto t = a_table(40);
  for (std::int64_t n = 1; n <= 40; ++n) {
    for (std::int64_t r = 0; r <= 5; ++r) {
      ASSERT_EQ(factorial_moment_D1(n, r), moment_from_table(t, static_cast<std::size_t>(n), r))
          << n << "," << r;
    }
  }
}

TEST(FactorialMoments, ClosedFormsMatchRecurrence) {
  for (std::int64_t n = 1; n <= 60; ++n) {
    for (std::int64_t r = 0; r <= 3; ++r) ASSERT_EQ(factorial_moment_D1_closed(n, r), factorial_moment_D1(n, r));
  }
  EXPECT_THROW(factorial_moment_D1_closed(5, 4), std::invalid_argument);
}

TEST(FactorialMoments, ThirdMomentConstantIsMinusTwo) {
  // The variant with -4n-3 is 6 short at every n; at n = 1, where D = 2 and
  // the third factorial moment is 0, it would give -6.
  for (std::int64_t n = 1; n <= 20; ++n) {
    const BigRational variant = 6 * (mean_D1(n) * (n + 2) - (4 * n + 3));
    ASSERT_EQ(factorial_moment_D1(n, 3) - variant, 6);
  }
}

TEST(VarianceD1, ExactAndApprox) {
  const auto t = a_table(50);
  for (std::int64_t n = 1; n <= 50; ++n) {
    const BigRational m1 = moment_from_table(t, static_cast<std::size_t>(n), 1);
    const BigRational m2 = moment_from_table(t, static_cast<std::size_t>(n), 2);
    ASSERT_EQ(var_D1(n), m2 + m1 - m1 * m1);
    ASSERT_NEAR(mean_D1_approx(n), to_double(mean_D1(n)), 1e-10 * to_double(mean_D1(n)));
    ASSERT_NEAR(var_D1_approx(n), to_double(var_D1(n)), 1e-8 * std::max(1.0, to_double(var_D1(n))));
  }
  EXPECT_EQ(var_D1(1), 0);
}

TEST(VarianceD1, LargeNScaling) {
  // mean ~ sqrt(pi n); variance ~ (4 - pi) n with a relative correction of
  // order n^{-1/2}.
  for (std::int64_t n : {10000, 1000000}) {
    const double nd = static_cast<double>(n);
    EXPECT_NEAR(mean_D1_approx(n) / std::sqrt(std::numbers::pi * nd), 1.0, 1.0 / nd);
    const double rel = var_D1_approx(n) / ((4.0 - std::numbers::pi) * nd) - 1.0;
    EXPECT_LE(std::abs(rel) * std::sqrt(nd), 3.0) << n;
  }
}

TEST(MeanB, MatchesEnumeration) {
  for (std::size_t n = 1; n <= 7; ++n) {
    std::vector<std::uint64_t> totals(n + 2, 0);
    StandardDealStream s(n);
    while (s.next()) {
      const auto p = blocks(s.current());
      for (std::size_t i = 1; i <= n + 1; ++i) totals[i] += p.count(i);
    }
    for (std::size_t i = 1; i <= n + 1; ++i) {
      ASSERT_EQ(mean_B_exact(static_cast<std::int64_t>(n), static_cast<std::int64_t>(i)),
                make_rational(BigInt(static_cast<unsigned long>(totals[i])), odd_double_factorial(static_cast<std::int64_t>(n))))
          << n << "," << i;
    }
  }
}

TEST(MeanB, SumsAndRange) {
  for (std::int64_t n = 1; n <= 50; ++n) {
    BigRational s = 0, w = 0;
    for (std::int64_t i = 1; i <= n + 1; ++i) {
      s += mean_B_exact(n, i);
      w += mean_B_exact(n, i) * i;
    }
    ASSERT_EQ(s, n);
    ASSERT_EQ(w, 2 * n);
    ASSERT_EQ(mean_B_exact(n, n + 2), 0);
    ASSERT_EQ(mean_B_exact(n, 0), 0);
  }
}

TEST(MeanB, AsymptoticAndBound) {
  EXPECT_DOUBLE_EQ(mean_B_asymptotic(6, 1), 4.0);
  for (std::int64_t i = 1; i <= 8; ++i) {
    const double exact = to_double(mean_B_exact(400, i));
    EXPECT_NEAR(exact / mean_B_asymptotic(400, i), 1.0, 0.02 * i);
  }
  for (std::int64_t n = 1; n <= 40; ++n) {
    for (std::int64_t i = 1; i <= n + 1; ++i) ASSERT_LE(to_double(mean_B_exact(n, i)), upper_bound_B(n, i));
  }
}
