#include <map>
#include <stdexcept>

#include <gtest/gtest.h>

#include "chordstat/limits.hpp"
#include "chordstat/sampler.hpp"
#include "chordstat/stats.hpp"
#include "chordstat/urn.hpp"

using namespace chordstat;
using namespace chordstat::urn;

namespace {

// Cofactor expansion of det(A - x I) for tiny matrices, polynomial entries.
using Poly = std::vector<BigInt>;

Poly add(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return a;
}

Poly mul(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

Poly trim(Poly p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  return p;
}

Poly cofactor_det(const std::vector<std::vector<Poly>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Poly det{0};
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<Poly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Poly> row;
      for (std::size_t cc = 0; cc < n; ++cc) {
        if (cc != c) row.push_back(m[r][cc]);
      }
      minor.push_back(row);
    }
    Poly term = mul(m[0][c], cofactor_det(minor));
    if (c % 2) {
      for (auto& v : term) v = -v;
    }
    det = add(det, term);
  }
  return det;
}

Poly det_a_minus_x(const ReplacementMatrix& a) {
  std::vector<std::vector<Poly>> m(a.dim, std::vector<Poly>(a.dim));
  for (std::size_t r = 0; r < a.dim; ++r) {
    for (std::size_t c = 0; c < a.dim; ++c) {
      m[r][c] = {BigInt(static_cast<long>(a.at(r, c)))};
      if (r == c) m[r][c].push_back(-1);
    }
  }
  return trim(cofactor_det(m));
}

}  // namespace

TEST(UrnStep, ForcedFirstDraw) {
  RngStream rng(31, 0);
  const auto r = urn_step(UrnState{}, rng);
  EXPECT_EQ(r.drawn, 0u);
  EXPECT_EQ(r.state.counts, (std::vector<std::uint64_t>{1, 0, 1}));
  EXPECT_EQ(r.state.draws, 1u);
}

TEST(UrnStep, ActivityWeightedLaw) {
  UrnState s;
  s.counts = {1, 0, 1};
  s.draws = 1;
  int type2 = 0;
  const int trials = 120000;
  for (int t = 0; t < trials; ++t) {
    RngStream rng(32, static_cast<std::uint64_t>(t));
    type2 += urn_step(s, rng).drawn == 2;
  }
  EXPECT_NEAR(type2 / double(trials), 2.0 / 3.0, 0.01);
}

TEST(UrnStep, ReplacementRule) {
  UrnState s;
  s.counts = {1, 1, 0, 1};
  s.draws = 2;
  Urn u;
  u.apply(0);
  u.apply(2);  // {0:1, 1:1, 3:1}
  EXPECT_EQ(u.state().counts, s.counts);
  u.apply(3);
  EXPECT_EQ(u.state().counts, (std::vector<std::uint64_t>{1, 2, 0, 0, 1}));
  EXPECT_THROW(u.apply(2), std::invalid_argument);
}

TEST(UrnSimulate, Invariants) {
  RngStream one(33, 0);
  EXPECT_EQ(urn_simulate(1, one).counts, (std::vector<std::uint64_t>{1, 0, 1}));
  for (std::uint64_t t = 0; t < 50; ++t) {
    RngStream rng(34, t);
    Urn u;
    for (std::size_t k = 1; k <= 2000; ++k) {
      u.step(rng);
      const auto& st = u.state();
      std::uint64_t balls = 0, weight = 0;
      for (std::size_t i = 1; i < st.counts.size(); ++i) {
        balls += st.counts[i];
        weight += i * st.counts[i];
      }
      ASSERT_EQ(st.counts[0], 1u);
      ASSERT_EQ(balls, k);
      ASSERT_EQ(weight + 1, st.total_weight());
    }
  }
}

TEST(UrnSimulate, FastAndScanPathsAgreeInLaw) {
  // Mean type-1..4 counts after 300 draws, Fenwick path vs linear scan.
  std::vector<harness::MomentAccumulator> fast(5), scan(5);
  for (std::uint64_t t = 0; t < 4000; ++t) {
    RngStream a(35, t), b(36, t);
    const auto s1 = urn_simulate(300, a);
    UrnState s2;
    for (int k = 0; k < 300; ++k) s2 = urn_step(std::move(s2), b).state;
    for (std::size_t i = 1; i <= 4; ++i) {
      fast[i].add(static_cast<double>(s1.count(i)));
      scan[i].add(static_cast<double>(s2.count(i)));
    }
  }
  for (std::size_t i = 1; i <= 4; ++i) {
    const double se = std::hypot(fast[i].std_error(), scan[i].std_error());
    EXPECT_LE(std::abs(fast[i].mean() - scan[i].mean()), 4 * se) << i;
  }
}

TEST(UrnSimulate, TypeFractions) {
  std::vector<harness::MomentAccumulator> acc(5);
  for (std::uint64_t t = 0; t < 50; ++t) {
    RngStream rng(37, t);
    const auto s = urn_simulate(100000, rng);
    for (std::size_t i = 1; i <= 4; ++i) acc[i].add(static_cast<double>(s.count(i)) / 1e5);
  }
  for (std::size_t i = 1; i <= 4; ++i) {
    EXPECT_NEAR(acc[i].mean(), limits::NamedConstants::block_rate(static_cast<std::int64_t>(i)), 0.01);
  }
}

TEST(UrnSimulate, FluctuationVariance) {
  const std::size_t n = 10000;
  std::vector<harness::MomentAccumulator> acc(4);
  for (std::uint64_t t = 0; t < 50000; ++t) {
    RngStream rng(38, t);
    const auto s = urn_simulate(n, rng);
    for (std::size_t i = 1; i <= 3; ++i) {
      const double lead = 4.0 * n / (double(i) * (i + 1) * (i + 2));
      acc[i].add((static_cast<double>(s.count(i)) - lead) / 100.0);
    }
  }
  for (std::size_t i = 1; i <= 3; ++i) {
    EXPECT_NEAR(acc[i].variance(), limits::sigma_entry(static_cast<std::int64_t>(i), static_cast<std::int64_t>(i)), 0.03) << i;
  }
}

TEST(UrnCoupling, InsertionTypesReproduceBlockCounts) {
  for (std::uint64_t t = 0; t < 300; ++t) {
    RngStream rng(39, t);
    const auto s = sample_deal_insertion(200, rng);
    Urn u;
    for (std::size_t k = 1; k <= 200; ++k) {
      u.apply(s.trace.drawn_types[k - 1]);
      std::vector<Label> prefix;
      for (Label x : s.deal.labels()) {
        if (x <= k) prefix.push_back(x);
      }
      const auto p = blocks(Deal(prefix));
      for (std::size_t i = 1; i < std::max(p.counts.size(), u.state().counts.size()); ++i) {
        ASSERT_EQ(u.state().count(i), p.count(i)) << "k=" << k << " i=" << i;
      }
    }
  }
}

TEST(ReplacementMatrix, SmallCase) {
  const auto a = replacement_matrix(2);
  const std::vector<std::int64_t> expected{0, 0, 0, 0, 0, 1, 2, 2, 1};
  EXPECT_EQ(a.entries, expected);
  EXPECT_THROW(replacement_matrix(1), std::invalid_argument);
}

TEST(ReplacementMatrix, Columns) {
  for (std::size_t M = 2; M <= 12; ++M) {
    const auto a = replacement_matrix(M);
    for (std::size_t c = 0; c <= M; ++c) {
      std::int64_t sum = 0;
      for (std::size_t r = 0; r <= M; ++r) sum += a.at(r, c);
      // Each draw raises the total activity weight by exactly 2.
      ASSERT_EQ(sum, 2) << "M=" << M << " column " << c;
    }
    EXPECT_EQ(a.at(2, 0), 2);
    for (std::size_t i = 1; i < M; ++i) {
      if (i > 1) EXPECT_EQ(a.at(i, i), -static_cast<std::int64_t>(i));
      EXPECT_EQ(a.at(i + 1, i), static_cast<std::int64_t>(i + 1));
    }
    EXPECT_EQ(a.at(1, M), 1);
    EXPECT_EQ(a.at(M, M), 1);
    const auto inner = a.without_immigration();
    EXPECT_EQ(inner.dim, M);
    EXPECT_EQ(inner.at(0, 0), a.at(1, 1));
  }
}

TEST(CharPoly, MatchesCofactorExpansion) {
  for (std::size_t M = 2; M <= 7; ++M) {
    EXPECT_EQ(char_poly(M), det_a_minus_x(replacement_matrix(M))) << M;
  }
}

TEST(CharPoly, SmallCaseByHand) {
  // -x (x - 2) (x + 1) = -x^3 + x^2 + 2x
  EXPECT_EQ(char_poly(2), (std::vector<BigInt>{0, 2, 1, -1}));
}

TEST(CharPoly, ClosedFormProduct) {
  for (std::size_t M = 2; M <= 30; ++M) {
    const auto p = char_poly(M);
    ASSERT_EQ(p, closed_form_char_poly(M)) << M;
    ASSERT_EQ(p.size(), M + 2);
    ASSERT_EQ(p[0], 0);
  }
}

TEST(CharPoly, ProductFromZeroHasWrongDegree) {
  for (std::size_t M = 2; M <= 30; ++M) {
    EXPECT_EQ(char_poly_product_from_zero(M).size(), M + 3);
    EXPECT_NE(char_poly(M), char_poly_product_from_zero(M));
  }
}

TEST(CharPoly, SpectrumWithoutImmigration) {
  for (std::size_t M = 2; M <= 12; ++M) {
    const auto p = char_poly(replacement_matrix(M).without_immigration());
    ASSERT_EQ(p.size(), M + 1);
    EXPECT_EQ(evaluate(p, 2), 0);
    for (std::int64_t j = 1; j < static_cast<std::int64_t>(M); ++j) EXPECT_EQ(evaluate(p, -j), 0) << M << " " << j;
    EXPECT_NE(evaluate(p, -static_cast<std::int64_t>(M)), 0);
  }
}

TEST(TopEigenvector, Residual) {
  const auto v3 = top_eigenvector(3);
  EXPECT_EQ(v3, (std::vector<BigRational>{0, make_rational(1, 3), make_rational(1, 6), make_rational(1, 2)}));
  for (std::size_t M = 2; M <= 50; ++M) {
    const auto a = replacement_matrix(M);
    const auto v = top_eigenvector(M);
    BigRational sum = 0;
    for (std::size_t r = 0; r <= M; ++r) {
      BigRational acc = 0;
      for (std::size_t c = 0; c <= M; ++c) acc += v[c] * a.at(r, c);
      ASSERT_EQ(acc, 2 * v[r]) << M << " row " << r;
      sum += v[r];
    }
    ASSERT_EQ(sum, 1);
    for (std::size_t j = 1; j < M; ++j) {
      EXPECT_NEAR(to_double(v[j]), j * limits::NamedConstants::block_rate(static_cast<std::int64_t>(j)) / 2.0, 1e-15);
    }
  }
}
