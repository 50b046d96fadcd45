#include "skcert/smooth.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "support/oracles.hpp"

namespace skcert {
namespace {

// Largest prime factor by trial division; 1 for n = 1.
u64 naive_largest_prime(u64 n) {
  u64 largest = 1;
  for (u64 d = 2; d * d <= n; ++d) {
    while (n % d == 0) {
      largest = d;
      n /= d;
    }
  }
  return n > 1 ? n : largest;
}

TEST(IsSmooth, Examples) {
  EXPECT_TRUE(is_smooth(1, 2));
  EXPECT_TRUE(is_smooth(96, 5));
  EXPECT_FALSE(is_smooth(97, 5));
  EXPECT_THROW(is_smooth(0, 5), std::invalid_argument);
}

TEST(Psi, Examples) {
  EXPECT_EQ(psi(100, 5).count, 34u);
  EXPECT_EQ(psi(100, 2).count, 7u);
  EXPECT_EQ(psi(57, 57).count, 57u);
  EXPECT_EQ(psi(57, 1000).count, 57u);
  EXPECT_THROW(psi(kPsiCap + 1, 5), std::out_of_range);
}

TEST(Psi, MatchesTrialDivision) {
  for (u64 k : {1, 2, 3, 5, 7, 10, 30, 100}) {
    u64 count = 0;
    for (u64 x = 1; x <= 3000; ++x) {
      if (naive_largest_prime(x) <= k) ++count;
      if (x % 97 == 0 || x == 3000) ASSERT_EQ(psi(x, k).count, count) << x << " " << k;
    }
  }
}

TEST(Psi, Monotone) {
  const SpfSieve sieve(20000);
  for (u64 k = 1; k <= 40; ++k) {
    u64 prev = 0;
    for (u64 x = 1; x <= 20000; x += 499) {
      const u64 c = sieve.psi(x, k).count;
      ASSERT_GE(c, prev);
      ASSERT_GE(c, sieve.psi(x, k - 1 == 0 ? 1 : k - 1).count);
      ASSERT_LE(c, x);
      prev = c;
    }
  }
  for (u64 x = 1; x <= 500; ++x) ASSERT_EQ(sieve.psi(x, x).count, x);
}

TEST(Psi, PartialSummationBound) {
  const SpfSieve sieve(100000);
  for (u64 x : {1000, 10000, 100000}) {
    for (u64 k : {5, 10, 100}) {
      const double lhs = sieve.smooth_log_sum(x, k);
      const double rhs = static_cast<double>(x) * (std::log(static_cast<double>(k)) + 3.0);
      EXPECT_LE(lhs, rhs) << x << " " << k;
    }
  }
}

TEST(Psi, LemmaConstantGuard) {
  const SpfSieve sieve(10'000'000);
  for (u64 x : {1'000, 10'000, 100'000, 1'000'000, 10'000'000}) {
    for (u64 k : {5, 10, 100}) {
      const double lhs = static_cast<double>(sieve.psi(x, k).count) * std::log(static_cast<double>(x)) /
                         static_cast<double>(x);
      EXPECT_LE(lhs, std::log(static_cast<double>(k)) + kLemmaConstant) << x << " " << k;
      EXPECT_LE(static_cast<double>(sieve.psi(x, k).count), psi_bound(x, k));
    }
  }
}

TEST(ProbExistsLargeUnitPrime, ExactExamples) {
  EXPECT_EQ(prob_exists_large_unit_prime(100, 100, ExactMode{}).hits, 0u);
  const auto e = prob_exists_large_unit_prime(100'000, 50, ExactMode{});
  EXPECT_EQ(e.hits, 90043u);
  EXPECT_EQ(e.trials, 100'000u);
  EXPECT_TRUE(e.exact);
  EXPECT_GT(e.value(), 0.8);
  EXPECT_LT(e.value(), 1.0);
  EXPECT_EQ(e.std_error(), 0.0);
  EXPECT_EQ(prob_exists_large_unit_prime(10'000, 1, ExactMode{}).hits, 9815u);
  EXPECT_THROW(prob_exists_large_unit_prime(kExactProbabilityCap + 1, 5, ExactMode{}), std::out_of_range);
}

TEST(ProbExistsLargeUnitPrime, ExactMatchesFactorization) {
  const u64 x = 5000;
  for (u64 k : {1, 7, 20, 200}) {
    u64 hits = 0;
    for (u64 m = 1; m <= x; ++m) hits += smallest_unit_prime_above(m, k).has_value();
    EXPECT_EQ(prob_exists_large_unit_prime(x, k, ExactMode{}).hits, hits);
  }
}

TEST(ProbExistsLargeUnitPrime, SampledWithinFourStandardErrors) {
  u64 seed = 1;
  for (u64 x : {10'000, 100'000, 1'000'000}) {
    for (u64 k : {5, 50, 500}) {
      const auto exact = prob_exists_large_unit_prime(x, k, ExactMode{});
      const auto est = prob_exists_large_unit_prime(x, k, SampledMode{20'000, seed++});
      EXPECT_FALSE(est.exact);
      const double se = std::max(est.std_error(), 1e-4);
      EXPECT_LE(std::abs(est.value() - exact.value()), 4.0 * se) << x << " " << k;
    }
  }
}

TEST(ShiftedWitnessProfile, Examples) {
  const auto p = shifted_witness_profile(89, 7, 5);
  ASSERT_EQ(p.size(), 5u);
  const std::vector<u64> expect{89, 11, 29, 43, 17};
  for (std::size_t i = 0; i < 5; ++i) {
    ASSERT_TRUE(p[i]);
    EXPECT_EQ(*p[i], expect[i]);
  }
  const auto none = shifted_witness_profile(9, 8, 1);
  ASSERT_EQ(none.size(), 1u);
  EXPECT_FALSE(none[0]);
  for (const auto& q : shifted_witness_profile(50, 50, 6)) EXPECT_FALSE(q);
  EXPECT_THROW(shifted_witness_profile(10, 3, 0), std::invalid_argument);
  EXPECT_THROW(shifted_witness_profile(5, 3, 5), std::invalid_argument);
}

TEST(SmallestUnitPrimeAbove, MatchesNaive) {
  for (u64 n = 1; n <= 20000; ++n) {
    std::map<u64, unsigned> exponents;
    u64 rest = n;
    for (u64 d = 2; d <= rest; ++d) {
      while (rest % d == 0) {
        rest /= d;
        ++exponents[d];
      }
    }
    std::optional<u64> expect;
    for (const auto& [p, e] : exponents) {
      if (p > 13 && e == 1) {
        expect = p;
        break;
      }
    }
    ASSERT_EQ(smallest_unit_prime_above(n, 13), expect) << n;
  }
}

}  // namespace
}  // namespace skcert
