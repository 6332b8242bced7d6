#include <gtest/gtest.h>

#include <set>
#include <string>
#include <vector>

#include "fyshuffle/oracle.hpp"
#include "fyshuffle/permutation.hpp"
#include "fyshuffle/sampler.hpp"

namespace fyshuffle {
namespace {

Rational R(long long num, long long den) { return Rational(num, den); }

TEST(Factorial, SmallValues) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(1), 1);
  EXPECT_EQ(factorial(6), 720);
  EXPECT_EQ(factorial(25), BigInt("15511210043330985984000000"));
  for (unsigned n = 1; n <= 20; ++n) {
    EXPECT_EQ(factorial(n), factorial(n - 1) * n);
    EXPECT_EQ(BigInt(factorial_u64(n)), factorial(n));
  }
}

TEST(PermRank, LehmerConventions) {
  for (std::size_t n = 1; n <= 8; ++n) {
    EXPECT_EQ(perm_rank(identity_permutation(n)).rank, 0u);
    auto rev = identity_permutation(n);
    std::reverse(rev.begin(), rev.end());
    EXPECT_EQ(perm_rank(rev).rank, factorial_u64(static_cast<unsigned>(n)) - 1);
  }
}

TEST(PermRank, BijectionOnFive) {
  std::set<std::vector<std::size_t>> seen;
  for (std::uint64_t r = 0; r < 120; ++r) {
    const auto p = perm_unrank({r}, 5);
    EXPECT_EQ(perm_rank(p).rank, r);
    seen.insert(p);
  }
  EXPECT_EQ(seen.size(), 120u);
}

TEST(PermRank, RejectsNonPermutations) {
  EXPECT_THROW(perm_rank(std::vector<std::size_t>{0, 0, 1}), std::invalid_argument);
  EXPECT_THROW(perm_rank(std::vector<std::size_t>{0, 3, 1}), std::invalid_argument);
  EXPECT_THROW(perm_unrank({6}, 3), std::invalid_argument);
}

TEST(CycleCount, Examples) {
  EXPECT_EQ(cycle_count(identity_permutation(4)), 4u);
  EXPECT_EQ(cycle_count(std::vector<std::size_t>{1, 2, 0}), 1u);
  EXPECT_EQ(cycle_count(std::vector<std::size_t>{1, 0, 3, 2}), 2u);
}

TEST(ExactShuffle, EveryPermutationHasMassOneOverNFactorial) {
  for (unsigned n = 1; n <= 6; ++n) {
    const auto dist = exact_shuffle_distribution(n);
    const Rational expected(BigInt(1), factorial(n));
    ASSERT_EQ(dist.mass.size(), factorial_u64(n));
    for (const auto& [rank, m] : dist.mass) ASSERT_EQ(m, expected);
    EXPECT_EQ(dist.total(), 1);
  }
}

TEST(ExactShuffle, RefusesOutOfRange) {
  EXPECT_THROW(exact_shuffle_distribution(0), OracleRefusal);
  EXPECT_THROW(exact_shuffle_distribution(9), OracleRefusal);
  EXPECT_THROW(exact_variant_distribution(ShuffleVariant::naive, 8), OracleRefusal);
}

TEST(ExactVariant, FisherYatesAgreesWithCompositional) {
  for (unsigned n = 1; n <= 7; ++n) {
    const auto a = exact_variant_distribution(ShuffleVariant::fisher_yates, n);
    const auto b = exact_shuffle_distribution(n);
    EXPECT_EQ(a.mass, b.mass) << "n=" << n;
  }
}

// Frozen from brute-force enumeration in tests/oracles/reference.py.
TEST(ExactVariant, SattoloThree) {
  const auto d = exact_variant_distribution(ShuffleVariant::sattolo, 3);
  EXPECT_EQ(d.total(), 1);
  EXPECT_EQ(d.at({3}), R(1, 2));  // [1 2 0]
  EXPECT_EQ(d.at({4}), R(1, 2));  // [2 0 1]
  for (std::uint64_t r : {0, 1, 2, 5}) EXPECT_EQ(d.at({r}), 0);
  EXPECT_EQ(cycle_count(perm_unrank({3}, 3)), 1u);
  EXPECT_EQ(cycle_count(perm_unrank({4}, 3)), 1u);
}

TEST(ExactVariant, NaiveThree) {
  const auto d = exact_variant_distribution(ShuffleVariant::naive, 3);
  const std::vector<Rational> expected{R(4, 27), R(5, 27), R(5, 27),
                                       R(5, 27), R(4, 27), R(4, 27)};
  for (std::uint64_t r = 0; r < 6; ++r) EXPECT_EQ(d.at({r}), expected[r]) << r;
  EXPECT_EQ(d.total(), 1);
}

TEST(ExactVariant, NaiveTwoIsUnbiased) {
  const auto d = exact_variant_distribution(ShuffleVariant::naive, 2);
  EXPECT_EQ(d.at({0}), R(1, 2));
  EXPECT_EQ(d.at({1}), R(1, 2));
}

TEST(ExactVariant, MassConservation) {
  for (auto v : {ShuffleVariant::fisher_yates, ShuffleVariant::sattolo,
                 ShuffleVariant::naive}) {
    for (unsigned n = 1; n <= 6; ++n) {
      EXPECT_EQ(exact_variant_distribution(v, n).total(), 1);
    }
  }
}

TEST(BitLevel, Coin) {
  const auto d = bitlevel_distribution(coin(), 1);
  EXPECT_EQ(d.lower_at(true), R(1, 2));
  EXPECT_EQ(d.lower_at(false), R(1, 2));
  EXPECT_EQ(d.unresolved, 0);
}

TEST(BitLevel, UniformFourIsExactAtDepthTwo) {
  const auto d = bitlevel_distribution(uniform(4), 2);
  for (std::uint64_t v = 0; v < 4; ++v) EXPECT_EQ(d.lower_at(v), R(1, 4));
  EXPECT_EQ(d.unresolved, 0);
}

// Geometric tail: lower = (1 - 4^-20) / 3, unresolved = 4^-20.
TEST(BitLevel, UniformThreeDepthForty) {
  const auto d = bitlevel_distribution(uniform(3), 40);
  EXPECT_EQ(d.unresolved, pow2_inverse(40));
  for (std::uint64_t v = 0; v < 3; ++v) {
    EXPECT_LE(d.lower_at(v), R(1, 3));
    EXPECT_GE(d.lower_at(v), R(1, 3) - pow2_inverse(39));
    EXPECT_EQ(d.lower_at(v), (1 - pow2_inverse(40)) / 3);
  }
  EXPECT_EQ(d.resolved() + d.unresolved, 1);
}

TEST(BitLevel, UniformUpToEightAtDepth64) {
  for (std::uint64_t n = 2; n <= 8; ++n) {
    const auto d = bitlevel_distribution(uniform(n), 64);
    const Rational target(1, static_cast<long long>(n));
    for (std::uint64_t v = 0; v < n; ++v) EXPECT_TRUE(d.brackets(v, target));
    EXPECT_LE(d.unresolved, pow2_inverse(32));
    EXPECT_EQ(d.resolved() + d.unresolved, 1);
  }
}

TEST(BitLevel, MonotoneRefinement) {
  for (std::uint64_t n : {3u, 5u, 6u, 7u}) {
    Rational prev_unresolved = 1;
    std::vector<Rational> prev_lower(n, 0);
    for (unsigned depth = 0; depth <= 24; ++depth) {
      const auto d = bitlevel_distribution(uniform(n), depth);
      EXPECT_LE(d.unresolved, prev_unresolved);
      for (std::uint64_t v = 0; v < n; ++v) {
        EXPECT_GE(d.lower_at(v), prev_lower[v]);
        prev_lower[v] = d.lower_at(v);
      }
      prev_unresolved = d.unresolved;
    }
  }
}

TEST(BitLevel, RefusesOutsideLimits) {
  EXPECT_THROW(bitlevel_distribution(coin(), 65), OracleRefusal);
  EXPECT_THROW(bitlevel_shuffle_check(5, 10), OracleRefusal);
  const auto wide = uniform(1000);
  EXPECT_THROW(bitlevel_distribution(wide, 20, 100), OracleRefusal);
}

TEST(BitLevelShuffle, TwoElementsOneBit) {
  const auto d = bitlevel_shuffle_check(2, 1);
  EXPECT_EQ(d.lower_at({0}), R(1, 2));
  EXPECT_EQ(d.lower_at({1}), R(1, 2));
  EXPECT_EQ(d.unresolved, 0);
}

TEST(BitLevelShuffle, ThreeElementsDepth48) {
  const auto d = bitlevel_shuffle_check(3, 48);
  for (std::uint64_t r = 0; r < 6; ++r) EXPECT_TRUE(d.brackets({r}, R(1, 6)));
  EXPECT_LE(d.unresolved, pow2_inverse(40));
}

TEST(BitLevelShuffle, BracketsCompositionalResult) {
  const auto exact = exact_shuffle_distribution(4);
  const auto d = bitlevel_shuffle_check(4, 30);
  for (const auto& [rank, m] : exact.mass) EXPECT_TRUE(d.brackets(rank, m));
}

TEST(Factorization, FisherYatesDrawsAreIndependent) {
  for (unsigned n = 2; n <= 4; ++n) {
    const auto r = shuffle_draw_factorization(n);
    EXPECT_TRUE(r.factorizes) << r.first_violation;
    EXPECT_EQ(r.cells_checked, n * factorial_u64(n - 1));
  }
}

TEST(Factorization, UniformValueAndTailBits) {
  for (std::uint64_t n = 1; n <= 4; ++n) {
    for (unsigned k = 1; k <= 3; ++k) {
      const auto r = value_rest_factorization(uniform(n), k, 40);
      EXPECT_TRUE(r.factorizes) << "n=" << n << " k=" << k << ": " << r.first_violation;
    }
  }
}

TEST(Factorization, BadCoinDoesNotFactorize) {
  const auto r = value_rest_factorization(controls::bad_coin(), 1, 8);
  EXPECT_FALSE(r.factorizes);
  EXPECT_FALSE(r.first_violation.empty());
}

TEST(TextFormat, ExactDistributionRoundTrip) {
  const auto d = exact_shuffle_distribution(3);
  const std::string text = to_text(d);
  EXPECT_EQ(text.substr(0, 6), "0 1/6\n");
  const auto parsed = parse_distribution_text(text);
  ASSERT_EQ(parsed.size(), 6u);
  for (const auto& [rank, m] : d.mass) {
    EXPECT_EQ(parsed.at(std::to_string(rank.rank)), m);
  }
}

TEST(TextFormat, IntervalDistribution) {
  const auto d = bitlevel_distribution(uniform(3), 4);
  EXPECT_EQ(to_text(d),
            "0 5/16 3/8\n1 5/16 3/8\n2 5/16 3/8\nunresolved 1/16\n");
}

}  // namespace
}  // namespace fyshuffle
