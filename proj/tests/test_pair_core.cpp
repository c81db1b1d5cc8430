#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "pairjac/pair_core.hpp"

using namespace pairjac;

TEST(DividesPair, Examples) {
    EXPECT_TRUE(divides_pair(3, {6, 7}));
    EXPECT_FALSE(divides_pair(6, {2, 3})); // 6 | 2*3 but divides neither coordinate
    EXPECT_FALSE(divides_pair(5, {3, 4}));
    EXPECT_TRUE(divides_pair(-3, {-6, 1}));
    EXPECT_TRUE(divides_pair(7, {0, 1}));
    EXPECT_THROW(divides_pair(0, {1, 2}), DomainError);
}

TEST(CoprimePair, Examples) {
    EXPECT_TRUE(coprime_pair(1, {0, 0}));
    EXPECT_TRUE(coprime_pair(1, {12, -35}));
    EXPECT_TRUE(coprime_pair(6, {5, 7}));
    EXPECT_FALSE(coprime_pair(6, {2, 3}));
    EXPECT_TRUE(coprime_pair(30, {7, -23}));
    EXPECT_FALSE(coprime_pair(5, {0, 1})); // gcd(0, 5) = 5
    EXPECT_THROW(coprime_pair(0, {1, 1}), DomainError);
}

TEST(PairProgression, MembersExcludeBase) {
    const PairProgression prog({5, -25}, 19);
    EXPECT_EQ(prog.member(1), (IntegerPair{6, -24}));
    EXPECT_EQ(prog.member(19), (IntegerPair{24, -6}));
    for (std::uint64_t i = 1; i <= prog.length(); ++i) EXPECT_EQ(prog.member(i).difference(), -30);
}

TEST(FindCoprimeMember, Examples) {
    EXPECT_EQ(find_coprime_member(PairProgression({0, 0}, 3), 2), 1u);
    EXPECT_EQ(find_coprime_member(PairProgression({1, 1}, 1), 2), std::nullopt);
    // <5, 5 - 30>_19: q = 1 gives (6, -24); q = 2 gives (7, -23)
    const auto q = find_coprime_member(PairProgression({5, 5 - 30}, 19), 30);
    ASSERT_TRUE(q.has_value());
    EXPECT_EQ(*q, 2u);
    EXPECT_THROW(find_coprime_member(PairProgression({0, 0}, 3), 0), DomainError);
}

TEST(FindCoprimeMember, MatchesExhaustiveScan) {
    for (std::int64_t a = -40; a <= 40; a += 3) {
        for (std::int64_t b = -40; b <= 40; b += 2) {
            const PairProgression prog({a, b}, 19);
            std::optional<std::uint64_t> expect;
            for (std::uint64_t q = 1; q <= 19 && !expect; ++q)
                if (std::gcd(30, std::abs(a + (std::int64_t)q)) == 1 && std::gcd(30, std::abs(b + (std::int64_t)q)) == 1) expect = q;
            ASSERT_EQ(find_coprime_member(prog, 30), expect);
        }
    }
}

// Quantified properties over random pairs and divisors.
TEST(PairProperties, RandomSampling) {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<std::int64_t> coord(-10'000, 10'000);
    std::uniform_int_distribution<std::int64_t> div(1, 400);
    for (int i = 0; i < 20'000; ++i) {
        const IntegerPair pr{coord(rng), coord(rng)};
        const std::int64_t k = div(rng) * (i % 2 ? 1 : -1);
        // k | (a,b) implies k | a*b
        if (divides_pair(k, pr)) {
            ASSERT_EQ((pr.a * pr.b) % k, 0);
        }
        // primes are characterised by p | a*b  =>  p | (a,b)
        if (oracle::trial_prime(static_cast<std::uint64_t>(std::abs(k)))) {
            ASSERT_EQ((pr.a * pr.b) % k == 0, divides_pair(k, pr));
        }
        // coprime to k implies no divisor d > 1 of k divides the pair
        if (coprime_pair(k, pr)) {
            for (std::int64_t d = 2; d <= std::abs(k); ++d)
                if (k % d == 0) {
                    ASSERT_FALSE(divides_pair(d, pr));
                }
        }
    }
}

TEST(PairProperties, EvenDifferenceMembersShareParity) {
    for (std::int64_t a = -9; a <= 9; ++a)
        for (std::int64_t b = a - 10; b <= a + 10; b += 2) {
            const PairProgression prog({a, b}, 12);
            for (std::uint64_t i = 1; i <= 12; ++i) {
                const auto m = prog.member(i);
                ASSERT_EQ((m.a % 2 + 2) % 2, (m.b % 2 + 2) % 2);
            }
        }
}
