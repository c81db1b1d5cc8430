#include <gtest/gtest.h>

#include <map>
#include <numeric>

#include "oracles.hpp"
#include "pairjac/jacobsthal.hpp"

using namespace pairjac;

TEST(JOrdinary, Examples) {
    EXPECT_EQ(j_ordinary(1).value, 1u);
    EXPECT_EQ(j_ordinary(2).value, 2u);
    EXPECT_EQ(j_ordinary(30).value, 6u);
    EXPECT_EQ(j_ordinary(30).witness, 1); // gap 1 -> 7
    EXPECT_THROW(j_ordinary(0), DomainError);
}

TEST(JOrdinary, WitnessIsAMaximalGap) {
    for (u64 n = 2; n <= 3000; ++n) {
        const auto r = j_ordinary(n);
        auto cop = [&](std::int64_t x) { return std::gcd(static_cast<u64>(x), n) == 1; };
        ASSERT_TRUE(cop(r.witness)) << n;
        ASSERT_TRUE(cop(r.witness + static_cast<std::int64_t>(r.value))) << n;
        for (u64 q = 1; q < r.value; ++q) ASSERT_FALSE(cop(r.witness + static_cast<std::int64_t>(q))) << n;
    }
}

// Min-form definition against the gap scan.
TEST(JOrdinary, MinFormEqualsGapScanUpTo10k) {
    std::map<u64, u64> by_radical;
    for (u64 n = 1; n <= 10'000; ++n) {
        // the sliding-window oracle runs over one period of the radical
        const u64 rad = radical(n);
        auto [it, fresh] = by_radical.try_emplace(rad, 0);
        if (fresh) it->second = oracle::jacobsthal_min_form(rad);
        ASSERT_EQ(j_ordinary(n).value, it->second) << n;
    }
}

TEST(JOrdinary, DependsOnlyOnRadical) {
    for (u64 n = 1; n <= 5000; ++n) ASSERT_EQ(j_ordinary(n).value, j_ordinary(radical(n)).value) << n;
}

TEST(JOrdinary, PeriodBudget) {
    EXPECT_THROW(j_ordinary(2 * 3 * 5 * 7 * 11 * 13, JacobsthalOptions{1000}), ResourceError);
}

TEST(HOrdinary, FirstPrimorials) {
    // frozen from the min-form oracle over residues mod p_n#
    const u64 expect[] = {2, 4, 6, 10, 14};
    for (unsigned n = 1; n <= 5; ++n) {
        EXPECT_EQ(h_ordinary(n), expect[n - 1]);
        EXPECT_EQ(h_ordinary(n), oracle::jacobsthal_min_form(primorial(n).value));
    }
    EXPECT_EQ(h_ordinary(6), 22u);
    EXPECT_EQ(h_ordinary(7), 26u);
}
