#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "pairjac/verifiers.hpp"

using namespace pairjac;

namespace {

std::vector<GoldbachWitness> goldbach_list(u64 lo, u64 hi, const CampaignOptions& opts = {}) {
    std::vector<GoldbachWitness> out;
    const auto r = verify_goldbach(lo, hi, [&](const GoldbachWitness& w) { out.push_back(w); }, opts);
    EXPECT_TRUE(r.verified());
    EXPECT_EQ(r.witnesses, out.size());
    return out;
}

std::vector<PairWitness> pairs_list(u64 max_d, u64 p_min, u64 p_max, const CampaignOptions& opts = {}) {
    std::vector<PairWitness> out;
    const auto r = verify_pairs(max_d, p_min, p_max, [&](const PairWitness& w) { out.push_back(w); }, opts);
    EXPECT_TRUE(r.verified());
    return out;
}

std::string text(const auto& list) {
    std::string s;
    for (const auto& w : list) s += format_line(w);
    return s;
}

} // namespace

TEST(Goldbach, SmallRangeDecompositions) {
    const auto list = goldbach_list(12, 28);
    EXPECT_EQ(text(list), "12 5 7\n14 7 7\n16 5 11\n18 5 13\n20 7 13\n22 5 17\n24 5 19\n26 7 19\n28 5 23\n");
    for (const auto& w : list) {
        EXPECT_EQ(w.k_n, 2u);
        EXPECT_EQ(w.p_k, 3u);
    }
}

TEST(Goldbach, Preconditions) {
    auto sink = [](const GoldbachWitness&) {};
    EXPECT_THROW(verify_goldbach(10, 20, sink), DomainError);
    EXPECT_THROW(verify_goldbach(13, 20, sink), DomainError);
    EXPECT_THROW(verify_goldbach(20, 12, sink), DomainError);
}

// Naive scan straight from the definition, trial division only.
TEST(Goldbach, MatchesNaiveScanTo20000) {
    const auto list = goldbach_list(12, 20000);
    ASSERT_EQ(list.size(), (20000 - 12) / 2 + 1);
    const auto primes = oracle::trial_primes_upto(200);
    for (const auto& w : list) {
        std::size_t k = 0;
        while (primes[k + 1] * primes[k + 1] + primes[k + 1] <= w.two_n) ++k;
        const u64 pk = primes[k];
        ASSERT_EQ(w.p_k, pk);
        u64 q1 = 0;
        for (u64 x = pk + 1; x < pk * pk && !q1; ++x)
            if (oracle::trial_prime(x) && oracle::trial_prime(w.two_n - x)) q1 = x;
        ASSERT_EQ(w.q1, q1) << w.two_n;
        ASSERT_EQ(check_goldbach_witness(w), "") << w.two_n;
    }
}

TEST(Goldbach, UnitWidthAndWorkersDoNotChangeOutput) {
    const auto ref = text(goldbach_list(12, 200'000));
    for (u64 width : {2, 998, 65536}) {
        for (unsigned workers : {1u, 3u}) {
            CampaignOptions opts;
            opts.unit_width = width;
            opts.workers = workers;
            if (width == 2 && workers == 1) continue;
            ASSERT_EQ(text(goldbach_list(12, 200'000, opts)), ref) << width << "/" << workers;
        }
    }
}

TEST(Goldbach, ResumeSkipsCompletedInputs) {
    const auto full = goldbach_list(12, 5000);
    CampaignOptions opts;
    opts.resume_after = CampaignCursor{1000, 0};
    const auto tail = goldbach_list(12, 5000, opts);
    ASSERT_FALSE(tail.empty());
    EXPECT_EQ(tail.front().two_n, 1002u);
    EXPECT_EQ(text(tail), text(std::vector(full.begin() + (1002 - 12) / 2, full.end())));
}

TEST(Goldbach, DigestIsOverFormattedLines) {
    std::string s;
    const auto r = verify_goldbach(12, 28, [&](const GoldbachWitness& w) { s += format_line(w); });
    EXPECT_EQ(r.digest, Sha256::of(s));
}

TEST(Goldbach, SampledMinimalityNearOneMillion) {
    const auto list = goldbach_list(990'000, 1'000'000);
    for (std::size_t i = 0; i < list.size(); i += 97) {
        ASSERT_EQ(check_goldbach_witness(list[i]), "");
        ASSERT_EQ(check_goldbach_minimal(list[i]), "");
    }
}

TEST(Pairs, Examples) {
    const auto list = pairs_list(2, 3, 6);
    ASSERT_EQ(list.size(), 2u);
    EXPECT_EQ(format_line(list[0]), "2 3 5 7\n");
    EXPECT_EQ(format_line(list[1]), "2 5 11 13\n");
}

TEST(Pairs, OrderAndCoverage) {
    const auto list = pairs_list(10, 3, 60);
    std::vector<std::pair<u64, u64>> keys;
    for (const auto& w : list) keys.emplace_back(w.two_n, w.p);
    EXPECT_TRUE(std::is_sorted(keys.begin(), keys.end()));
    std::size_t expect = 0;
    for (u64 d = 2; d <= 10; d += 2)
        for (u64 p : oracle::trial_primes_upto(59))
            if (p >= 3 && p > d) ++expect;
    EXPECT_EQ(list.size(), expect);
}

TEST(Pairs, MatchesNaiveScan) {
    for (const auto& w : pairs_list(30, 3, 2000)) {
        u64 q1 = 0;
        for (u64 x = w.p + 1; x < w.p * w.p && !q1; ++x)
            if (oracle::trial_prime(x) && oracle::trial_prime(x + w.two_n)) q1 = x;
        ASSERT_EQ(w.q1, q1) << w.two_n << " " << w.p;
        ASSERT_EQ(w.q2, q1 + w.two_n);
        ASSERT_EQ(check_pair_witness(w), "");
    }
}

TEST(Pairs, PrimeLowerBoundNeedNotBePrime) {
    EXPECT_EQ(text(pairs_list(4, 4, 40)), text(pairs_list(4, 5, 40)));
}

TEST(Pairs, WorkersAndUnitsDoNotChangeOutput) {
    const auto ref = text(pairs_list(20, 3, 5000));
    CampaignOptions opts;
    opts.workers = 4;
    opts.unit_width = 37;
    EXPECT_EQ(text(pairs_list(20, 3, 5000, opts)), ref);
}

TEST(Checkers, RejectBrokenWitnesses) {
    GoldbachWitness g{20, 2, 3, 7, 13};
    EXPECT_EQ(check_goldbach_witness(g), "");
    g.q2 = 11;
    EXPECT_NE(check_goldbach_witness(g), "");
    g = {20, 2, 3, 3, 17};
    EXPECT_NE(check_goldbach_witness(g), "");
    g = {14, 2, 3, 7, 7};
    EXPECT_EQ(check_goldbach_minimal(g), "");
    g = {16, 2, 3, 5, 11};
    EXPECT_EQ(check_goldbach_minimal(g), "");
    PairWitness p{2, 5, 17, 19};
    EXPECT_EQ(check_pair_witness(p), "");
    EXPECT_NE(check_pair_minimal(p), "");
    p = {2, 3, 11, 13};
    EXPECT_NE(check_pair_witness(p), ""); // q1 >= p^2
}
