// paired_jacobsthal.hpp
// The paired Jacobsthal function j2(n) and its primorial restriction
// h2(n) = j2(p_n#), computed two independent ways:
//
//   j2_oracle_modulus / j2_oracle / h2_oracle
//       enumerate every base pair (a,b) over one period with 2 | (b - a) and
//       walk q = 1, 2, ... to the first member coprime to the modulus;
//       j2 is the largest such q.
//   h2_search / j2
//       longest interval coverable by residue classes (residue_cover.hpp),
//       plus one.
//
// Both return the value together with a witness base pair.

#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "pairjac/errors.hpp"
#include "pairjac/pair_core.hpp"
#include "pairjac/prime_engine.hpp"
#include "pairjac/residue_cover.hpp"

namespace pairjac {

// value m with witness (a,b): 2 | (b - a), (a,b) and (a+m, b+m) are coprime to
// n, and (a+q, b+q) is not for 0 < q < m.
struct PairedJacobsthalResult {
    u64 value = 1;
    IntegerPair witness;
    // Filled by the cover search only.
    std::optional<ResidueCoverSystem> system;
    u64 nodes = 0;
};

// ---------------------------------------------------------------------------
// Oracle
// ---------------------------------------------------------------------------

struct OracleOptions {
    // Bound on span^3, where span is the enumerated period.
    u64 max_work = u64{2310} * 2310 * 2310;
    // For odd moduli, enumerate (a,b) over [0, 2m)^2 with a == b (mod 2)
    // instead of [0, m)^2 unrestricted. Both give the same value.
    bool enforce_even_difference = false;
};

// j2 evaluated by exhaustion over one period of `modulus` itself (which need
// not be squarefree). Ties resolve to the lexicographically smallest (a,b).
inline PairedJacobsthalResult j2_oracle_modulus(u64 modulus, const OracleOptions& opts = {}) {
    if (modulus == 0) throw DomainError("j2_oracle: n must be >= 1");
    const bool parity_linked = modulus % 2 == 0 || opts.enforce_even_difference;
    const u64 span = modulus % 2 == 0 ? modulus : (opts.enforce_even_difference ? 2 * modulus : modulus);
    if (span > 1u << 20 || span * span * span > opts.max_work) {
        throw ResourceError("j2_oracle: period " + std::to_string(span) + " exceeds oracle budget");
    }
    std::vector<unsigned char> cop(span);
    for (u64 x = 0; x < span; ++x) cop[x] = std::gcd(x, modulus) == 1;

    PairedJacobsthalResult best{0, {0, 0}, std::nullopt, 0};
    for (u64 a = 0; a < span; ++a) {
        for (u64 b = parity_linked ? (a & 1) : 0; b < span; b += parity_linked ? 2 : 1) {
            u64 q = 1, xa = a + 1, xb = b + 1;
            for (;; ++q) {
                if (xa >= span) xa -= span;
                if (xb >= span) xb -= span;
                if (cop[xa] && cop[xb]) break;
                if (q > span) throw std::logic_error("j2_oracle: no coprime member within one period");
                ++xa;
                ++xb;
            }
            if (q > best.value) best.value = q, best.witness = {static_cast<i64>(a), static_cast<i64>(b)};
        }
    }
    if (!best.witness.even_difference()) best.witness.b += static_cast<i64>(modulus); // odd modulus
    return best;
}

// Oracle on the radical of n.
inline PairedJacobsthalResult j2_oracle(u64 n, const OracleOptions& opts = {}) {
    if (n == 0) throw DomainError("j2_oracle: n must be >= 1");
    return j2_oracle_modulus(radical(n), opts);
}

inline PairedJacobsthalResult h2_oracle(unsigned n, const OracleOptions& opts = {}) {
    return j2_oracle_modulus(primorial(n).value, opts);
}

// ---------------------------------------------------------------------------
// Cover search
// ---------------------------------------------------------------------------

// j2 for the squarefree support {2 if has_two} + odd_primes.
inline PairedJacobsthalResult j2_support(bool has_two, std::span<const u64> odd_primes,
                                         const CoverSearchOptions& opts = {}) {
    const CoverResult cover = max_cover(has_two, odd_primes, opts);
    PairedJacobsthalResult out;
    out.value = cover.length + 1;
    out.system = to_system(cover.assignment, odd_primes, cover.length);
    out.witness = out.system->realize();
    out.nodes = cover.nodes;
    return out;
}

// j2(n) through the distinct primes of n.
inline PairedJacobsthalResult j2(u64 n, const CoverSearchOptions& opts = {}) {
    if (n == 0) throw DomainError("j2: n must be >= 1");
    auto support = prime_support(n);
    const bool has_two = !support.empty() && support.front() == 2;
    if (has_two) support.erase(support.begin());
    return j2_support(has_two, support, opts);
}

inline PairedJacobsthalResult h2_search(unsigned n, const CoverSearchOptions& opts = {}) {
    if (n < 1) throw DomainError("h2_search: n must be >= 1");
    auto primes = first_primes(n);
    primes.erase(primes.begin());
    return j2_support(true, primes, opts);
}

// ---------------------------------------------------------------------------
// Upper bound check h2(n) < p_n^2 - p_n
// ---------------------------------------------------------------------------

struct BoundCheckRow {
    unsigned n = 0;
    u64 prime = 0;                 // p_n
    u64 bound = 0;                 // p_n^2 - p_n
    std::optional<u64> h2;         // exact value when the search completed
    u64 lower_bound = 0;           // proven h2 >= lower_bound (equals *h2 when complete)
    std::optional<bool> holds;     // h2 < bound; unknown when incomplete and not refuted
    std::optional<PairedJacobsthalResult> result;
    double seconds = 0;

    bool complete() const noexcept { return h2.has_value(); }
};

inline BoundCheckRow check_bound_row(unsigned n, const CoverSearchOptions& opts = {}) {
    BoundCheckRow row;
    row.n = n;
    row.prime = first_primes(n).back();
    row.bound = row.prime * row.prime - row.prime;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        auto r = h2_search(n, opts);
        row.h2 = r.value;
        row.lower_bound = r.value;
        row.holds = r.value < row.bound;
        row.result = std::move(r);
    } catch (const SearchBudgetExceeded& e) {
        row.lower_bound = e.lower_bound();
        // A lower bound reaching the bound already refutes it.
        if (row.lower_bound >= row.bound) row.holds = false;
    }
    row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return row;
}

// One row per n in [n_lo, n_hi]; budget exhaustion marks a row incomplete.
inline std::vector<BoundCheckRow> check_bound(unsigned n_lo, unsigned n_hi, const CoverSearchOptions& opts = {}) {
    if (n_lo < 3 || n_lo > n_hi) throw DomainError("check_bound: need 3 <= n_lo <= n_hi");
    std::vector<BoundCheckRow> rows;
    for (unsigned n = n_lo; n <= n_hi; ++n) rows.push_back(check_bound_row(n, opts));
    return rows;
}

} // namespace pairjac
