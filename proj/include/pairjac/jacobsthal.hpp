// jacobsthal.hpp
// Ordinary Jacobsthal function j(n): the largest gap between consecutive
// integers coprime to n. Only the distinct primes of n matter, so every scan
// runs over one period of rad(n).

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pairjac/errors.hpp"
#include "pairjac/prime_engine.hpp"

namespace pairjac {

struct GapScanResult {
    u64 value = 1;
    // a with a _|_ n, a + value _|_ n and nothing coprime strictly between.
    std::int64_t witness = 0;
};

struct JacobsthalOptions {
    // Largest radical whose period is scanned.
    u64 max_period = u64{1} << 32;
};

// j over the squarefree support `primes` (distinct primes, any order).
inline GapScanResult j_ordinary_support(std::span<const u64> primes, const JacobsthalOptions& opts = {}) {
    u64 period = 1;
    for (u64 p : primes) {
        if (__builtin_mul_overflow(period, p, &period) || period > opts.max_period) {
            throw ResourceError("j_ordinary: radical exceeds period budget of " + std::to_string(opts.max_period));
        }
    }
    if (period == 1) return {1, 0};
    auto is_coprime = [&](u64 x) {
        for (u64 p : primes)
            if (x % p == 0) return false;
        return true;
    };
    // 1 and period + 1 are both coprime; walk the gaps in between.
    GapScanResult best{0, 1};
    u64 last = 1;
    for (u64 x = 2; x <= period + 1; ++x) {
        if (!is_coprime(x)) continue;
        if (x - last > best.value) best = {x - last, static_cast<std::int64_t>(last)};
        last = x;
    }
    return best;
}

inline GapScanResult j_ordinary(u64 n, const JacobsthalOptions& opts = {}) {
    if (n == 0) throw DomainError("j_ordinary: n must be >= 1");
    const auto support = prime_support(n);
    return j_ordinary_support(support, opts);
}

// j(p_n#), taking the first n primes as the support directly.
inline u64 h_ordinary(unsigned n, const JacobsthalOptions& opts = {}) {
    if (n == 0) throw DomainError("h_ordinary: n must be >= 1");
    const auto support = first_primes(n);
    return j_ordinary_support(support, opts).value;
}

} // namespace pairjac
