// prime_engine.hpp
// Prime generation and elementary prime arithmetic:
//   - PrimeTable: monolithic sieve, 1 bit per odd number plus the ascending prime list
//   - SegmentMembership: segmented sieve over an arbitrary window [lo, hi]
//   - is_prime_u64: deterministic Miller-Rabin for the full 64-bit range
//   - primorial, prime_support / radical, goldbach_index
//
// Bit encoding for odd-only bitsets:
//   odd number x  ->  bit index (x - 1) / 2   (so 1 -> 0, 3 -> 1, ...)

#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "pairjac/errors.hpp"

namespace pairjac {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// floor(sqrt(x)) for the whole u64 range.
constexpr u64 isqrt_u64(u64 x) {
    if (x < 2) return x;
    u64 r = 0;
    // Bit-by-bit; avoids floating point rounding at the top of the range.
    u64 bit = u64{1} << 62;
    while (bit > x) bit >>= 2;
    while (bit != 0) {
        if (x >= r + bit) {
            x -= r + bit;
            r = (r >> 1) + bit;
        } else {
            r >>= 1;
        }
        bit >>= 2;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Deterministic primality
// ---------------------------------------------------------------------------

namespace detail {

constexpr u64 mul_mod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

constexpr u64 pow_mod(u64 base, u64 exp, u64 m) {
    u64 result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

// Strong probable-prime test of odd n > 2 to base a.
constexpr bool strong_probable_prime(u64 n, u64 a) {
    a %= n;
    if (a == 0) return true;
    u64 d = n - 1;
    int s = std::countr_zero(d);
    d >>= s;
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int r = 1; r < s; ++r) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

} // namespace detail

// Miller-Rabin with the first twelve primes as bases; this witness set has no
// strong pseudoprime below 3.3 * 10^24, which covers every 64-bit input.
constexpr bool is_prime_u64(u64 x) {
    constexpr u64 kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    if (x < 2) return false;
    for (u64 p : kBases) {
        if (x == p) return true;
        if (x % p == 0) return false;
    }
    if (x < 41 * 41) return true;
    for (u64 a : kBases) {
        if (!detail::strong_probable_prime(x, a)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Monolithic sieve
// ---------------------------------------------------------------------------

struct SieveOptions {
    // Upper bound on bytes the table may occupy (bitset + prime list).
    u64 max_bytes = u64{2} << 30;
};

namespace detail {

// Rough byte footprint of a PrimeTable with the given limit.
inline u64 table_bytes(u64 limit) {
    const u64 bits = limit / 16 + 8;
    // pi(x) < 1.26 x / ln x for x > 1
    const double lx = limit > 16 ? std::log(static_cast<double>(limit)) : 2.0;
    const double primes = 1.26 * static_cast<double>(limit) / lx + 8.0;
    return bits + static_cast<u64>(primes) * sizeof(u64);
}

} // namespace detail

class PrimeTable;
PrimeTable sieve(u64 limit, const SieveOptions& opts = {});

// Primes in [0, limit] with O(1) membership. Immutable after construction.
class PrimeTable {
public:
    PrimeTable() = default;

    u64 limit() const noexcept { return limit_; }
    std::span<const u64> primes() const noexcept { return primes_; }
    std::size_t count() const noexcept { return primes_.size(); }

    // Precondition: x <= limit().
    bool contains(u64 x) const noexcept {
        if (x == 2) return limit_ >= 2;
        if ((x & 1) == 0 || x > limit_) return false;
        const u64 i = x >> 1;
        return (odd_bits_[i >> 6] >> (i & 63)) & 1;
    }

    // Membership for any x: table lookup inside the range, Miller-Rabin beyond it.
    bool is_prime(u64 x) const noexcept { return x <= limit_ ? contains(x) : is_prime_u64(x); }

    // p_k with 1-based k; k must be in [1, count()].
    u64 nth(std::size_t k) const { return primes_.at(k - 1); }

    // Number of primes <= x, for x <= limit().
    std::size_t pi(u64 x) const {
        return static_cast<std::size_t>(std::upper_bound(primes_.begin(), primes_.end(), x) - primes_.begin());
    }

    // Smallest prime > x within the table, or 0 when none is tabulated.
    u64 next_above(u64 x) const {
        auto it = std::upper_bound(primes_.begin(), primes_.end(), x);
        return it == primes_.end() ? 0 : *it;
    }

private:
    friend PrimeTable sieve(u64 limit, const SieveOptions& opts);

    u64 limit_ = 0;
    std::vector<u64> primes_;
    std::vector<u64> odd_bits_;
};

inline PrimeTable sieve(u64 limit, const SieveOptions& opts) {
    if (limit >= std::numeric_limits<u64>::max() - 128 || detail::table_bytes(limit) > opts.max_bytes) {
        throw ResourceError("sieve: limit " + std::to_string(limit) + " exceeds memory budget of " +
                            std::to_string(opts.max_bytes) + " bytes");
    }
    PrimeTable t;
    t.limit_ = limit;
    const u64 nbits = limit / 2 + 1;
    t.odd_bits_.assign((nbits + 63) / 64, ~u64{0});
    auto clear = [&](u64 i) { t.odd_bits_[i >> 6] &= ~(u64{1} << (i & 63)); };
    clear(0); // 1 is not prime
    for (u64 p = 3; p * p <= limit; p += 2) {
        const u64 ip = p >> 1;
        if (!((t.odd_bits_[ip >> 6] >> (ip & 63)) & 1)) continue;
        for (u64 m = p * p; m <= limit; m += 2 * p) clear(m >> 1);
    }
    if (limit >= 2) t.primes_.push_back(2);
    for (u64 w = 0; w < t.odd_bits_.size(); ++w) {
        u64 word = t.odd_bits_[w];
        while (word) {
            const u64 i = w * 64 + static_cast<u64>(std::countr_zero(word));
            word &= word - 1;
            const u64 x = 2 * i + 1;
            if (x > limit) break;
            t.primes_.push_back(x);
        }
    }
    return t;
}

// ---------------------------------------------------------------------------
// Segmented sieve
// ---------------------------------------------------------------------------

// Default segment width in integers (a 128 KiB bitset, L2-sized).
inline constexpr u64 kDefaultSegmentWidth = u64{1} << 20;

// Primality of every integer in [lo, hi], 1 bit per integer.
class SegmentMembership {
public:
    SegmentMembership() = default;
    SegmentMembership(u64 lo, u64 hi) : lo_(lo), hi_(hi), bits_((hi - lo) / 64 + 1, 0) {}

    u64 lo() const noexcept { return lo_; }
    u64 hi() const noexcept { return hi_; }
    bool in_range(u64 x) const noexcept { return x >= lo_ && x <= hi_; }

    // Precondition: in_range(x).
    bool contains(u64 x) const noexcept {
        const u64 i = x - lo_;
        return (bits_[i >> 6] >> (i & 63)) & 1;
    }

    std::vector<u64> primes() const {
        std::vector<u64> out;
        for (u64 w = 0; w < bits_.size(); ++w) {
            u64 word = bits_[w];
            while (word) {
                out.push_back(lo_ + w * 64 + static_cast<u64>(std::countr_zero(word)));
                word &= word - 1;
            }
        }
        return out;
    }

private:
    friend SegmentMembership segmented_sieve(u64 lo, u64 hi, const PrimeTable& base);

    u64 lo_ = 0;
    u64 hi_ = 0;
    std::vector<u64> bits_;
};

// Requires base.limit()^2 >= hi.
inline SegmentMembership segmented_sieve(u64 lo, u64 hi, const PrimeTable& base) {
    if (lo > hi) throw PreconditionError("segmented_sieve: lo > hi");
    if (static_cast<u128>(base.limit()) * base.limit() < hi) {
        throw PreconditionError("segmented_sieve: base table limit " + std::to_string(base.limit()) +
                                " too small for hi = " + std::to_string(hi));
    }
    SegmentMembership seg(lo, hi);
    const u64 width = hi - lo + 1;
    for (u64 i = 0; i < width; ++i) seg.bits_[i >> 6] |= u64{1} << (i & 63);
    auto clear = [&](u64 x) {
        const u64 i = x - lo;
        seg.bits_[i >> 6] &= ~(u64{1} << (i & 63));
    };
    for (u64 x = lo; x <= std::min<u64>(hi, 1); ++x) clear(x);
    for (u64 p : base.primes()) {
        if (static_cast<u128>(p) * p > hi) break;
        // first multiple of p in [lo, hi] that is >= p^2
        u64 start = std::max<u64>(p * p, (lo + p - 1) / p * p);
        for (u64 m = start; m <= hi; m += p) {
            clear(m);
            if (m > hi - p) break;
        }
    }
    return seg;
}

// ---------------------------------------------------------------------------
// Primorials, radicals, prime support
// ---------------------------------------------------------------------------

// The first `count` primes, by trial division (intended for small counts).
inline std::vector<u64> first_primes(std::size_t count) {
    std::vector<u64> out;
    out.reserve(count);
    for (u64 x = 2; out.size() < count; ++x) {
        bool prime = true;
        for (u64 p : out) {
            if (p * p > x) break;
            if (x % p == 0) {
                prime = false;
                break;
            }
        }
        if (prime) out.push_back(x);
    }
    return out;
}

struct Primorial {
    unsigned index = 0;
    u64 value = 1;
};

// p_n# = product of the first n primes. Fails instead of wrapping.
inline Primorial primorial(unsigned n) {
    if (n < 1) throw DomainError("primorial: n must be >= 1");
    Primorial out{n, 1};
    for (u64 p : first_primes(n)) {
        if (__builtin_mul_overflow(out.value, p, &out.value)) {
            throw OverflowError("primorial: p_" + std::to_string(n) + "# exceeds 64-bit range");
        }
    }
    return out;
}

// Distinct primes dividing n, ascending. support(1) is empty.
inline std::vector<u64> prime_support(u64 n) {
    if (n == 0) throw DomainError("prime_support: n must be >= 1");
    std::vector<u64> out;
    for (u64 p = 2; p <= n / p; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Product of the distinct primes dividing n.
inline u64 radical(u64 n) {
    u64 r = 1;
    for (u64 p : prime_support(n)) r *= p;
    return r;
}

// ---------------------------------------------------------------------------
// Goldbach window index
// ---------------------------------------------------------------------------

// Unique k with p_k^2 + p_k <= two_n < p_{k+1}^2 + p_{k+1}, using a table
// that must hold primes beyond sqrt(two_n).
inline unsigned goldbach_index(u64 two_n, const PrimeTable& table) {
    if (two_n < 12) throw DomainError("goldbach_index: 2n must be >= 12, got " + std::to_string(two_n));
    if (two_n % 2 != 0) throw DomainError("goldbach_index: 2n must be even, got " + std::to_string(two_n));
    const u64 r = isqrt_u64(two_n);
    if (table.limit() < r) throw PreconditionError("goldbach_index: prime table too small");
    // p^2 + p <= two_n  <=>  p <= r' with r' <= sqrt(two_n); count primes satisfying it
    std::size_t k = table.pi(r);
    while (k > 0) {
        const u64 p = table.nth(k);
        if (p * p + p <= two_n) break;
        --k;
    }
    return static_cast<unsigned>(k);
}

inline unsigned goldbach_index(u64 two_n) {
    if (two_n < 12) throw DomainError("goldbach_index: 2n must be >= 12, got " + std::to_string(two_n));
    return goldbach_index(two_n, sieve(isqrt_u64(two_n) + 64));
}

} // namespace pairjac
