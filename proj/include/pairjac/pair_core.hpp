// pair_core.hpp
// Weak divisibility on integer pairs and paired progressions.
//
//   k | (a,b)   iff  k | a  or  k | b
//   k _|_ (a,b) iff  gcd(k,a) = 1 and gcd(k,b) = 1
//
// <a,b>_k is the progression (a+1,b+1), ..., (a+k,b+k); the base pair is not a member.
// Negative coordinates are allowed everywhere; gcd(0, k) = |k|.

#pragma once

#include <cstdint>
#include <numeric>
#include <optional>

#include "pairjac/errors.hpp"

namespace pairjac {

using i64 = std::int64_t;

struct IntegerPair {
    i64 a = 0;
    i64 b = 0;

    constexpr i64 difference() const noexcept { return b - a; }
    constexpr bool even_difference() const noexcept { return (b - a) % 2 == 0; }

    friend constexpr bool operator==(const IntegerPair&, const IntegerPair&) = default;
};

namespace detail {

constexpr std::uint64_t abs_u64(i64 x) noexcept {
    return x < 0 ? static_cast<std::uint64_t>(0) - static_cast<std::uint64_t>(x) : static_cast<std::uint64_t>(x);
}

inline void require_nonzero(i64 k, const char* op) {
    if (k == 0) throw DomainError(std::string(op) + ": k must be nonzero");
}

} // namespace detail

constexpr bool divides(i64 k, i64 x) noexcept { return detail::abs_u64(x) % detail::abs_u64(k) == 0; }

constexpr bool coprime(i64 k, i64 x) noexcept {
    return std::gcd(detail::abs_u64(k), detail::abs_u64(x)) == 1;
}

inline bool divides_pair(i64 k, IntegerPair pair) {
    detail::require_nonzero(k, "divides_pair");
    return divides(k, pair.a) || divides(k, pair.b);
}

inline bool coprime_pair(i64 k, IntegerPair pair) {
    detail::require_nonzero(k, "coprime_pair");
    return coprime(k, pair.a) && coprime(k, pair.b);
}

class PairProgression {
public:
    constexpr PairProgression(IntegerPair base, std::uint64_t length) noexcept : base_(base), length_(length) {}

    constexpr IntegerPair base() const noexcept { return base_; }
    constexpr std::uint64_t length() const noexcept { return length_; }

    // i in [1, length()].
    constexpr IntegerPair member(std::uint64_t i) const noexcept {
        const auto d = static_cast<i64>(i);
        return {base_.a + d, base_.b + d};
    }

private:
    IntegerPair base_;
    std::uint64_t length_;
};

// Smallest q in [1, length] with n _|_ member(q).
inline std::optional<std::uint64_t> find_coprime_member(const PairProgression& prog, std::uint64_t n) {
    if (n == 0) throw DomainError("find_coprime_member: n must be >= 1");
    const auto k = static_cast<i64>(n);
    for (std::uint64_t q = 1; q <= prog.length(); ++q) {
        if (coprime_pair(k, prog.member(q))) return q;
    }
    return std::nullopt;
}

} // namespace pairjac
