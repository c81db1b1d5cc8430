// verifiers.hpp
// Campaigns over the tightened Goldbach and tightened prime-pairs statements.
//
//   Goldbach: for every even 2n >= 12 let k be the index with
//             p_k^2 + p_k <= 2n < p_{k+1}^2 + p_{k+1}; find the smallest prime
//             q1 in (p_k, p_k^2) with 2n - q1 prime.
//   Pairs:    for every even d and prime p > d, find the smallest prime q1 in
//             (p, p^2) with q1 + d prime.
//
// Campaigns are cut into work units that run on a worker pool; results are
// handed to the sink strictly in ascending input order, so the emitted stream
// (and its digest) does not depend on the worker count.

#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "pairjac/digest.hpp"
#include "pairjac/errors.hpp"
#include "pairjac/prime_engine.hpp"

namespace pairjac {

struct GoldbachWitness {
    u64 two_n = 0;
    unsigned k_n = 0;
    u64 p_k = 0;
    u64 q1 = 0;
    u64 q2 = 0;
};

struct PairWitness {
    u64 two_n = 0; // the difference d
    u64 p = 0;
    u64 q1 = 0;
    u64 q2 = 0;
};

// goldbach.lis line: "<2n> <q1> <q2>\n"
inline std::string format_line(const GoldbachWitness& w) {
    return std::to_string(w.two_n) + ' ' + std::to_string(w.q1) + ' ' + std::to_string(w.q2) + '\n';
}

// pairs.lis line: "<2n> <p> <q1> <q2>\n"
inline std::string format_line(const PairWitness& w) {
    return std::to_string(w.two_n) + ' ' + std::to_string(w.p) + ' ' + std::to_string(w.q1) + ' ' +
           std::to_string(w.q2) + '\n';
}

// Position inside a campaign. Goldbach uses {2n, 0}; pairs use {2n, p}.
struct CampaignCursor {
    u64 primary = 0;
    u64 secondary = 0;

    friend constexpr auto operator<=>(const CampaignCursor&, const CampaignCursor&) = default;
};

struct CampaignFailure {
    u64 two_n = 0;
    u64 p = 0; // pairs only
};

struct VerificationReport {
    std::string campaign;
    std::string range;
    u64 witnesses = 0;
    std::vector<CampaignFailure> failures;
    double seconds = 0;
    std::string digest; // SHA-256 of the formatted witness lines emitted by this run

    bool verified() const noexcept { return failures.empty(); }
};

struct CampaignOptions {
    unsigned workers = 1;
    // Inputs per work unit (2n values span for Goldbach, primes p for pairs).
    u64 unit_width = kDefaultSegmentWidth;
    // How far below a Goldbach unit the q2 segment reaches.
    u64 q2_margin = u64{1} << 16;
    SieveOptions sieve{};
    // Skip every input at or before this cursor.
    std::optional<CampaignCursor> resume_after;
};

namespace detail {

// Runs compute(unit) on up to `workers` threads, delivering results in unit order.
template <class Unit, class Compute, class Deliver>
void run_ordered(const std::vector<Unit>& units, unsigned workers, Compute&& compute, Deliver&& deliver) {
    using Result = decltype(compute(units.front()));
    workers = std::max(1u, workers);
    const std::size_t window = static_cast<std::size_t>(workers) * 2;
    for (std::size_t base = 0; base < units.size(); base += window) {
        const std::size_t n = std::min(window, units.size() - base);
        std::vector<std::optional<Result>> results(n);
        if (workers == 1) {
            for (std::size_t i = 0; i < n; ++i) results[i] = compute(units[base + i]);
        } else {
            std::vector<std::exception_ptr> errors(workers);
            std::vector<std::thread> pool;
            for (unsigned w = 0; w < workers; ++w) {
                pool.emplace_back([&, w] {
                    try {
                        for (std::size_t i = w; i < n; i += workers) results[i] = compute(units[base + i]);
                    } catch (...) {
                        errors[w] = std::current_exception();
                    }
                });
            }
            for (auto& t : pool) t.join();
            for (auto& e : errors)
                if (e) std::rethrow_exception(e);
        }
        for (std::size_t i = 0; i < n; ++i) deliver(units[base + i], std::move(*results[i]));
    }
}

struct GoldbachUnit {
    u64 lo, hi; // even, inclusive
};

struct GoldbachUnitResult {
    std::vector<GoldbachWitness> witnesses;
    std::vector<CampaignFailure> failures;
};

inline GoldbachUnitResult goldbach_unit(const PrimeTable& base, const GoldbachUnit& unit, u64 q2_margin) {
    GoldbachUnitResult out;
    const u64 seg_lo = unit.lo > q2_margin ? unit.lo - q2_margin : 0;
    const SegmentMembership seg = segmented_sieve(seg_lo, unit.hi, base);
    auto prime = [&](u64 x) { return seg.in_range(x) ? seg.contains(x) : base.is_prime(x); };

    const auto primes = base.primes();
    std::size_t k = goldbach_index(unit.lo, base); // 1-based
    out.witnesses.reserve((unit.hi - unit.lo) / 2 + 1);
    for (u64 two_n = unit.lo; two_n <= unit.hi; two_n += 2) {
        while (k < primes.size() && primes[k] * primes[k] + primes[k] <= two_n) ++k;
        const u64 pk = primes[k - 1];
        const u64 window = pk * pk;
        std::optional<u64> q1;
        std::size_t i = k; // primes[k] = p_{k+1}, the first prime above p_k
        for (; i < primes.size() && primes[i] < window; ++i) {
            if (prime(two_n - primes[i])) {
                q1 = primes[i];
                break;
            }
        }
        if (!q1 && i == primes.size()) {
            // ran off the table: continue with odd candidates
            for (u64 x = primes.back() + 2; x < window; x += 2) {
                if (is_prime_u64(x) && prime(two_n - x)) {
                    q1 = x;
                    break;
                }
            }
        }
        if (q1) {
            out.witnesses.push_back({two_n, static_cast<unsigned>(k), pk, *q1, two_n - *q1});
        } else {
            out.failures.push_back({two_n, 0});
        }
    }
    return out;
}

struct PairsUnit {
    u64 d;
    std::vector<u64> ps;
};

struct PairsUnitResult {
    std::vector<PairWitness> witnesses;
    std::vector<CampaignFailure> failures;
};

inline PairsUnitResult pairs_unit(const PrimeTable& table, const PairsUnit& unit) {
    PairsUnitResult out;
    const auto primes = table.primes();
    for (u64 p : unit.ps) {
        const u128 window = static_cast<u128>(p) * p;
        std::optional<u64> q1;
        auto it = std::upper_bound(primes.begin(), primes.end(), p);
        for (; it != primes.end() && *it < window; ++it) {
            if (table.is_prime(*it + unit.d)) {
                q1 = *it;
                break;
            }
        }
        if (!q1 && it == primes.end()) {
            for (u64 x = std::max(primes.empty() ? 1 : primes.back(), p) + 2; x < window; x += 2) {
                if (is_prime_u64(x) && is_prime_u64(x + unit.d)) {
                    q1 = x;
                    break;
                }
            }
        }
        if (q1) {
            out.witnesses.push_back({unit.d, p, *q1, *q1 + unit.d});
        } else {
            out.failures.push_back({unit.d, p});
        }
    }
    return out;
}

} // namespace detail

// Emits the minimal-q1 witness for each even 2n in [two_n_lo, two_n_hi] to
// `sink`, in ascending order. `progress(cursor)` fires after each work unit
// has been fully delivered. A missing witness is recorded as a failure.
template <class Sink, class Progress>
VerificationReport verify_goldbach(u64 two_n_lo, u64 two_n_hi, Sink&& sink, const CampaignOptions& opts,
                                   Progress&& progress) {
    if (two_n_lo < 12) throw DomainError("verify_goldbach: 2n must be >= 12, got " + std::to_string(two_n_lo));
    if (two_n_lo % 2 || two_n_hi % 2) throw DomainError("verify_goldbach: range bounds must be even");
    if (two_n_lo > two_n_hi) throw DomainError("verify_goldbach: empty range");
    if (opts.unit_width < 2) throw DomainError("verify_goldbach: unit width must be >= 2");
    const auto t0 = std::chrono::steady_clock::now();

    VerificationReport report;
    report.campaign = "goldbach";
    report.range = "2n in [" + std::to_string(two_n_lo) + ", " + std::to_string(two_n_hi) + "]";

    // q1 candidates come from the table; q2 from a per-unit segment.
    const u64 table_limit = std::max(isqrt_u64(two_n_hi) + 1024, std::min<u64>(two_n_hi, u64{1} << 22));
    const PrimeTable base = sieve(table_limit, opts.sieve);

    u64 start = two_n_lo;
    if (opts.resume_after && opts.resume_after->primary >= start) start = opts.resume_after->primary + 2;
    std::vector<detail::GoldbachUnit> units;
    const u64 width = opts.unit_width & ~u64{1};
    for (u64 lo = start; lo <= two_n_hi; lo += width) units.push_back({lo, std::min(two_n_hi, lo + width - 2)});

    Sha256 digest;
    detail::run_ordered(
        units, opts.workers,
        [&](const detail::GoldbachUnit& u) { return detail::goldbach_unit(base, u, opts.q2_margin); },
        [&](const detail::GoldbachUnit& u, detail::GoldbachUnitResult r) {
            for (const auto& w : r.witnesses) {
                digest.update(format_line(w));
                sink(w);
            }
            report.witnesses += r.witnesses.size();
            report.failures.insert(report.failures.end(), r.failures.begin(), r.failures.end());
            progress(CampaignCursor{u.hi, 0});
        });

    report.digest = digest.hex();
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

template <class Sink>
VerificationReport verify_goldbach(u64 two_n_lo, u64 two_n_hi, Sink&& sink, const CampaignOptions& opts = {}) {
    return verify_goldbach(two_n_lo, two_n_hi, sink, opts, [](CampaignCursor) {});
}

// Emits the minimal-q1 witness for each even d in [2, two_n_max] and each
// prime p in [p_min, p_max) with p > d, ordered by (d, p).
template <class Sink, class Progress>
VerificationReport verify_pairs(u64 two_n_max, u64 p_min, u64 p_max, Sink&& sink, const CampaignOptions& opts,
                                Progress&& progress) {
    if (two_n_max < 2) throw DomainError("verify_pairs: max difference must be >= 2");
    if (p_min >= p_max) throw DomainError("verify_pairs: empty prime range");
    if (opts.unit_width < 1) throw DomainError("verify_pairs: unit width must be >= 1");
    const auto t0 = std::chrono::steady_clock::now();
    const u64 d_max = two_n_max & ~u64{1};

    VerificationReport report;
    report.campaign = "pairs";
    report.range = "2n in [2, " + std::to_string(d_max) + "], p in [" + std::to_string(p_min) + ", " +
                   std::to_string(p_max) + ")";

    const PrimeTable table = sieve(p_max + d_max + (u64{1} << 16), opts.sieve);
    const auto primes = table.primes();

    std::vector<detail::PairsUnit> units;
    for (u64 d = 2; d <= d_max; d += 2) {
        detail::PairsUnit unit{d, {}};
        for (auto it = std::lower_bound(primes.begin(), primes.end(), std::max(p_min, d + 1));
             it != primes.end() && *it < p_max; ++it) {
            if (opts.resume_after && CampaignCursor{d, *it} <= *opts.resume_after) continue;
            unit.ps.push_back(*it);
            if (unit.ps.size() == opts.unit_width) {
                units.push_back(std::move(unit));
                unit = {d, {}};
            }
        }
        if (!unit.ps.empty()) units.push_back(std::move(unit));
    }

    Sha256 digest;
    detail::run_ordered(
        units, opts.workers, [&](const detail::PairsUnit& u) { return detail::pairs_unit(table, u); },
        [&](const detail::PairsUnit& u, detail::PairsUnitResult r) {
            for (const auto& w : r.witnesses) {
                digest.update(format_line(w));
                sink(w);
            }
            report.witnesses += r.witnesses.size();
            report.failures.insert(report.failures.end(), r.failures.begin(), r.failures.end());
            progress(CampaignCursor{u.d, u.ps.back()});
        });

    report.digest = digest.hex();
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

template <class Sink>
VerificationReport verify_pairs(u64 two_n_max, u64 p_min, u64 p_max, Sink&& sink, const CampaignOptions& opts = {}) {
    return verify_pairs(two_n_max, p_min, p_max, sink, opts, [](CampaignCursor) {});
}

// ---------------------------------------------------------------------------
// Independent witness checks (prime_engine only)
// ---------------------------------------------------------------------------

// Empty string when valid, otherwise the violated condition.
inline std::string check_goldbach_witness(const GoldbachWitness& w) {
    if (w.two_n < 12 || w.two_n % 2) return "2n out of domain";
    const auto k = goldbach_index(w.two_n);
    if (k != w.k_n) return "wrong window index";
    const auto ps = first_primes(k + 1);
    const u64 pk = ps[k - 1], pk1 = ps[k];
    if (pk != w.p_k) return "wrong p_k";
    if (!is_prime_u64(w.q1) || !is_prime_u64(w.q2)) return "q1 or q2 not prime";
    if (w.q1 + w.q2 != w.two_n) return "q1 + q2 != 2n";
    if (!(pk < w.q1 && w.q1 < pk * pk)) return "q1 outside (p_k, p_k^2)";
    if (!(pk < w.q2 && w.q2 < pk1 * pk1)) return "q2 outside (p_k, p_{k+1}^2)";
    return {};
}

inline std::string check_pair_witness(const PairWitness& w) {
    if (w.two_n < 2 || w.two_n % 2) return "difference out of domain";
    if (!is_prime_u64(w.p) || w.p <= w.two_n) return "p not a prime above 2n";
    if (!is_prime_u64(w.q1) || !is_prime_u64(w.q2)) return "q1 or q2 not prime";
    if (w.q2 - w.q1 != w.two_n || w.q2 < w.q1) return "q2 - q1 != 2n";
    if (!(w.p < w.q1 && static_cast<u128>(w.q1) < static_cast<u128>(w.p) * w.p)) return "q1 outside (p, p^2)";
    if (!(static_cast<u128>(w.q2) < static_cast<u128>(w.p + 1) * (w.p + 1))) return "q2 >= (p+1)^2";
    u64 next = w.p + 1;
    while (!is_prime_u64(next)) ++next;
    if (!(static_cast<u128>(w.q2) < static_cast<u128>(next) * next)) return "q2 >= p_{k+1}^2";
    return {};
}

// Rescans every smaller candidate; empty string when w.q1 is the minimal choice.
inline std::string check_goldbach_minimal(const GoldbachWitness& w) {
    for (u64 x = w.p_k + 1; x < w.q1; ++x)
        if (is_prime_u64(x) && is_prime_u64(w.two_n - x)) return "smaller q1 = " + std::to_string(x) + " exists";
    return {};
}

inline std::string check_pair_minimal(const PairWitness& w) {
    for (u64 x = w.p + 1; x < w.q1; ++x)
        if (is_prime_u64(x) && is_prime_u64(x + w.two_n)) return "smaller q1 = " + std::to_string(x) + " exists";
    return {};
}

} // namespace pairjac
