// residue_cover.hpp
// Residue-class covers of an index interval, and the branch-and-bound search
// that finds the longest coverable interval.
//
// For a base pair (a,b) and a prime p, member q of <a,b> has p | (a+q, b+q)
// iff q == -a or q == -b (mod p). A paired progression with no member coprime
// to the support is therefore an interval of indices covered by
//   - one class mod 2 (the two classes coincide because 2 | b - a), and
//   - at most two classes mod each odd support prime.
// Any such choice of classes is realised by some (a,b) via CRT, so the
// longest coverable interval has length j2 - 1.
//
// Search: positions 1..L live in a bitset. The lowest uncovered position must
// be hit by some prime with spare capacity; branch on that prime (largest
// first) and prune when the best classes still available cannot cover the
// remaining holes. L is raised until the cover fails.

#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <mutex>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "pairjac/errors.hpp"
#include "pairjac/pair_core.hpp"
#include "pairjac/prime_engine.hpp"

namespace pairjac {

// ---------------------------------------------------------------------------
// CRT
// ---------------------------------------------------------------------------

namespace detail {

inline u64 inverse_mod(u64 x, u64 m) {
    // extended Euclid on signed 128-bit values
    __int128 r0 = m, r1 = x % m, s0 = 0, s1 = 1;
    while (r1 != 0) {
        const __int128 q = r0 / r1;
        std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
        std::tie(s0, s1) = std::pair{s1, s0 - q * s1};
    }
    if (r0 != 1) throw DomainError("inverse_mod: not invertible");
    if (s0 < 0) s0 += m;
    return static_cast<u64>(s0);
}

} // namespace detail

struct Congruence {
    u64 residue;
    u64 modulus;
};

// x mod prod(moduli) with x == residue_i (mod modulus_i); moduli pairwise coprime.
inline u64 crt(std::span<const Congruence> system) {
    u64 x = 0, m = 1;
    for (const auto& c : system) {
        if (c.modulus == 0) throw DomainError("crt: zero modulus");
        u64 next;
        if (__builtin_mul_overflow(m, c.modulus, &next)) throw OverflowError("crt: modulus product exceeds 64 bits");
        const u64 r = c.residue % c.modulus;
        const u64 diff = (r + c.modulus - x % c.modulus) % c.modulus;
        const u64 t = detail::mul_mod(diff, detail::inverse_mod(m % c.modulus, c.modulus), c.modulus);
        x += m * t;
        m = next;
    }
    return x;
}

// ---------------------------------------------------------------------------
// ResidueCoverSystem
// ---------------------------------------------------------------------------

struct OddPrimeClasses {
    u64 prime = 3;
    std::vector<u64> residues; // one or two residues mod prime
};

struct ResidueCoverSystem {
    std::optional<u64> parity_class; // present iff 2 is in the support
    std::vector<OddPrimeClasses> odd_classes;

    // Throws DomainError when a class count or residue is out of range.
    void validate() const {
        if (parity_class && *parity_class > 1) throw DomainError("ResidueCoverSystem: parity class must be 0 or 1");
        for (const auto& c : odd_classes) {
            if (c.prime < 3 || c.prime % 2 == 0) throw DomainError("ResidueCoverSystem: odd prime expected");
            if (c.residues.empty() || c.residues.size() > 2)
                throw DomainError("ResidueCoverSystem: 1 or 2 classes per odd prime");
            for (u64 r : c.residues)
                if (r >= c.prime) throw DomainError("ResidueCoverSystem: residue out of range");
        }
    }

    u64 modulus() const {
        u64 m = parity_class ? 2 : 1;
        for (const auto& c : odd_classes)
            if (__builtin_mul_overflow(m, c.prime, &m)) throw OverflowError("ResidueCoverSystem: modulus overflow");
        return m;
    }

    bool covers(i64 q) const {
        auto mod = [](i64 x, u64 p) { return static_cast<u64>(((x % static_cast<i64>(p)) + static_cast<i64>(p)) % static_cast<i64>(p)); };
        if (parity_class && mod(q, 2) == *parity_class) return true;
        for (const auto& c : odd_classes) {
            const u64 r = mod(q, c.prime);
            for (u64 cls : c.residues)
                if (cls == r) return true;
        }
        return false;
    }

    // A base pair (a,b) with 2 | (b - a) whose members (a+q, b+q) are non-coprime
    // to the support exactly at the covered indices q. Coordinates lie in
    // [0, modulus()), except that b is shifted by one odd period when needed to
    // make the difference even.
    IntegerPair realize() const {
        validate();
        std::vector<Congruence> ca, cb;
        if (parity_class) {
            ca.push_back({*parity_class, 2});
            cb.push_back({*parity_class, 2});
        }
        for (const auto& c : odd_classes) {
            const u64 r1 = c.residues[0];
            const u64 r2 = c.residues.size() > 1 ? c.residues[1] : r1;
            ca.push_back({(c.prime - r1) % c.prime, c.prime});
            cb.push_back({(c.prime - r2) % c.prime, c.prime});
        }
        const u64 m = modulus();
        u64 a = crt(ca), b = crt(cb);
        if ((a ^ b) & 1) b += m; // m is odd here: no parity class
        if (b > static_cast<u64>(std::numeric_limits<i64>::max())) throw OverflowError("realize: witness exceeds i64");
        return {static_cast<i64>(a), static_cast<i64>(b)};
    }
};

// ---------------------------------------------------------------------------
// Branch-and-bound
// ---------------------------------------------------------------------------

struct CoverSearchOptions {
    u64 node_limit = 0;           // 0 = unlimited
    double time_limit_seconds = 0; // 0 = unlimited
    unsigned workers = 1;
};

// Classes chosen for a cover of [1, length].
struct CoverAssignment {
    std::optional<u64> parity_class;
    std::vector<std::vector<u64>> classes; // parallel to the odd prime list
};

struct CoverResult {
    u64 length = 0; // longest coverable interval
    CoverAssignment assignment;
    u64 nodes = 0;
};

namespace detail {

// Shared node and wall-clock accounting; exhaustion is signalled by throwing.
class SearchBudget {
public:
    explicit SearchBudget(const CoverSearchOptions& opts)
        : node_limit_(opts.node_limit), time_limit_(opts.time_limit_seconds), start_(std::chrono::steady_clock::now()) {}

    // Adds a batch of visited nodes; false once either limit is passed.
    bool charge(u64 nodes) {
        const u64 total = nodes_.fetch_add(nodes, std::memory_order_relaxed) + nodes;
        if (node_limit_ != 0 && total > node_limit_) return false;
        if (time_limit_ > 0) {
            const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start_;
            if (dt.count() > time_limit_) return false;
        }
        return true;
    }

    u64 nodes() const { return nodes_.load(std::memory_order_relaxed); }

private:
    u64 node_limit_;
    double time_limit_;
    std::chrono::steady_clock::time_point start_;
    std::atomic<u64> nodes_{0};
};

struct BudgetExhausted {};

template <std::size_t W>
class IntervalCover {
public:
    using Bits = std::array<u64, W>;
    static constexpr u64 kMaxLength = 64 * W - 1; // bit 0 unused, positions 1..L

    IntervalCover(u64 length, std::span<const u64> odd_primes, SearchBudget& budget)
        : length_(length), primes_(odd_primes.begin(), odd_primes.end()), budget_(budget) {
        masks_.resize(primes_.size());
        for (std::size_t i = 0; i < primes_.size(); ++i) {
            const u64 p = primes_[i];
            const u64 classes = std::min<u64>(p, length_ + 1);
            masks_[i].assign(p, Bits{});
            for (u64 q = 1; q <= length_; ++q) set(masks_[i][q % p], q);
            active_[i] = classes;
        }
        // Largest primes branch first.
        order_.resize(primes_.size());
        for (std::size_t i = 0; i < order_.size(); ++i) order_[i] = i;
        std::sort(order_.begin(), order_.end(), [&](std::size_t x, std::size_t y) { return primes_[x] > primes_[y]; });
    }

    // Cover [1, length] with the given parity class (or none) plus the odd primes.
    std::optional<CoverAssignment> solve(std::optional<u64> parity, unsigned workers) {
        State root;
        root.caps.assign(primes_.size(), 2);
        root.chosen.assign(primes_.size(), {});
        for (u64 q = 1; q <= length_; ++q)
            if (!parity || q % 2 != *parity) set(root.holes, q);

        if (workers <= 1) {
            Worker w{*this};
            if (!w.dfs(root)) {
                w.flush();
                return std::nullopt;
            }
            w.flush();
            return CoverAssignment{parity, std::move(root.chosen)};
        }
        return solve_parallel(std::move(root), parity, workers);
    }

private:
    struct State {
        Bits holes{};
        std::vector<unsigned char> caps;
        std::vector<std::vector<u64>> chosen;
    };

    static void set(Bits& b, u64 q) { b[q >> 6] |= u64{1} << (q & 63); }

    static int popcount(const Bits& b) {
        int c = 0;
        for (u64 w : b) c += std::popcount(w);
        return c;
    }

    static int popcount_and(const Bits& a, const Bits& b) {
        int c = 0;
        for (std::size_t i = 0; i < W; ++i) c += std::popcount(a[i] & b[i]);
        return c;
    }

    static u64 lowest(const Bits& b) {
        for (std::size_t i = 0; i < W; ++i)
            if (b[i]) return i * 64 + static_cast<u64>(std::countr_zero(b[i]));
        return 0;
    }

    // Upper bound on how many holes the remaining capacity can still cover.
    bool may_cover(const State& s, int holes) const {
        int reach = 0;
        for (std::size_t i = 0; i < primes_.size(); ++i) {
            if (s.caps[i] == 0) continue;
            int top1 = 0, top2 = 0;
            const auto& m = masks_[i];
            for (u64 r = 0; r < active_[i]; ++r) {
                const int c = popcount_and(s.holes, m[r]);
                if (c > top1) {
                    top2 = top1;
                    top1 = c;
                } else if (c > top2) {
                    top2 = c;
                }
            }
            reach += s.caps[i] == 2 ? top1 + top2 : top1;
            if (reach >= holes) return true;
        }
        return reach >= holes;
    }

    struct Worker {
        IntervalCover& self;
        u64 pending = 0;
        const std::atomic<bool>* cancel = nullptr;

        void tick() {
            if (++pending == 4096) flush_or_throw();
        }
        void flush_or_throw() {
            const u64 n = pending;
            pending = 0;
            if (!self.budget_.charge(n)) throw BudgetExhausted{};
            if (cancel && cancel->load(std::memory_order_relaxed)) throw BudgetExhausted{};
        }
        void flush() {
            self.budget_.charge(pending);
            pending = 0;
        }

        bool dfs(State& s) {
            tick();
            const int holes = popcount(s.holes);
            if (holes == 0) return true;
            if (!self.may_cover(s, holes)) return false;
            const u64 h = lowest(s.holes);
            for (std::size_t i : self.order_) {
                if (s.caps[i] == 0) continue;
                const u64 r = h % self.primes_[i];
                const Bits saved = s.holes;
                const auto& m = self.masks_[i][r];
                for (std::size_t w = 0; w < W; ++w) s.holes[w] &= ~m[w];
                --s.caps[i];
                s.chosen[i].push_back(r);
                if (dfs(s)) return true;
                s.chosen[i].pop_back();
                ++s.caps[i];
                s.holes = saved;
            }
            return false;
        }

        // Children of s in dfs order; empty when s is pruned.
        std::vector<State> expand(const State& s) {
            std::vector<State> out;
            const int holes = popcount(s.holes);
            if (!self.may_cover(s, holes)) return out;
            const u64 h = lowest(s.holes);
            for (std::size_t i : self.order_) {
                if (s.caps[i] == 0) continue;
                const u64 r = h % self.primes_[i];
                State c = s;
                const auto& m = self.masks_[i][r];
                for (std::size_t w = 0; w < W; ++w) c.holes[w] &= ~m[w];
                --c.caps[i];
                c.chosen[i].push_back(r);
                out.push_back(std::move(c));
            }
            return out;
        }
    };

    static constexpr std::size_t kFrontierTarget = 64;

    // Splits the tree near the root into subproblems kept in dfs order. The
    // reported cover comes from the earliest subproblem that succeeds, which is
    // the cover a sequential dfs finds, independent of worker count and scheduling.
    std::optional<CoverAssignment> solve_parallel(State root, std::optional<u64> parity, unsigned workers) {
        std::vector<State> frontier{std::move(root)};
        Worker splitter{*this};
        for (int depth = 0; depth < 6 && frontier.size() < kFrontierTarget; ++depth) {
            std::vector<State> next;
            for (auto& s : frontier) {
                if (popcount(s.holes) == 0) {
                    next.push_back(std::move(s)); // solved leaf stays a task
                    continue;
                }
                splitter.tick();
                for (auto& k : splitter.expand(s)) next.push_back(std::move(k));
            }
            frontier = std::move(next);
            if (frontier.empty()) break;
        }
        splitter.flush();

        std::atomic<std::size_t> next_task{0};
        std::atomic<std::size_t> first_success{frontier.size()};
        std::atomic<bool> exhausted{false};
        std::atomic<bool> stop{false};
        std::mutex mu;
        std::optional<CoverAssignment> best;

        auto run = [&] {
            Worker w{*this};
            w.cancel = &stop;
            try {
                for (;;) {
                    const std::size_t t = next_task.fetch_add(1);
                    if (t >= frontier.size() || t > first_success.load()) break;
                    State s = frontier[t];
                    if (w.dfs(s)) {
                        std::lock_guard lock(mu);
                        if (t < first_success.load()) {
                            first_success.store(t);
                            best = CoverAssignment{parity, std::move(s.chosen)};
                        }
                    }
                }
                w.flush();
            } catch (const BudgetExhausted&) {
                exhausted.store(true);
                stop.store(true);
            }
        };
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < workers; ++i) pool.emplace_back(run);
        for (auto& t : pool) t.join();
        if (exhausted.load()) throw BudgetExhausted{};
        return best;
    }

    u64 length_;
    std::vector<u64> primes_;
    SearchBudget& budget_;
    std::vector<std::vector<Bits>> masks_;
    std::array<u64, 64> active_{};
    std::vector<std::size_t> order_;
};

template <std::size_t W>
std::optional<CoverAssignment> cover_with_width(u64 length, bool has_two, std::span<const u64> odd_primes,
                                                SearchBudget& budget, unsigned workers) {
    IntervalCover<W> cover(length, odd_primes, budget);
    if (!has_two) return cover.solve(std::nullopt, workers);
    // Reflection q -> L+1-q swaps the parity classes when L is even, so one
    // class suffices there.
    if (auto a = cover.solve(u64{0}, workers)) return a;
    if (length % 2 == 0) return std::nullopt;
    return cover.solve(u64{1}, workers);
}

inline std::optional<CoverAssignment> cover_interval(u64 length, bool has_two, std::span<const u64> odd_primes,
                                                     SearchBudget& budget, unsigned workers) {
    const u64 bits = length + 1;
    if (bits <= 64) return cover_with_width<1>(length, has_two, odd_primes, budget, workers);
    if (bits <= 128) return cover_with_width<2>(length, has_two, odd_primes, budget, workers);
    if (bits <= 192) return cover_with_width<3>(length, has_two, odd_primes, budget, workers);
    if (bits <= 256) return cover_with_width<4>(length, has_two, odd_primes, budget, workers);
    if (bits <= 320) return cover_with_width<5>(length, has_two, odd_primes, budget, workers);
    if (bits <= 384) return cover_with_width<6>(length, has_two, odd_primes, budget, workers);
    if (bits <= 512) return cover_with_width<8>(length, has_two, odd_primes, budget, workers);
    if (bits <= 768) return cover_with_width<12>(length, has_two, odd_primes, budget, workers);
    if (bits <= 1024) return cover_with_width<16>(length, has_two, odd_primes, budget, workers);
    throw ResourceError("cover search: interval length " + std::to_string(length) + " exceeds supported width");
}

} // namespace detail

// Does some system over the support cover every index in [1, length]?
inline std::optional<CoverAssignment> cover_interval(u64 length, bool has_two, std::span<const u64> odd_primes,
                                                     const CoverSearchOptions& opts = {}) {
    if (odd_primes.size() > 64) throw ResourceError("cover search: more than 64 odd primes");
    detail::SearchBudget budget(opts);
    try {
        return detail::cover_interval(length, has_two, odd_primes, budget, std::max(1u, opts.workers));
    } catch (const detail::BudgetExhausted&) {
        throw SearchBudgetExceeded("cover search budget exhausted at length " + std::to_string(length), 0);
    }
}

// Longest interval coverable by one class mod 2 (when has_two) and at most
// two classes per odd prime. SearchBudgetExceeded carries (best length + 1).
inline CoverResult max_cover(bool has_two, std::span<const u64> odd_primes, const CoverSearchOptions& opts = {}) {
    if (odd_primes.size() > 64) throw ResourceError("cover search: more than 64 odd primes");
    detail::SearchBudget budget(opts);
    CoverResult best;
    best.assignment.parity_class = has_two ? std::optional<u64>{0} : std::nullopt;
    best.assignment.classes.assign(odd_primes.size(), {});
    const unsigned workers = std::max(1u, opts.workers);
    try {
        for (u64 length = 1;; ++length) {
            auto a = detail::cover_interval(length, has_two, odd_primes, budget, workers);
            if (!a) break;
            best.length = length;
            best.assignment = std::move(*a);
        }
    } catch (const detail::BudgetExhausted&) {
        throw SearchBudgetExceeded("cover search budget exhausted after " + std::to_string(budget.nodes()) + " nodes",
                                   best.length + 1);
    }
    best.nodes = budget.nodes();
    return best;
}

// Completes an assignment into a full system over the support: unused
// capacity repeats a chosen class, and primes that were never needed get a
// class avoiding indices 0 and length + 1.
inline ResidueCoverSystem to_system(const CoverAssignment& assignment, std::span<const u64> odd_primes, u64 length) {
    ResidueCoverSystem sys;
    sys.parity_class = assignment.parity_class;
    for (std::size_t i = 0; i < odd_primes.size(); ++i) {
        const u64 p = odd_primes[i];
        OddPrimeClasses c{p, assignment.classes[i]};
        if (c.residues.empty()) {
            const u64 edge = (length + 1) % p;
            u64 r = 1;
            while (r == edge) ++r;
            c.residues.push_back(r);
        }
        std::sort(c.residues.begin(), c.residues.end());
        sys.odd_classes.push_back(std::move(c));
    }
    return sys;
}

} // namespace pairjac
