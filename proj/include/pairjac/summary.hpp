// summary.hpp
// Text rendering of the inference chain
//
//   h2 upper bound  ==> tightened Goldbach     ==> Goldbach
//                   ==> tightened prime pairs  ==> prime pairs ==> twin primes
//
// with each node annotated by the empirical checks available from this run.

#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pairjac/paired_jacobsthal.hpp"
#include "pairjac/verifiers.hpp"

namespace pairjac {

enum class NodeStatus { NotChecked, CheckedInRange, Partial, Counterexample };

inline const char* to_string(NodeStatus s) {
    switch (s) {
    case NodeStatus::NotChecked: return "not checked";
    case NodeStatus::CheckedInRange: return "checked in range";
    case NodeStatus::Partial: return "partial, lower bounds only";
    case NodeStatus::Counterexample: return "COUNTEREXAMPLE";
    }
    return "?";
}

struct SummaryNode {
    std::string name;
    NodeStatus status = NodeStatus::NotChecked;
    std::string detail;
};

struct ImplicationSummary {
    SummaryNode bound, tightened_goldbach, goldbach, tightened_pairs, prime_pairs, twin_primes;

    std::string render() const;
};

namespace detail {

inline SummaryNode campaign_node(std::string name, const std::optional<VerificationReport>& r) {
    SummaryNode node{std::move(name), NodeStatus::NotChecked, {}};
    if (!r) return node;
    if (r->verified()) {
        node.status = NodeStatus::CheckedInRange;
        node.detail = r->range + ", " + std::to_string(r->witnesses) + " witnesses";
        return node;
    }
    node.status = NodeStatus::Counterexample;
    std::ostringstream os;
    os << r->range << ", " << r->failures.size() << " failure(s):";
    std::size_t shown = 0;
    for (const auto& f : r->failures) {
        if (shown++ == 10) {
            os << " ...";
            break;
        }
        os << " 2n=" << f.two_n;
        if (f.p) os << "/p=" << f.p;
    }
    node.detail = os.str();
    return node;
}

// A node implied by `premise`: inherits a verified range, never a counterexample.
inline SummaryNode implied_node(std::string name, const SummaryNode& premise) {
    SummaryNode node{std::move(name), NodeStatus::NotChecked, {}};
    if (premise.status == NodeStatus::CheckedInRange) {
        node.status = NodeStatus::CheckedInRange;
        node.detail = "follows from " + premise.name + " (" + premise.detail + ")";
    }
    return node;
}

} // namespace detail

inline ImplicationSummary implication_summary(const std::optional<VerificationReport>& goldbach,
                                              const std::optional<VerificationReport>& pairs,
                                              const std::vector<BoundCheckRow>& bound_rows) {
    ImplicationSummary s;
    s.bound.name = "h2(n) < p_n^2 - p_n";
    if (!bound_rows.empty()) {
        std::vector<unsigned> violated, incomplete;
        for (const auto& row : bound_rows) {
            if (row.holds == std::optional<bool>{false}) violated.push_back(row.n);
            else if (!row.complete()) incomplete.push_back(row.n);
        }
        std::ostringstream os;
        os << "n in [" << bound_rows.front().n << ", " << bound_rows.back().n << "]";
        if (!violated.empty()) {
            s.bound.status = NodeStatus::Counterexample;
            os << ", violated at n =";
            for (auto n : violated) os << ' ' << n;
        } else if (!incomplete.empty()) {
            s.bound.status = NodeStatus::Partial;
            os << ", incomplete at n =";
            for (auto n : incomplete) os << ' ' << n;
        } else {
            s.bound.status = NodeStatus::CheckedInRange;
        }
        s.bound.detail = os.str();
    }
    s.tightened_goldbach = detail::campaign_node("tightened Goldbach", goldbach);
    s.goldbach = detail::implied_node("Goldbach", s.tightened_goldbach);
    s.tightened_pairs = detail::campaign_node("tightened prime pairs", pairs);
    s.prime_pairs = detail::implied_node("prime pairs", s.tightened_pairs);
    s.twin_primes = detail::implied_node("twin primes", s.prime_pairs);
    return s;
}

inline std::string ImplicationSummary::render() const {
    std::ostringstream os;
    auto line = [&](const char* indent, const SummaryNode& n) {
        os << indent << n.name << "  [" << to_string(n.status) << "]";
        if (!n.detail.empty()) os << "  " << n.detail;
        os << '\n';
    };
    line("", bound);
    line("  => ", tightened_goldbach);
    line("       => ", goldbach);
    line("  => ", tightened_pairs);
    line("       => ", prime_pairs);
    line("            => ", twin_primes);
    return os.str();
}

} // namespace pairjac
