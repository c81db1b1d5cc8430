// cli.hpp
// Command-line front end. Exit codes:
//   0  success, everything checked held
//   1  a counterexample was found (witness failure or bound violation)
//   2  usage or resource error (including an exhausted search budget)

#pragma once

#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pairjac/campaign_io.hpp"
#include "pairjac/jacobsthal.hpp"
#include "pairjac/paired_jacobsthal.hpp"
#include "pairjac/summary.hpp"

namespace pairjac::cli {

enum ExitCode : int { kOk = 0, kCounterexample = 1, kError = 2 };

namespace detail {

inline void print_paired(std::ostream& out, const std::string& label, const PairedJacobsthalResult& r,
                         const char* method) {
    out << label << " = " << r.value << "  (" << method << ")\n";
    out << "witness (a, b) = (" << r.witness.a << ", " << r.witness.b << "): members q = 1.."
        << (r.value - 1) << " share a factor with the support\n";
    if (r.system) {
        out << "classes:";
        if (r.system->parity_class) out << " q == " << *r.system->parity_class << " (mod 2)";
        for (const auto& c : r.system->odd_classes) {
            out << " | mod " << c.prime << ":";
            for (u64 x : c.residues) out << ' ' << x;
        }
        out << '\n';
    }
    if (r.nodes) out << "search nodes: " << r.nodes << '\n';
}

inline void print_bound_table(std::ostream& out, const std::vector<BoundCheckRow>& rows) {
    out << std::left << std::setw(4) << "n" << std::setw(6) << "p_n" << std::setw(10) << "h2" << std::setw(10)
        << "bound" << std::setw(10) << "holds" << "seconds\n";
    for (const auto& r : rows) {
        std::string h2 = r.h2 ? std::to_string(*r.h2) : ">=" + std::to_string(r.lower_bound);
        std::string holds = r.holds ? (*r.holds ? "yes" : "NO") : "unknown";
        std::ostringstream secs;
        secs << std::fixed << std::setprecision(3) << r.seconds;
        out << std::setw(4) << r.n << std::setw(6) << r.prime << std::setw(10) << h2 << std::setw(10) << r.bound
            << std::setw(10) << holds << secs.str() << '\n';
    }
}

inline int campaign_exit(std::ostream& out, const VerificationReport& r) {
    out << r.campaign << ": " << r.range << '\n'
        << "witnesses: " << r.witnesses << "\nfailures: " << r.failures.size() << '\n'
        << "sha256: " << r.digest << '\n'
        << "seconds: " << std::fixed << std::setprecision(3) << r.seconds << '\n';
    for (const auto& f : r.failures) {
        out << "COUNTEREXAMPLE 2n=" << f.two_n;
        if (f.p) out << " p=" << f.p;
        out << '\n';
    }
    return r.verified() ? kOk : kCounterexample;
}

} // namespace detail

// Parses argv and runs one subcommand; all output goes to `out` / `err`.
inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Paired Jacobsthal function and tightened Goldbach / prime-pairs verification", "pairjac"};
    app.require_subcommand(1);

    CoverSearchOptions search;
    auto add_search_flags = [&](CLI::App* sub) {
        sub->add_option("--node-limit", search.node_limit, "Search node budget (0 = unlimited)");
        sub->add_option("--time-limit", search.time_limit_seconds, "Search wall-clock budget in seconds (0 = unlimited)");
        sub->add_option("--workers", search.workers, "Search worker threads")->check(CLI::PositiveNumber);
    };

    u64 n_arg = 0;
    bool use_oracle = false;
    auto* j2_cmd = app.add_subcommand("j2", "Paired Jacobsthal function j2(n)");
    j2_cmd->add_option("n", n_arg, "Argument n >= 1")->required()->check(CLI::PositiveNumber);
    j2_cmd->add_flag("--oracle", use_oracle, "Use the exhaustive oracle instead of the cover search");
    add_search_flags(j2_cmd);

    auto* h2_cmd = app.add_subcommand("h2", "Primorial paired Jacobsthal function h2(n) = j2(p_n#)");
    h2_cmd->add_option("n", n_arg, "Primorial index n >= 1")->required()->check(CLI::PositiveNumber);
    h2_cmd->add_flag("--oracle", use_oracle, "Use the exhaustive oracle instead of the cover search");
    add_search_flags(h2_cmd);

    bool primorial_arg = false;
    auto* jac_cmd = app.add_subcommand("jacobsthal", "Ordinary Jacobsthal function j(n)");
    jac_cmd->add_option("n", n_arg, "Argument n >= 1")->required()->check(CLI::PositiveNumber);
    jac_cmd->add_flag("--primorial", primorial_arg, "Evaluate h(n) = j(p_n#) instead");

    CampaignConfig config;
    std::optional<std::string> checkpoint;
    auto add_campaign_flags = [&](CLI::App* sub) {
        sub->add_option("--out", config.out, "Witness output file")->required();
        sub->add_option("--checkpoint", checkpoint, "Checkpoint file; resumes when it exists");
        sub->add_option("--workers", config.workers, "Worker threads (default: PAIRJAC_WORKERS or 1)")
            ->check(CLI::PositiveNumber);
    };
    auto* gb_cmd = app.add_subcommand("goldbach", "Verify the tightened Goldbach statement over a range of 2n");
    gb_cmd->add_option("--from", config.from, "First even 2n (>= 12)")->capture_default_str();
    gb_cmd->add_option("--to", config.to, "Last even 2n")->capture_default_str();
    gb_cmd->add_option("--segment", config.segment_width, "2n values per work unit / sieve segment")
        ->capture_default_str();
    add_campaign_flags(gb_cmd);

    auto* pairs_cmd = app.add_subcommand("pairs", "Verify the tightened prime-pairs statement");
    pairs_cmd->add_option("--max-d", config.max_d, "Largest even difference 2n")->capture_default_str();
    pairs_cmd->add_option("--p-min", config.p_min, "Smallest prime p")->capture_default_str();
    pairs_cmd->add_option("--p-max", config.p_max, "Primes p < p-max")->capture_default_str();
    add_campaign_flags(pairs_cmd);

    unsigned bound_from = 3, bound_to = 7;
    std::optional<std::string> bound_json;
    auto* bound_cmd = app.add_subcommand("bound", "Check h2(n) < p_n^2 - p_n");
    bound_cmd->add_option("--from", bound_from, "First n (>= 3)")->capture_default_str();
    bound_cmd->add_option("--to", bound_to, "Last n")->capture_default_str();
    bound_cmd->add_option("--json", bound_json, "Write rows as JSON");
    add_search_flags(bound_cmd);

    std::optional<std::string> rep_goldbach, rep_pairs, rep_bound;
    auto* report_cmd = app.add_subcommand("report", "Render the inference chain with the checks recorded so far");
    report_cmd->add_option("--goldbach", rep_goldbach, "Goldbach report JSON (<out>.json)");
    report_cmd->add_option("--pairs", rep_pairs, "Pairs report JSON (<out>.json)");
    report_cmd->add_option("--bound", rep_bound, "Bound rows JSON (bound --json)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kError;
    }

    try {
        if (*j2_cmd) {
            if (use_oracle) detail::print_paired(out, "j2(" + std::to_string(n_arg) + ")", j2_oracle(n_arg), "oracle");
            else detail::print_paired(out, "j2(" + std::to_string(n_arg) + ")", j2(n_arg, search), "cover search");
            return kOk;
        }
        if (*h2_cmd) {
            const auto n = static_cast<unsigned>(n_arg);
            if (use_oracle) detail::print_paired(out, "h2(" + std::to_string(n) + ")", h2_oracle(n), "oracle");
            else detail::print_paired(out, "h2(" + std::to_string(n) + ")", h2_search(n, search), "cover search");
            return kOk;
        }
        if (*jac_cmd) {
            if (primorial_arg) {
                out << "h(" << n_arg << ") = j(p_" << n_arg << "#) = " << h_ordinary(static_cast<unsigned>(n_arg)) << '\n';
            } else {
                const auto r = j_ordinary(n_arg);
                out << "j(" << n_arg << ") = " << r.value << "  witness a = " << r.witness << '\n';
            }
            return kOk;
        }
        if (*gb_cmd || *pairs_cmd) {
            config.subcommand = *gb_cmd ? "goldbach" : "pairs";
            if (gb_cmd->count("--workers") + pairs_cmd->count("--workers") == 0) {
                if (auto w = workers_from_env()) config.workers = *w;
            }
            if (checkpoint) config.checkpoint = fs::path(*checkpoint);
            const auto report = run_campaign(config);
            write_json_file(config.out.string() + ".json", to_json(report));
            return detail::campaign_exit(out, report);
        }
        if (*bound_cmd) {
            const auto rows = check_bound(bound_from, bound_to, search);
            detail::print_bound_table(out, rows);
            if (bound_json) {
                json j = json::array();
                for (const auto& r : rows) j.push_back(to_json(r));
                write_json_file(*bound_json, j);
            }
            bool violated = false, incomplete = false;
            for (const auto& r : rows) {
                if (r.holds == std::optional<bool>{false}) violated = true;
                if (!r.complete()) incomplete = true;
            }
            if (violated) {
                out << "COUNTEREXAMPLE to h2(n) < p_n^2 - p_n\n";
                return kCounterexample;
            }
            if (incomplete) {
                out << "search budget exhausted; incomplete rows carry lower bounds only\n";
                return kError;
            }
            return kOk;
        }
        if (*report_cmd) {
            std::optional<VerificationReport> g, p;
            std::vector<BoundCheckRow> rows;
            if (rep_goldbach) g = report_from_json(read_json_file(*rep_goldbach));
            if (rep_pairs) p = report_from_json(read_json_file(*rep_pairs));
            if (rep_bound)
                for (const auto& j : read_json_file(*rep_bound)) rows.push_back(bound_row_from_json(j));
            const auto summary = implication_summary(g, p, rows);
            out << summary.render();
            const bool counterexample = summary.bound.status == NodeStatus::Counterexample ||
                                        summary.tightened_goldbach.status == NodeStatus::Counterexample ||
                                        summary.tightened_pairs.status == NodeStatus::Counterexample;
            return counterexample ? kCounterexample : kOk;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kError;
    }
    return kError;
}

} // namespace pairjac::cli
