// campaign_io.hpp
// Witness files, checkpoints and JSON report sidecars for long campaigns.
//
// Files:
//   goldbach.lis   "<2n> <q1> <q2>\n", ascending 2n
//   pairs.lis      "<2n> <p> <q1> <q2>\n", ascending (2n, p)
//   <out>.ckpt     JSON {campaign, last, bytes, digest}; rewritten atomically
//                  after every delivered work unit
//   <out>.json     JSON VerificationReport, written when the campaign ends
//
// A resumed run truncates the output back to the checkpointed byte count,
// re-hashes that prefix, checks it against the stored digest and continues;
// the finished file is byte-identical to an uninterrupted run.

#pragma once

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pairjac/digest.hpp"
#include "pairjac/errors.hpp"
#include "pairjac/paired_jacobsthal.hpp"
#include "pairjac/verifiers.hpp"

namespace pairjac {

namespace fs = std::filesystem;
using json = nlohmann::json;

// Everything that determines a campaign's output, plus how to run it.
struct CampaignConfig {
    std::string subcommand; // "goldbach" or "pairs"
    u64 from = 12;          // goldbach: first 2n
    u64 to = 1'000'000;     // goldbach: last 2n
    u64 max_d = 100;        // pairs: largest difference
    u64 p_min = 3;          // pairs: smallest p
    u64 p_max = 25'000;     // pairs: p < p_max
    unsigned workers = 1;
    u64 segment_width = kDefaultSegmentWidth;
    fs::path out;
    std::optional<fs::path> checkpoint;

    // Output-determining parameters only; worker count and segment width excluded.
    std::string campaign_id() const {
        if (subcommand == "goldbach") return "goldbach:" + std::to_string(from) + ":" + std::to_string(to);
        return "pairs:" + std::to_string(max_d) + ":" + std::to_string(p_min) + ":" + std::to_string(p_max);
    }

    void validate() const {
        if (workers < 1) throw DomainError("workers must be >= 1");
        if (segment_width < 2) throw DomainError("segment width must be >= 2");
        if (subcommand == "goldbach") {
            if (from < 12 || from % 2 || to % 2 || from > to)
                throw DomainError("goldbach range must be even with 12 <= from <= to");
        } else if (subcommand == "pairs") {
            if (max_d < 2 || p_min >= p_max) throw DomainError("pairs needs max-d >= 2 and p-min < p-max");
        } else {
            throw DomainError("unknown campaign '" + subcommand + "'");
        }
    }
};

// Worker count from PAIRJAC_WORKERS, if set and valid.
inline std::optional<unsigned> workers_from_env() {
    const char* v = std::getenv("PAIRJAC_WORKERS");
    if (!v || !*v) return std::nullopt;
    char* end = nullptr;
    const unsigned long n = std::strtoul(v, &end, 10);
    if (*end != '\0' || n < 1 || n > 4096) throw DomainError(std::string("PAIRJAC_WORKERS invalid: ") + v);
    return static_cast<unsigned>(n);
}

// ---------------------------------------------------------------------------
// Checkpoint
// ---------------------------------------------------------------------------

struct Checkpoint {
    std::string campaign;
    CampaignCursor last;
    u64 bytes = 0;
    std::string digest;
};

inline void to_json(json& j, const Checkpoint& c) {
    j = json{{"campaign", c.campaign},
             {"last", {c.last.primary, c.last.secondary}},
             {"bytes", c.bytes},
             {"digest", c.digest}};
}

inline void from_json(const json& j, Checkpoint& c) {
    j.at("campaign").get_to(c.campaign);
    c.last.primary = j.at("last").at(0).get<u64>();
    c.last.secondary = j.at("last").at(1).get<u64>();
    j.at("bytes").get_to(c.bytes);
    j.at("digest").get_to(c.digest);
}

inline std::optional<Checkpoint> load_checkpoint(const fs::path& path) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    try {
        return json::parse(in).get<Checkpoint>();
    } catch (const json::exception& e) {
        throw ResourceError("checkpoint " + path.string() + " unreadable: " + e.what());
    }
}

inline void save_checkpoint(const fs::path& path, const Checkpoint& c) {
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << json(c).dump() << '\n';
        if (!out) throw ResourceError("cannot write checkpoint " + tmp.string());
    }
    fs::rename(tmp, path);
}

// ---------------------------------------------------------------------------
// Single-writer witness file
// ---------------------------------------------------------------------------

class WitnessFile {
public:
    // Starts a fresh file, or continues one described by `resume`.
    WitnessFile(const fs::path& path, const std::optional<Checkpoint>& resume) : path_(path) {
        if (!resume) {
            out_.open(path_, std::ios::binary | std::ios::trunc);
        } else {
            if (!fs::exists(path_) || fs::file_size(path_) < resume->bytes)
                throw ResourceError("resume: " + path_.string() + " is shorter than its checkpoint");
            fs::resize_file(path_, resume->bytes);
            std::ifstream in(path_, std::ios::binary);
            std::string buf(1 << 16, '\0');
            while (in.read(buf.data(), static_cast<std::streamsize>(buf.size())) || in.gcount() > 0) {
                digest_.update(std::string_view(buf.data(), static_cast<std::size_t>(in.gcount())));
            }
            if (digest_.hex() != resume->digest)
                throw ResourceError("resume: " + path_.string() + " does not match its checkpoint digest");
            bytes_ = resume->bytes;
            out_.open(path_, std::ios::binary | std::ios::app);
        }
        if (!out_) throw ResourceError("cannot open " + path_.string() + " for writing");
    }

    void write(const std::string& line) {
        out_ << line;
        digest_.update(line);
        bytes_ += line.size();
    }

    void flush() {
        out_.flush();
        if (!out_) throw ResourceError("write failed on " + path_.string());
    }

    u64 bytes() const noexcept { return bytes_; }
    std::string digest() const { return digest_.hex(); }

private:
    fs::path path_;
    std::ofstream out_;
    Sha256 digest_;
    u64 bytes_ = 0;
};

// ---------------------------------------------------------------------------
// JSON sidecars
// ---------------------------------------------------------------------------

inline json to_json(const VerificationReport& r) {
    json failures = json::array();
    for (const auto& f : r.failures) failures.push_back(f.p ? json::array({f.two_n, f.p}) : json::array({f.two_n}));
    return json{{"campaign", r.campaign}, {"range", r.range},     {"witnesses", r.witnesses},
                {"failures", failures},   {"seconds", r.seconds}, {"digest", r.digest}};
}

inline VerificationReport report_from_json(const json& j) {
    VerificationReport r;
    j.at("campaign").get_to(r.campaign);
    j.at("range").get_to(r.range);
    j.at("witnesses").get_to(r.witnesses);
    j.at("seconds").get_to(r.seconds);
    j.at("digest").get_to(r.digest);
    for (const auto& f : j.at("failures")) r.failures.push_back({f.at(0).get<u64>(), f.size() > 1 ? f.at(1).get<u64>() : 0});
    return r;
}

inline json to_json(const BoundCheckRow& row) {
    json j{{"n", row.n}, {"p_n", row.prime}, {"bound", row.bound}, {"lower_bound", row.lower_bound}, {"seconds", row.seconds}};
    j["h2"] = row.h2 ? json(*row.h2) : json(nullptr);
    j["holds"] = row.holds ? json(*row.holds) : json(nullptr);
    if (row.result) j["witness"] = {row.result->witness.a, row.result->witness.b};
    return j;
}

inline BoundCheckRow bound_row_from_json(const json& j) {
    BoundCheckRow row;
    j.at("n").get_to(row.n);
    j.at("p_n").get_to(row.prime);
    j.at("bound").get_to(row.bound);
    j.at("lower_bound").get_to(row.lower_bound);
    j.at("seconds").get_to(row.seconds);
    if (!j.at("h2").is_null()) row.h2 = j.at("h2").get<u64>();
    if (!j.at("holds").is_null()) row.holds = j.at("holds").get<bool>();
    return row;
}

inline json read_json_file(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw ResourceError("cannot read " + path.string());
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ResourceError(path.string() + ": " + e.what());
    }
}

inline void write_json_file(const fs::path& path, const json& j) {
    std::ofstream out(path, std::ios::trunc);
    out << j.dump(2) << '\n';
    if (!out) throw ResourceError("cannot write " + path.string());
}

// ---------------------------------------------------------------------------
// Campaign driver
// ---------------------------------------------------------------------------

// Test hook: called after each checkpoint is saved with the number of units
// completed so far in this process.
using UnitHook = std::function<void(std::size_t)>;

// Runs a goldbach or pairs campaign into config.out. With a checkpoint path
// the run resumes from an existing checkpoint of the same campaign and saves
// one after every unit. The returned report covers the whole file: its digest
// is the SHA-256 of the complete output, witnesses counts every line, and
// failures are those found by this process.
inline VerificationReport run_campaign(const CampaignConfig& config, const UnitHook& hook = {}) {
    config.validate();
    std::optional<Checkpoint> resume;
    if (config.checkpoint) {
        resume = load_checkpoint(*config.checkpoint);
        if (resume && resume->campaign != config.campaign_id())
            throw ResourceError("checkpoint belongs to campaign '" + resume->campaign + "', not '" +
                                config.campaign_id() + "'");
    }
    WitnessFile file(config.out, resume);
    u64 lines_before = 0;
    if (resume) {
        std::ifstream in(config.out, std::ios::binary);
        lines_before = static_cast<u64>(std::count(std::istreambuf_iterator<char>(in), {}, '\n'));
    }

    CampaignOptions opts;
    opts.workers = config.workers;
    if (resume) opts.resume_after = resume->last;
    std::size_t units_done = 0;
    auto progress = [&](CampaignCursor cursor) {
        file.flush();
        if (config.checkpoint) save_checkpoint(*config.checkpoint, {config.campaign_id(), cursor, file.bytes(), file.digest()});
        if (hook) hook(++units_done);
    };

    VerificationReport report;
    if (config.subcommand == "goldbach") {
        opts.unit_width = config.segment_width;
        report = verify_goldbach(config.from, config.to, [&](const GoldbachWitness& w) { file.write(format_line(w)); },
                                 opts, progress);
    } else {
        report = verify_pairs(config.max_d, config.p_min, config.p_max,
                              [&](const PairWitness& w) { file.write(format_line(w)); }, opts, progress);
    }
    file.flush();
    report.witnesses += lines_before;
    report.digest = file.digest();
    return report;
}

} // namespace pairjac
