#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "pairjac");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = pairjac::cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

fs::path scratch(const std::string& name) {
    const auto dir = fs::temp_directory_path() / "pairjac_cli";
    fs::create_directories(dir);
    return dir / name;
}

} // namespace

TEST(Cli, H2PrintsValueAndWitness) {
    const auto r = run({"h2", "2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("h2(2) = 6"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("witness"), std::string::npos);
    const auto o = run({"h2", "3", "--oracle"});
    EXPECT_NE(o.out.find("h2(3) = 18"), std::string::npos) << o.out;
}

TEST(Cli, J2AndJacobsthal) {
    EXPECT_NE(run({"j2", "12"}).out.find("j2(12) = 6"), std::string::npos);
    EXPECT_NE(run({"j2", "9", "--oracle"}).out.find("j2(9) = 3"), std::string::npos);
    EXPECT_NE(run({"jacobsthal", "30"}).out.find("j(30) = 6"), std::string::npos);
    EXPECT_NE(run({"jacobsthal", "5", "--primorial"}).out.find("= 14"), std::string::npos);
}

TEST(Cli, GoldbachFile) {
    const auto out = scratch("g.lis");
    const auto r = run({"goldbach", "--from", "12", "--to", "28", "--out", out.string()});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(slurp(out), "12 5 7\n14 7 7\n16 5 11\n18 5 13\n20 7 13\n22 5 17\n24 5 19\n26 7 19\n28 5 23\n");
    EXPECT_TRUE(fs::exists(out.string() + ".json"));
}

TEST(Cli, PairsFile) {
    const auto out = scratch("p.lis");
    const auto r = run({"pairs", "--max-d", "2", "--p-min", "3", "--p-max", "6", "--out", out.string()});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(slurp(out), "2 3 5 7\n2 5 11 13\n");
}

TEST(Cli, BoundTable) {
    const auto json = scratch("bound.json");
    const auto r = run({"bound", "--from", "3", "--to", "5", "--json", json.string()});
    EXPECT_EQ(r.code, 0) << r.out;
    for (const char* s : {"20", "42", "110", "18", "30", "66"}) EXPECT_NE(r.out.find(s), std::string::npos) << s;
    const auto rep = run({"report", "--bound", json.string()});
    EXPECT_EQ(rep.code, 0);
    EXPECT_NE(rep.out.find("checked in range"), std::string::npos);
}

TEST(Cli, BoundBudgetExhaustedIsAnError) {
    const auto r = run({"bound", "--from", "7", "--to", "7", "--node-limit", "1000"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.out.find("lower bound"), std::string::npos) << r.out;
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"h2"}).code, 2);
    EXPECT_EQ(run({"goldbach", "--from", "10", "--to", "20", "--out", scratch("bad.lis").string()}).code, 2);
    EXPECT_EQ(run({"h2", "16", "--oracle"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}
