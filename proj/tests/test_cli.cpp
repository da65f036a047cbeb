#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "hookforest/cli.hpp"
#include "hookforest/report.hpp"

using namespace hookforest;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST(Cli, CheckInvB) {
    auto r = run({"check", "--forest", "()", "--theorem", "thm-inv-b"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "thm-inv-b (): pass\n  lhs: 1 + q\n  rhs: 1 + q\n");
}

TEST(Cli, DistNmaj) {
    auto r = run({"dist", "--forest", "(())", "--stat", "nmaj-f", "--mode", "signed"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "1 + 2*q + 2*q^2 + 2*q^3 + q^4\n");
}

TEST(Cli, DistPermutations) {
    auto r = run({"dist", "--perms", "3", "--stat", "inv", "--mode", "ordinary"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "1 + 2*q + 2*q^2 + q^3\n");
}

TEST(Cli, RhsRecords) {
    auto r = run({"--format", "records", "rhs", "--forest", "()", "--theorem", "thm-bivariate-majB"});
    EXPECT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(poly_from_triples(j.at("poly")), 1 + BiPoly::monomial(1, 1));
}

TEST(Cli, CheckRecordRoundTrip) {
    auto r = run({"--format", "records", "check", "--forest", "(()())", "--theorem", "thm-fmaj"});
    EXPECT_EQ(r.code, 0);
    auto report = parse_record(r.out);
    EXPECT_TRUE(report.pass);
    EXPECT_EQ(render_record(report) + "\n", r.out);
}

TEST(Cli, Counterexample) {
    auto human = run({"counterexample", "--stat", "nmaj-f", "--vs", "inv-b", "--mode", "signed", "--max-n", "5"});
    EXPECT_EQ(human.code, 0);
    EXPECT_EQ(human.out, slurp(HOOKFOREST_GOLDEN_DIR "/counterexample_nmaj_f_vs_inv_b.txt"));
    auto rec = run({"--format", "records", "counterexample", "--stat", "dmaj-f", "--vs", "inv-d", "--mode",
                    "even-signed", "--max-n", "5", "--jobs", "3"});
    EXPECT_EQ(rec.out, slurp(HOOKFOREST_GOLDEN_DIR "/counterexample_dmaj_f_vs_inv_d.jsonl"));
}

TEST(Cli, CounterexampleNone) {
    auto r = run({"counterexample", "--stat", "inv-b", "--vs", "fmaj-f", "--mode", "signed", "--max-n", "4"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "none\n");
}

TEST(Cli, SweepDeterministicAcrossJobs) {
    auto a = run({"--format", "records", "sweep", "--max-n", "4", "--theorem", "thm-rmaj", "--jobs", "1"});
    auto b = run({"--format", "records", "sweep", "--max-n", "4", "--theorem", "thm-rmaj", "--jobs", "4"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, LinextNegativeLabel) {
    auto r = run({"linext", "--forest", "(())", "--labeling=-1,2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("(2,-1)  maj_B=1"), std::string::npos);
}

TEST(Cli, PartitionsAndBijections) {
    EXPECT_EQ(run({"partitions", "--forest", "(())", "--labeling=2,-1", "--degree", "6"}).code, 0);
    EXPECT_EQ(run({"bijections", "--max-n", "3"}).code, 0);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({"check", "--forest", "(()", "--theorem", "thm-inv-b"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"check", "--forest", "()", "--theorem", "nope"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"linext", "--forest", "(())", "--labeling=1,1"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"linext", "--forest", "(())", "--labeling=1"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
    EXPECT_EQ(run({}).code, cli::kExitUsage);
    auto r = run({"dist", "--forest", "()", "--stat", "inv-d", "--mode", "signed"});
    EXPECT_EQ(r.code, cli::kExitUsage);
    EXPECT_TRUE(r.out.empty());
    EXPECT_FALSE(r.err.empty());
}
