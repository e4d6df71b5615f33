#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "chaincodes/error.hpp"
#include "chaincodes/literals.hpp"
#include "chaincodes/serialize.hpp"
#include "cli.hpp"

using namespace chaincodes;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("chaincodes_cli_" + name + "_" + std::to_string(::getpid()));
}

}  // namespace

TEST(CliTest, Lift) {
    const auto r = run({"lift", "--ring", "Z:2^2", "--group", "cyclic:3", "--idempotent", "x+x^2"});
    EXPECT_EQ(r.code, cli::kOk);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "2+x+x^2");
    EXPECT_NE(r.out.find("verified: true"), std::string::npos);
    const auto j = run({"lift", "--ring", "Z:2^2", "--group", "cyclic:3", "--idempotent", "x+x^2", "--format", "json"});
    EXPECT_EQ(Json::parse(j.out).at("lift"), "2+x+x^2");
    const auto bad = run({"lift", "--ring", "Z:2^2", "--group", "cyclic:3", "--idempotent", "1+x"});
    EXPECT_EQ(bad.code, cli::kFailure);
    EXPECT_EQ(Json::parse(bad.err).at("error"), to_string(ErrorKind::InvalidGenerator));
}

TEST(CliTest, UsageErrors) {
    EXPECT_EQ(run({}).code, cli::kUsage);
    EXPECT_EQ(run({"frobnicate"}).code, cli::kUsage);
    EXPECT_EQ(run({"lift", "--ring", "Z:2^2"}).code, cli::kUsage);
    EXPECT_EQ(run({"search-selfdual", "--group", "cyclic:10"}).code, cli::kUsage);
    EXPECT_EQ(run({"lift", "--ring", "Z:4", "--group", "cyclic:3", "--idempotent", "1"}).code, cli::kUsage);
    EXPECT_EQ(run({"table", "--from", "11", "--to", "13"}).code, cli::kUsage);
    const auto r = run({"factor", "--p", "2"});
    EXPECT_EQ(r.code, cli::kUsage);
    EXPECT_EQ(Json::parse(r.err).at("error"), "parse");
    EXPECT_EQ(run({"--help"}).code, cli::kOk);
}

TEST(CliTest, Budget) {
    const auto r = run({"search-selfdual", "--group", "dihedral:24", "--budget", "10"});
    EXPECT_EQ(r.code, cli::kBudget);
    EXPECT_EQ(Json::parse(r.err).at("error"), to_string(ErrorKind::BudgetExceeded));
}

TEST(CliTest, Factor) {
    const auto r = run({"factor", "--p", "2", "--n", "7", "--format", "json"});
    ASSERT_EQ(r.code, cli::kOk);
    const Json j = Json::parse(r.out);
    EXPECT_EQ(j.at("factors"), (Json{"x+1", "x^3+x+1", "x^3+x^2+1"}));
    EXPECT_EQ(j.at("idempotents"), 8);
}

TEST(CliTest, Table) {
    const auto dir = temp_path("certs");
    const auto r = run({"table", "--from", "10", "--to", "14", "--certificate-dir", dir.string()});
    ASSERT_EQ(r.code, cli::kOk) << r.err;
    EXPECT_EQ(r.out, "2n,d_H\n10,2\n12,2\n14,3\n");
    const auto cert = dir / "dihedral_14.json";
    ASSERT_TRUE(std::filesystem::exists(cert));
    const auto re = run({"search-selfdual", "--recheck", cert.string(), "--format", "json"});
    EXPECT_EQ(re.code, cli::kOk) << re.err;
    EXPECT_EQ(Json::parse(re.out).at("verified"), true);

    // A tampered distance fails re-verification.
    std::ifstream in(cert);
    Json j = Json::parse(in);
    in.close();
    for (auto& w : j["report"]["optimal"]) w["distance"] = 5;
    j["report"]["best_distance"] = 5;
    const auto bad = dir / "bad.json";
    std::ofstream(bad) << j.dump();
    EXPECT_EQ(run({"search-selfdual", "--recheck", bad.string()}).code, cli::kVerificationFailed);
    std::filesystem::remove_all(dir);
}

TEST(CliTest, SearchOutputs) {
    const auto text = run({"search-selfdual", "--group", "dihedral:16"});
    ASSERT_EQ(text.code, cli::kOk);
    EXPECT_NE(text.out.find("best d_H:                    1"), std::string::npos);
    const auto csv = run({"search-selfdual", "--group", "dihedral:16", "--format", "csv"});
    EXPECT_EQ(csv.out, "2n,d_H\n16,1\n");
    const auto out = temp_path("search.json");
    ASSERT_EQ(run({"search-selfdual", "--group", "dihedral:16", "--format", "json", "--output", out.string()}).code, 0);
    std::ifstream in(out);
    const Json j = Json::parse(in);
    EXPECT_EQ(j.at("schema"), "chaincodes/search-certificate/1");
    EXPECT_EQ(j.at("report").at("best_distance"), 1);
    std::filesystem::remove(out);
}

TEST(CliTest, MinDistanceAndVerify) {
    auto c3 = make_cyclic(3);
    const RingPtr z4 = make_ring({2, 2, RingFlavor::IntegerResidue});
    const auto path = temp_path("code.json");
    std::ofstream(path) << to_json(RCode::left_ideal(c3, z4, {parse_r_element("2+x+x^2", c3, z4)})).dump();
    for (const char* mode : {"auto", "theorem", "exhaustive"}) {
        const auto r = run({"min-distance", "--code", path.string(), "--mode", mode, "--format", "json"});
        ASSERT_EQ(r.code, cli::kOk) << r.err;
        EXPECT_EQ(Json::parse(r.out).at("distance"), 2);
    }
    std::ofstream(path) << to_json(GroupCodeF::full(c3, 2)).dump();
    EXPECT_EQ(Json::parse(run({"min-distance", "--code", path.string(), "--format", "json"}).out).at("distance"), 1);
    std::filesystem::remove(path);
    EXPECT_EQ(run({"min-distance", "--code", path.string()}).code, cli::kUsage);

    for (const char* suite : {"roundtrip", "duality", "distance", "euclidean", "parity", "lifting"}) {
        const auto r = run({"verify", "--suite", suite, "--group", "dihedral:6", "--ring", "Z:2^2"});
        EXPECT_EQ(r.code, cli::kOk) << suite << r.err;
        EXPECT_NE(r.out.find("PASS"), std::string::npos);
    }
}
