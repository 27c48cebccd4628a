#include <sstream>

#include <json.hpp>

#include "golden.hpp"
#include "pclosed_cli/cli.hpp"
#include "test_util.hpp"

using namespace pclosed;
using namespace pclosed::testing;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, GoldenOutputs) {
    const auto cases = load_golden(PCLOSED_GOLDEN_DIR);
    ASSERT_GE(cases.size(), 3u);
    for (const GoldenCase& c : cases) {
        const Result r = run(c.args);
        EXPECT_EQ(r.code, 0) << c.name << ": " << r.err;
        EXPECT_EQ(r.out, c.expected) << c.name;
    }
}

TEST(Cli, CheckJsonSchema) {
    const Result r = run({"check", "--p", "5", "--f", "y", "--g", "x^2", "--json"});
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["schema"], "pclosed/1");
    for (const char* key : {"p", "f", "g", "a", "c_f", "c_g", "obstruction", "p_closed", "witness_a"})
        EXPECT_TRUE(j.contains(key)) << key;
    EXPECT_EQ(j["p"], 5);
    EXPECT_EQ(j["p_closed"], true);
    EXPECT_EQ(j["c_f"], "0");
    EXPECT_EQ(j["c_g"], "0");
}

TEST(Cli, NoWitness) {
    const Result r = run({"check", "--p", "5", "--f", "y", "--g", "x^2", "--no-witness", "--json"});
    ASSERT_EQ(r.code, 0);
    EXPECT_TRUE(nlohmann::json::parse(r.out)["witness_a"].is_null());
}

TEST(Cli, Multiplier) {
    const Result r = run({"multiplier", "--p", "3", "--f", "x,y", "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["n"], 2);
    const RatFn a = K(j["a"].get<std::string>(), 3);
    EXPECT_TRUE(divergence({a * K("x", 3), a * K("y", 3)}).is_zero());
    EXPECT_FALSE(a.is_zero());
}

TEST(Cli, WitnessNotClosed) {
    const Result r = run({"witness", "--p", "5", "--f", "1", "--g", "x^4"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("verdict: not p-closed"), std::string::npos);
    EXPECT_NE(r.out.find("witness_a: none"), std::string::npos);
}

TEST(Cli, Cartier) {
    const Result r = run({"cartier", "--p", "5", "--u", "x^4", "--v", "0", "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["cartier_u"], "1");
    EXPECT_EQ(j["cartier_v"], "0");

    const Result open = run({"cartier", "--p", "5", "--u", "y", "--v", "0"});
    EXPECT_EQ(open.code, cli::kDomainError);
    EXPECT_NE(open.err.find("NotClosed"), std::string::npos);
}

TEST(Cli, SeriesGen) {
    const Result r = run({"series-gen", "--p", "3", "--h", "x*y", "--c", "1", "--level", "1", "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["f"], "x^3*y^2 + x");
    EXPECT_EQ(j["g"], "2*x^2*y^3 + 2*y");
    EXPECT_EQ(j["threshold"], 6);
    EXPECT_EQ(j["ok"], true);

    EXPECT_EQ(run({"series-gen", "--p", "3", "--h", "x*y", "--c", "x", "--level", "1"}).code, cli::kDomainError);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({}).code, cli::kUsageError);
    EXPECT_EQ(run({"frobnicate"}).code, cli::kUsageError);
    EXPECT_EQ(run({"check", "--p", "6", "--f", "x", "--g", "y"}).code, cli::kUsageError);
    EXPECT_EQ(run({"check", "--p", "5", "--f", "x+", "--g", "y"}).code, cli::kUsageError);
    EXPECT_EQ(run({"check", "--p", "5", "--f", "x"}).code, cli::kUsageError);
    // Not divergence-free, but check supplies its own multiplier.
    EXPECT_EQ(run({"check", "--p", "5", "--f", "x", "--g", "y"}).code, cli::kSuccess);
    EXPECT_EQ(run({"check", "--p", "5", "--f", "1/(x-x)", "--g", "y"}).code, cli::kDomainError);
    EXPECT_EQ(run({"--help"}).code, cli::kSuccess);
}

TEST(Cli, ParseErrorReportsPosition) {
    const Result r = run({"check", "--p", "5", "--f", "x+", "--g", "y"});
    EXPECT_NE(r.err.find("position 2"), std::string::npos) << r.err;
}

TEST(Cli, Selftest) {
    const Result r = run({"selftest"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, WorkedExamplesAllPass) {
    for (const auto& fx : cli::worked_examples()) EXPECT_EQ(fx.check(), "") << fx.name;
}
