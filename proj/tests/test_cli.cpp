#include <gtest/gtest.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = bdt::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST(Cli, Digits) {
    auto r = run({"digits", "--schedule", "2,3,2", "--n", "11", "--k", "3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "1,2,1\n");
    r = run({"digits", "--schedule", "2,3,2", "--word", "1,2,1"});
    EXPECT_EQ(r.out, "11\n");
    r = run({"digits", "--schedule", "2,3", "--start", "1,1|M", "--k", "3", "--json"});
    EXPECT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["digits"], (nlohmann::json{1, 1, 2}));
    EXPECT_EQ(j["value"], 1 + 2 + 2 * 6);
    EXPECT_EQ(run({"digits", "--schedule", "2,3", "--n", "6", "--k", "2"}).code, 1);
}

TEST(Cli, Orbit) {
    auto r = run({"orbit", "--schedule", "2,3", "--start", "max", "--steps", "1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "|M\n|Z\n");
    r = run({"orbit", "--schedule", "2,3", "--start", "max", "--steps", "1", "--partial"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("error"), std::string::npos);
    r = run({"orbit", "--schedule", "2", "--steps", "3", "--json"});
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["points"], (nlohmann::json{"|Z", "1|Z", "0,1|Z", "1,1|Z"}));
    r = run({"orbit", "--schedule", "2", "--start", "nat:4", "--steps", "2"});
    EXPECT_EQ(r.out, "4\n5\n6\n");
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"orbit"}).code, 2);
    EXPECT_EQ(run({"orbit", "--schedule", "1,2"}).code, 2);
    EXPECT_EQ(run({"orbit", "--schedule", "2", "--start", "bogus"}).code, 2);
    EXPECT_EQ(run({"visits", "--schedule", "2"}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, Visits) {
    const auto r = run({"visits", "--schedule", "2,3", "--k", "2", "--json"});
    EXPECT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["cylinders"].size(), 6u);
    EXPECT_TRUE(j["each_window_visits_all_once"].get<bool>());
}

TEST(Cli, Neighborhood) {
    auto r = run({"neighborhood", "--schedule", "2", "--start", "1|Z", "--k", "1", "--n", "8", "--json",
                  "--point", "3"});
    EXPECT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["naturals"], (nlohmann::json{1, 3, 5, 7}));
    EXPECT_TRUE(j["member"].get<bool>());
    r = run({"neighborhood", "--schedule", "2", "--start", "1|Z", "--k", "1", "--dump", "--dim", "4"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("theta of it:\n0 0 0 0\n0 0 0 0\n0 0 1 0\n0 0 0 0\n"), std::string::npos) << r.out;
}

TEST(Cli, Converge) {
    const auto r = run({"converge", "--schedule", "2,3", "--seq", "6,12,18,36", "--start", "zeros", "--k", "2",
                        "--json"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(nlohmann::json::parse(r.out)["converges"].get<bool>());
    EXPECT_EQ(run({"converge", "--schedule", "2", "--seq", "1,x", "--start", "zeros", "--k", "1"}).code, 2);
}

TEST(Cli, Measure) {
    const auto r = run({"measure", "--schedule", "2,3", "--k", "2", "--json"});
    EXPECT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["steps"], 60);
    EXPECT_EQ(j["cylinders"][0]["measure"], "1/6");
    EXPECT_TRUE(j["within_bound"].get<bool>());
}

TEST(Cli, Verify) {
    const auto r = run({"verify", "--schedule", "2,3,2", "--dim", "64", "--json"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_TRUE(nlohmann::json::parse(r.out)["pass"].get<bool>());
}
