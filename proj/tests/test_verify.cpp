#include <gtest/gtest.h>

#include <sstream>

#include "bdt/verify.hpp"

using namespace bdt;

namespace {

VerifyConfig small_config(std::string_view schedule) {
    VerifyConfig c{RadixSchedule::parse(schedule)};
    c.dim = 32;
    c.trials = 40;
    return c;
}

} // namespace

TEST(Verify, PassesOnDeskSchedules) {
    for (const char* s : {"2,3,2", "2", "3,5,2*"}) {
        const auto report = run_verification(small_config(s));
        for (const auto& c : report.checks) EXPECT_TRUE(c.pass) << s << ": " << c.name << " residual " << c.residual;
        EXPECT_TRUE(report.pass) << s;
    }
}

TEST(Verify, DeterministicForFixedSeed) {
    const auto a = run_verification(small_config("2,3,2")).to_json();
    const auto b = run_verification(small_config("2,3,2")).to_json();
    EXPECT_EQ(a, b);
}

TEST(Verify, JsonSchema) {
    const auto j = run_verification(small_config("2,3")).to_json();
    EXPECT_EQ(j["schedule"], "2,3");
    ASSERT_TRUE(j["checks"].is_array());
    EXPECT_EQ(j["checks"].size(), 27u);
    for (const auto& c : j["checks"]) {
        EXPECT_TRUE(c["check"].is_string());
        EXPECT_TRUE(c.contains("params"));
        EXPECT_TRUE(c["residual"].is_number());
        EXPECT_TRUE(c["pass"].is_boolean());
    }
    EXPECT_TRUE(j["pass"].is_boolean());
}

TEST(Verify, TinyToleranceFailsNumericalChecks) {
    // eps = 0 is unattainable for the sampled spectral averages.
    auto c = small_config("2,3,2");
    c.eps = 0.0;
    const auto report = run_verification(c);
    EXPECT_FALSE(report.pass);
    std::ostringstream os;
    print_table(os, report);
    EXPECT_NE(os.str().find("FAIL"), std::string::npos);
}
