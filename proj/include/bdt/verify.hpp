#pragma once

// The invariant suite behind `bdt verify`: every module's properties at
// desk scale, reported one line per check.

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bdt/mixedradix.hpp"

namespace bdt {

inline constexpr u64 kDefaultSeed = 1729;

struct VerifyConfig {
    RadixSchedule schedule;
    std::size_t dim = 64;
    double eps = 1e-12;
    u64 seed = kDefaultSeed;
    std::size_t trials = 200;
    std::size_t max_level = 3;
};

struct CheckResult {
    std::string name;
    nlohmann::json params;
    // Max-entry residual for numerical checks, failure count for exact ones.
    double residual = 0.0;
    bool pass = false;
};

struct VerifyReport {
    std::string schedule;
    std::vector<CheckResult> checks;
    bool pass = false;

    nlohmann::json to_json() const;
};

// Checks run concurrently; the report order is fixed and results depend only
// on the config.
VerifyReport run_verification(const VerifyConfig& config);

void print_table(std::ostream& os, const VerifyReport& report);

} // namespace bdt
