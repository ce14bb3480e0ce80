#pragma once

#include <string>
#include <vector>

#include "mdecc/code.hpp"
#include "mdecc/report.hpp"

namespace mdecc {

struct VerifyFailure {
    std::string kind;  // "roundtrip" or "injectivity"
    std::string pattern;
    std::string detail;
};

struct VerifyReport {
    std::string code_name;
    long long class_size = 0;       // correctable patterns, no-error excluded
    long long patterns_tested = 0;
    bool injective = false;
    long long collisions = 0;
    std::vector<VerifyFailure> failures;
    RedundancyReport redundancy;
    double wall_seconds = 0;
    int jobs = 1;

    bool ok() const { return injective && failures.empty(); }
    nlohmann::json to_json() const;
};

/// Exhaustive desk-scale verification: syndrome injectivity over the class
/// plus the no-error event, then decode(syndrome_of(e)) == e for every class
/// pattern. Round trips are spread over `jobs` threads.
VerifyReport verify_code(const BlockCode& code, int jobs = 1);

}  // namespace mdecc
