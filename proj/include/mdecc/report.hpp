#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "mdecc/code.hpp"

namespace mdecc {

struct BoundCheck {
    std::string label;
    long long lhs = 0;
    std::string relation;  // "<=", "=="
    long long rhs = 0;
    bool pass = true;
    bool flagged = false;  // known formula mismatch, both numbers reported
    std::string note;
};

struct RedundancyReport {
    std::string code_name;
    std::string shape;
    long long volume = 0;
    int redundancy = 0;
    int ceil_log_volume = 0;
    int excess = 0;            // r - ceil(log2 N)
    int field_degree = -1;     // m, where the code folds a field
    int excess_over_field = -1;  // r - m, the published excess accounting
    long long class_size = -1;   // correctable patterns plus the no-error event
    int event_lower_bound = -1;  // ceil(log2(class_size))
    std::vector<BoundCheck> checks;

    bool all_bounds_pass() const;
    nlohmann::json to_json() const;
};

/// Enumerating the class is skipped above this many cells.
constexpr long long kClassEnumerationLimit = 1 << 20;

RedundancyReport redundancy_report(const BlockCode& code, bool with_class = true);

}  // namespace mdecc
