#pragma once

// Truth-table suites for the built-in primitives, every entry evaluated
// through the switch-level solver and compared with the published tables.

#include "mvroute/primitives.hpp"

#include <string>
#include <vector>

namespace mvroute {

struct SuiteResult {
    std::string name;
    int passed = 0;
    int total = 0;
    std::vector<std::string> failures;

    [[nodiscard]] bool ok() const noexcept { return passed == total && total > 0; }
};

/// dlc (12 entries), repeater-states (48), repeater-identity (4),
/// translator-4to2 (4 rows x 6 columns counted per row), translator-roundtrip
/// (4 levels plus 4 bit pairs).
[[nodiscard]] std::vector<SuiteResult> run_truth_table_suites(const VoltageMap& vmap,
                                                              const PrimitiveOptions& options = {});

}  // namespace mvroute
