#pragma once

#include <cstdint>
#include <string>

namespace camspec {

struct SuiteOptions {
    std::uint64_t seed = 42;
    int trials = 100;
    int p_max = 2; // 1..3
};

struct SuiteResult {
    int passed = 0;
    int failed = 0;
    std::string text;
    bool ok() const { return failed == 0; }
};

// Runs every module's randomized and enumerative property checks from one
// deterministic stream, collecting an observation appendix for the
// report-only comparisons.  trials = 0 is a vacuous pass with no appendix.
SuiteResult run_property_suite(const SuiteOptions& opts);

} // namespace camspec
