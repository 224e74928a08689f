#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sbm {

struct CheckResult {
    std::string name;
    std::uint64_t cases = 0;
    bool passed = true;
    std::string first_failure;  // empty when passed
};

struct VerifyReport {
    std::int64_t max_n = 0;
    std::vector<CheckResult> checks;

    bool passed() const;
};

/// Runs every identity of the engine: oracle agreement, conservation laws,
/// closed-form checks and proof-trace replay. Ranges in the degree exponent
/// are capped by max_n (>= 1); the fixed small-box checks are not.
VerifyReport run_identity_suite(std::int64_t max_n);

}  // namespace sbm
