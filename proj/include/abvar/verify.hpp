#pragma once

#include <string>
#include <vector>

namespace abvar {

struct CheckResult {
    std::string id;
    bool pass = false;
    std::string detail;  // non-empty on failure
};

/// Runs one of the named suites ("fixtures", "invariants", "census") or
/// "all". Results come back sorted by check id.
std::vector<CheckResult> run_suite(const std::string& suite);

}  // namespace abvar
