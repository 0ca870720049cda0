#pragma once

#include <string>
#include <vector>

#include "gramlab/word.hpp"

// Worked examples with known answers, checked against the library.

namespace gramlab::reference {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Names accepted by run_checks, in execution order.
std::vector<std::string> check_names();

/// Runs every check, or only the named one. Throws precondition for an unknown name.
std::vector<CheckResult> run_checks(const std::string& only = "");

/// The 64 LZ78 factors of s_{2,4} in factorization order, as run-length strings like "a4b3a2".
const std::vector<std::string>& lz78_s24_listing();

/// "a4b3a2" -> aaaabbbaa over a = 0, b = 1.
std::vector<symbol_t> expand_runs(const std::string& runs);

} // namespace gramlab::reference
