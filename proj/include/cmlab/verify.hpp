#pragma once

#include <string>
#include <vector>

namespace cmlab {

struct CheckResult {
    std::string name;
    bool pass = false;
    bool informational = false; // conjecture-consistency smoke checks
    std::string detail;
};

// Named oracle suites exposed by `cmlab verify --suite ...`:
// symbols | gauss-sums | frobenius | residue-counts | classifiers | all
std::vector<CheckResult> verify_suite(const std::string& suite, int threads);

// Acceptance criteria 1..10; each returns the per-check results.
std::vector<CheckResult> acceptance_criterion(int n, int threads);

} // namespace cmlab
