#pragma once

#include <string>
#include <vector>

#include "jacobi/numerics.hpp"

namespace jacobi {

struct CheckResult {
    std::string name;
    double residual = 0;
    double tolerance = 0;
    bool passed = false;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool passed() const;
};

/// Names accepted by run_suite.
std::vector<std::string> suite_names();

/// Runs one property suite: weil, heat, casimir, xi, pairing or example.
/// Throws InvalidArgument for an unknown name.
SuiteReport run_suite(const std::string& name, const PrecisionConfig& cfg = {});

}  // namespace jacobi
