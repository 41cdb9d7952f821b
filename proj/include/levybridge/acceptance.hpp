#pragma once

#include <string>
#include <vector>

namespace levy::acceptance {

struct CheckResult {
    std::string name;
    double value = 0.0;       ///< measured quantity
    double tolerance = 0.0;   ///< bound it must satisfy
    bool passed = false;
    std::string note;         ///< context (units, comparison target, ...)
};

struct CriterionResult {
    int id = 0;
    std::string title;
    std::vector<CheckResult> checks;
    double seconds = 0.0;
    bool passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

/// Run one criterion (1..12) of the verification suite.
CriterionResult run_criterion(int id);

/// All criteria in order.
std::vector<CriterionResult> run_all();

constexpr int kCriterionCount = 12;

}  // namespace levy::acceptance
