#pragma once

#include <string>
#include <vector>

namespace amp {

// One entry of the built-in acceptance suite (`amp check`). Tolerances are
// pinned in the implementation; detail reports the measured numbers whether
// the criterion passes or not.
struct CriterionResult {
    int id = 0;
    bool pass = false;
    std::string detail;
};

inline constexpr int criterion_count = 9;

CriterionResult run_criterion(int id);  // id in [1, criterion_count]
std::vector<CriterionResult> run_all_criteria();

}  // namespace amp
