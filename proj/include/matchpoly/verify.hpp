#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "matchpoly/errors.hpp"

namespace matchpoly {

struct CriterionResult {
    int number = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyOptions {
    std::uint64_t seed = 0;
    std::uint64_t budget = kDefaultBudget;
    int threads = 1;
};

// Criterion numbers for a suite selector ("all", a criterion name, one of
// the thematic aliases, or a number); throws std::invalid_argument on an
// unknown selector.
std::vector<int> criteria_for_suite(const std::string& selector);

const std::vector<std::pair<int, std::string>>& criterion_names();

// Runs the selected acceptance criteria in ascending order.
std::vector<CriterionResult> run_acceptance(const std::vector<int>& criteria, const VerifyOptions& options);

std::string format_result_line(const CriterionResult& r);

}  // namespace matchpoly
