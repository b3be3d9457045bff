#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace weylpi {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;
};

struct Criterion {
    int id;
    std::string title;
    std::function<CriterionResult()> run;
};

/// The reproduction table: one entry per acceptance criterion, in order.
const std::vector<Criterion>& criteria();

/// Runs one criterion, converting exceptions into a failed result.
CriterionResult run_criterion(const Criterion& c);

std::vector<CriterionResult> run_all();

std::string to_text(const CriterionResult& r);
nlohmann::json to_json(const std::vector<CriterionResult>& results);

} // namespace weylpi
