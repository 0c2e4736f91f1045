#ifndef PMRAMSEY_APP_REPRODUCE_HH
#define PMRAMSEY_APP_REPRODUCE_HH

#include <nlohmann/json.hpp>

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace pmramsey::app {

inline constexpr int criterion_count = 10;

struct CriterionResult
{
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;
    std::int64_t millis = 0;
};

struct ReproduceOptions
{
    bool include_slow = false;
    int workers = 1;
    std::vector<int> only; ///< criterion ids to run; empty runs all
    std::function<void(const CriterionResult &)> on_result;
};

auto criterion_title(int id) -> std::string;

/// Never throws: an exception inside a criterion marks it failed.
auto run_criterion(int id, const ReproduceOptions &options) -> CriterionResult;
auto reproduce(const ReproduceOptions &options) -> std::vector<CriterionResult>;

/// "PASS  3  exact 1-core values: ... (12 ms)"
auto format_line(const CriterionResult &r) -> std::string;
auto to_json(const std::vector<CriterionResult> &results) -> nlohmann::json;

} // namespace pmramsey::app

#endif
