#ifndef PMRAMSEY_RESULT_HH
#define PMRAMSEY_RESULT_HH

#include <pmramsey/coloring.hh>
#include <pmramsey/cover.hh>

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace pmramsey {

/// How the upper half of a Ramsey value (no bad structure on `value` vertices) was established.
enum class Method
{
    exhaustive_search,
    f3_reduction,
    closed_form,
    table,
};

auto to_string(Method m) -> std::string;

struct SearchStats
{
    std::uint64_t nodes = 0;
    std::int64_t millis = 0;
};

using LowerWitness = std::variant<std::monostate, EdgeColoring, BlockCover>;

/// A computed Ramsey number with a bad structure on value - 1 vertices.
struct RamseyResult
{
    std::vector<int> targets; ///< sorted nonincreasing
    int value = 0;
    LowerWitness lower_witness;
    Method method = Method::exhaustive_search;
    SearchStats stats;
};

} // namespace pmramsey

#endif
