#ifndef PMRAMSEY_CORE_RAMSEY_HH
#define PMRAMSEY_CORE_RAMSEY_HH

#include <pmramsey/cover.hh>
#include <pmramsey/result.hh>
#include <pmramsey/targets.hh>

#include <optional>
#include <span>

namespace pmramsey {

/// R^1C(p): the least n such that K_n has no cover by cliques of orders
/// p_1 - 1, ..., p_r - 1. Scans n upward from p_1 with cover_feasible; the
/// witness is a cover of K_{value-1} with block i of size at most p_i - 1
/// (block order follows the sorted targets). Throws BudgetExhausted, or
/// InconsistentRoutes if the scan passes a proven upper bound.
auto exact_core_ramsey(const TargetVector &p, const CoverOptions &options = {}) -> RamseyResult;

/// R^1C for any list of positive targets; entries <= 2 are dropped first and a
/// list with nothing left has value 2.
auto core_ramsey_value(std::span<const int> raw, const CoverOptions &options = {}) -> int;

/// C(v, k): the fewest blocks of size k covering the pairs of K_v, if that is at
/// most max_blocks and the search finishes inside the budget.
auto covering_number(int v, int k, int max_blocks, const CoverOptions &options = {}) -> std::optional<int>;

/// Colours each edge of K_n by the first block containing it (colours 1..r).
auto coloring_from_cover(const BlockCover &cover) -> EdgeColoring;

} // namespace pmramsey

#endif
