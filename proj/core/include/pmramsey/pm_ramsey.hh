#ifndef PMRAMSEY_PM_RAMSEY_HH
#define PMRAMSEY_PM_RAMSEY_HH

#include <pmramsey/budget.hh>
#include <pmramsey/coloring.hh>
#include <pmramsey/search.hh>
#include <pmramsey/result.hh>
#include <pmramsey/targets.hh>

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace pmramsey {

/// R^1C as a function of normalized targets (sorted, every entry >= 3).
using CoreOracle = std::function<int(const TargetVector &)>;

/// Thread-safe cache of exact R^1C values keyed by the sorted target list.
class CoreMemo
{
public:
    auto find(const std::string &key) const -> std::optional<int>;
    void store(const std::string &key, int value);
    auto size() const -> std::size_t;

private:
    mutable std::mutex _mutex;
    std::map<std::string, int> _values;
};

struct FdResult
{
    int value = 0;
    std::vector<int> argmax; ///< first maximizing x, indexed like the sorted targets
};

/// max over integers 0 <= x_i, d x_i < p_i of R^1C(p - d x) + sum x_i. Shifted
/// vectors are sorted and entries <= 2 dropped before the oracle sees them; when
/// nothing is left the term uses R^1C = 2. Each distinct shifted vector is
/// evaluated once, on up to `workers` threads.
auto f_d(const TargetVector &p, int d, const CoreOracle &oracle, int workers = 1) -> FdResult;

enum class PmStrategy
{
    automatic,
    search,
    reduction,
    formula,
};

auto to_string(PmStrategy s) -> std::string;
auto parse_strategy(const std::string &s) -> std::optional<PmStrategy>;

struct PmOptions
{
    Budget budget;   ///< applies to each search or cover call separately
    int workers = 1;
    /// Under automatic, confirm the value by colouring search when that fits in
    /// the limits below; a search that runs out is skipped, a disagreement throws.
    bool cross_check = true;
    int cross_check_max_n = 8;
    std::uint64_t cross_check_nodes = 2'000'000;
    std::chrono::milliseconds cross_check_time{5000};
    CoreMemo *memo = nullptr; ///< shared R^1C cache; a private one is used if null
    std::function<void(const SearchProgress &)> progress; ///< passed to colouring searches
};

/// R^PM(p). The lower witness is a colouring of K_{value-1} whose colour i (in
/// sorted target order) has max path-matching order at most p_i - 1.
/// Throws BudgetExhausted, InvalidInput when the formula strategy has no proven
/// closed form for p, and InconsistentRoutes when two routes disagree.
auto exact_pm_ramsey(const TargetVector &p, PmStrategy strategy = PmStrategy::automatic,
    const PmOptions &options = {}) -> RamseyResult;

/// The closed form for R^PM(p) where one is proven, else nullopt.
auto pm_closed_form(const TargetVector &p) -> std::optional<std::pair<int, Method>>;

/// A colouring of K_n with every colour below its target, if one exists.
/// Throws BudgetExhausted.
auto verify_upper(int n, const TargetVector &p, const PmOptions &options = {}) -> std::optional<EdgeColoring>;

/// A bad colouring of K_n built from, in order: the layered extremal colouring,
/// the lift over a rainbow core with x_i = ceil(p_i/3) - 1, the lift at a
/// maximizing point of f^3, and colouring search. Every candidate is checked
/// with mono_pm_profile before it is returned.
auto find_lower_witness(int n, const TargetVector &p, const PmOptions &options = {}) -> std::optional<EdgeColoring>;

/// Bad 1-core colouring of K_{R^1C(q)-1} for a raw shifted vector q (entries >= 1,
/// any order): colour i touches at most q_i - 1 vertices.
auto core_coloring_for(const std::vector<int> &q, const PmOptions &options = {}) -> EdgeColoring;

} // namespace pmramsey

#endif
