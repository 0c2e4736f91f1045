#ifndef PMRAMSEY_SEARCH_HH
#define PMRAMSEY_SEARCH_HH

#include <pmramsey/budget.hh>
#include <pmramsey/coloring.hh>
#include <pmramsey/targets.hh>

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace pmramsey {

enum class SymmetryLevel
{
    none,
    colors,              ///< permute colours with equal thresholds
    colors_and_vertices, ///< additionally permute vertices
};

enum class SearchVerdict
{
    all_succeed,          ///< every colouring has colour i with max PM order >= p_i
    counterexample_found, ///< some colouring keeps every colour below its threshold
    budget_exhausted,
};

auto to_string(SearchVerdict v) -> const char *;

struct SearchProgress
{
    std::uint64_t nodes = 0;
    std::chrono::milliseconds elapsed{0};
    double nodes_per_second = 0;
    std::vector<std::uint64_t> depth_histogram; ///< nodes seen per number of coloured edges
};

struct SearchConfig
{
    SearchConfig(int n, TargetVector thresholds) :
        n(n),
        thresholds(std::move(thresholds))
    {
    }

    int n;
    TargetVector thresholds; ///< colour i + 1 must reach thresholds[i]
    Budget budget;
    SymmetryLevel symmetry = SymmetryLevel::colors_and_vertices;
    int workers = 1;
    int split_depth = -1; ///< edges fixed before handing subtrees to workers; -1 picks one
    std::function<void(const SearchProgress &)> progress;
    std::chrono::milliseconds progress_interval{1000};

    auto r() const -> int { return thresholds.r(); }
};

struct SearchOutcome
{
    SearchVerdict verdict = SearchVerdict::all_succeed;
    std::optional<EdgeColoring> counterexample; ///< first one in search order
    std::uint64_t counterexamples = 0;          ///< leaves handed to the visitor
    std::uint64_t nodes = 0;
    std::chrono::milliseconds elapsed{0};
};

/// Called on each counterexample found; return false to stop. With several
/// workers calls are serialized but may arrive out of search order.
using ColoringVisitor = std::function<bool(const EdgeColoring &)>;

/// Edges of K_n in search order: (0,1), (0,2), (1,2), (0,3), ... so the first
/// m(m-1)/2 edges always span K_m.
auto search_edge_order(int n) -> std::vector<std::pair<int, int>>;

/// Exhaustive search over r-colourings of K_n up to the configured symmetry.
/// Branches in which some colour already reaches its threshold are cut, so only
/// counterexamples reach the visitor. Without a visitor the search stops at the
/// first counterexample.
auto enumerate_colorings(const SearchConfig &config, const ColoringVisitor &visitor = {}) -> SearchOutcome;

/// Canonicity test used by the search, for colours of the first prefix.size()
/// edges in search order: colours of each equal-threshold group first appear
/// in increasing order, and the largest complete K_m in the prefix is not mapped
/// to a lexicographically smaller sequence by any vertex permutation combined
/// with a threshold-preserving colour permutation.
auto canonical_extension_check(std::span<const std::uint8_t> prefix, const SearchConfig &config) -> bool;

} // namespace pmramsey

#endif
