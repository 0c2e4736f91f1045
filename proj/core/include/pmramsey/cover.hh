#ifndef PMRAMSEY_COVER_HH
#define PMRAMSEY_COVER_HH

#include <pmramsey/budget.hh>
#include <pmramsey/graph.hh>

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace pmramsey {

/// A covering of the pairs of K_n by r cliques; block i holds at most capacities[i] vertices.
struct BlockCover
{
    int n = 0;
    std::vector<int> capacities;
    std::vector<VertexSet> blocks;

    /// Both invariants: block sizes within capacity and every pair inside some block.
    auto valid() const -> bool;

    /// The cover restricted to the first m vertices (still a cover).
    auto truncated(int m) const -> BlockCover;

    auto operator==(const BlockCover &) const -> bool = default;
};

enum class CoverEngine
{
    automatic,
    /// Pick the uncovered pair with fewest admitting blocks, branch on those blocks.
    pair_branching,
    /// Label each vertex by the set of blocks holding it and search over label multisets.
    /// Only for up to max_type_engine_blocks useful blocks.
    vertex_types,
};

inline constexpr int max_type_engine_blocks = 10;

struct CoverOptions
{
    Budget budget;
    int workers = 1;
    CoverEngine engine = CoverEngine::automatic;
    /// Try seeded local search before the complete engines. A cover it finds is
    /// checked like any other; when it fails the complete search decides.
    bool local_search = true;
};

struct CoverOutcome
{
    std::optional<BlockCover> cover;
    std::uint64_t nodes = 0;
    CoverEngine engine_used = CoverEngine::automatic;
    bool from_local_search = false;
};

/// Complete search for a cover of K_n with the given block capacities. Blocks of
/// capacity <= 1 cover nothing and are left empty. Throws BudgetExhausted when
/// the budget runs out before a verdict, InvalidInput if n is outside [1, 64].
auto solve_cover(int n, std::span<const int> capacities, const CoverOptions &options = {}) -> CoverOutcome;

/// Hill climbing with occasional uphill moves over full blocks, from a fixed
/// seed so the result is repeatable. nullopt proves nothing.
auto local_search_cover(int n, std::span<const int> capacities, int restarts = 12, int steps = 40000)
    -> std::optional<BlockCover>;

auto cover_feasible(int n, std::span<const int> capacities, const CoverOptions &options = {})
    -> std::optional<BlockCover>;

} // namespace pmramsey

#endif
