#include <pmramsey/bounds.hh>
#include <pmramsey/core_ramsey.hh>
#include <pmramsey/errors.hh>

#include <algorithm>
#include <chrono>

using namespace pmramsey;

auto pmramsey::to_string(Method m) -> std::string
{
    switch (m) {
    case Method::exhaustive_search: return "exhaustive-search";
    case Method::f3_reduction: return "f3-reduction";
    case Method::closed_form: return "closed-form";
    case Method::table: return "table";
    }
    return "?";
}

auto pmramsey::exact_core_ramsey(const TargetVector &p, const CoverOptions &options) -> RamseyResult
{
    auto start = std::chrono::steady_clock::now();
    std::vector<int> caps;
    for (int v : p.values())
        caps.push_back(v - 1);

    RamseyResult result;
    result.targets = p.values();
    result.method = Method::exhaustive_search;

    // K_{p_1 - 1} is one block; nothing below needs searching.
    int n = std::max(1, p[0] - 1);
    BlockCover last{n, caps, std::vector<VertexSet>(caps.size())};
    last.blocks[0] = VertexSet::range(n);

    auto ceiling = std::min(core_upper_main(p), core_upper_edgecount(p));
    for (++n;; ++n) {
        if (n > ceiling)
            throw InconsistentRoutes("K_" + std::to_string(n - 1) + " is coverable for (" + p.key()
                + ") beyond the proven upper bound " + std::to_string(ceiling));
        auto outcome = solve_cover(n, caps, options);
        result.stats.nodes += outcome.nodes;
        if (! outcome.cover)
            break;
        last = *outcome.cover;
    }

    result.value = n;
    result.lower_witness = last;
    result.stats.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start).count();
    return result;
}

auto pmramsey::core_ramsey_value(std::span<const int> raw, const CoverOptions &options) -> int
{
    std::vector<int> kept;
    for (int v : raw)
        if (v >= 3)
            kept.push_back(v);
    if (kept.empty())
        return 2;
    return exact_core_ramsey(TargetVector(std::move(kept)), options).value;
}

auto pmramsey::covering_number(int v, int k, int max_blocks, const CoverOptions &options) -> std::optional<int>
{
    if (k < 2 || v < k)
        throw InvalidInput("covering_number needs v >= k >= 2");
    try {
        for (int b = 1; b <= max_blocks; ++b)
            if (cover_feasible(v, std::vector<int>(static_cast<std::size_t>(b), k), options))
                return b;
    }
    catch (const BudgetExhausted &) {
    }
    return std::nullopt;
}

auto pmramsey::coloring_from_cover(const BlockCover &cover) -> EdgeColoring
{
    if (! cover.valid())
        throw InvalidInput("not a valid block cover");
    EdgeColoring c(cover.n, static_cast<int>(cover.blocks.size()));
    for (int u = 0; u < cover.n; ++u)
        for (int v = u + 1; v < cover.n; ++v)
            for (std::size_t b = 0; b < cover.blocks.size(); ++b)
                if (cover.blocks[b].contains(u) && cover.blocks[b].contains(v)) {
                    c.set_color(u, v, static_cast<int>(b) + 1);
                    break;
                }
    return c;
}
