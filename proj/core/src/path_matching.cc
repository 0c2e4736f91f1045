#include <pmramsey/errors.hh>
#include <pmramsey/path_matching.hh>

#include <algorithm>
#include <string>
#include <vector>

using namespace pmramsey;

namespace
{
    struct SubsetScan
    {
        const SimpleGraph &graph;
        VertexSet all;
        std::vector<int> candidates;
        int best_value;
        VertexSet best_set;

        auto evaluate(VertexSet x) const -> int
        {
            auto rest = all - x;
            int isolated = 0;
            for (auto b = rest.bits(); b; b &= b - 1)
                if ((graph.neighbours(std::countr_zero(b)) & rest).empty())
                    ++isolated;
            return isolated - 2 * x.size();
        }

        // k-subsets of candidates in lexicographic order; only strict improvements
        // are kept, so the first optimum seen wins ties.
        void choose(std::size_t from, int remaining, VertexSet x)
        {
            if (remaining == 0) {
                if (int value = evaluate(x); value > best_value) {
                    best_value = value;
                    best_set = x;
                }
                return;
            }
            for (std::size_t i = from; i + remaining <= candidates.size(); ++i) {
                auto next = x;
                next.insert(candidates[i]);
                choose(i + 1, remaining - 1, next);
            }
        }
    };

    auto isolated_in(const SimpleGraph &g, VertexSet x) -> VertexSet
    {
        auto rest = g.vertices() - x;
        VertexSet out;
        for (auto b = rest.bits(); b; b &= b - 1) {
            int v = std::countr_zero(b);
            if ((g.neighbours(v) & rest).empty())
                out.insert(v);
        }
        return out;
    }
}

auto pmramsey::deficiency(const SimpleGraph &g, int cap) -> DeficiencyResult
{
    int n = g.size();
    if (n > cap)
        throw InvalidInput("deficiency: graph order " + std::to_string(n) + " exceeds cap " + std::to_string(cap));

    SubsetScan scan{g, g.vertices(), {}, 0, VertexSet{}};
    // An isolated vertex inside X is worth 3 more outside it, so optimal sets avoid them.
    for (int v = 0; v < n; ++v)
        if (g.degree(v) > 0)
            scan.candidates.push_back(v);
    scan.best_value = scan.evaluate(VertexSet{});

    for (int k = 1; k <= static_cast<int>(scan.candidates.size()); ++k) {
        // q(G - X) <= n - |X|, so larger X cannot beat the incumbent.
        if ((n - k) - 2 * k <= scan.best_value)
            break;
        scan.choose(0, k, VertexSet{});
    }

    DeficiencyCertificate cert{scan.best_set, isolated_in(g, scan.best_set), scan.best_value};
    return DeficiencyResult{scan.best_value, cert};
}

auto pmramsey::max_pm_order(const SimpleGraph &g, int cap) -> int
{
    return g.size() - deficiency(g, cap).deficiency;
}

auto pmramsey::has_perfect_pm(const SimpleGraph &g, int cap) -> bool
{
    return deficiency(g, cap).deficiency == 0;
}

auto pmramsey::packing_oracle(const SimpleGraph &g) -> int
{
    int n = g.size();
    if (n > packing_oracle_cap)
        throw InvalidInput("packing_oracle: graph order " + std::to_string(n) + " exceeds "
            + std::to_string(packing_oracle_cap));

    // best[mask]: largest packing order using only vertices in mask. The lowest
    // vertex of mask is either left out, or is an end or the middle of a P2/P3.
    std::vector<int> best(std::size_t{1} << n, 0);
    for (std::uint64_t mask = 1; mask < best.size(); ++mask) {
        int v = std::countr_zero(mask);
        auto without_v = mask & (mask - 1);
        int value = best[without_v];
        auto nv = g.neighbours(v).bits() & without_v;
        for (auto a = nv; a; a &= a - 1) {
            int u = std::countr_zero(a);
            auto rest = without_v & ~(std::uint64_t{1} << u);
            value = std::max(value, 2 + best[rest]);
            for (auto c = g.neighbours(u).bits() & rest; c; c &= c - 1) {
                int w = std::countr_zero(c);
                value = std::max(value, 3 + best[rest & ~(std::uint64_t{1} << w)]);
            }
            for (auto c = nv & rest; c; c &= c - 1) {
                int w = std::countr_zero(c);
                value = std::max(value, 3 + best[rest & ~(std::uint64_t{1} << w)]);
            }
        }
        best[mask] = value;
    }
    return best.back();
}
