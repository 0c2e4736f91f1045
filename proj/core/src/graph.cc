#include <pmramsey/errors.hh>
#include <pmramsey/graph.hh>

#include <string>

using namespace pmramsey;

namespace
{
    void check_vertex(int n, int v)
    {
        if (v < 0 || v >= n)
            throw InvalidInput("vertex " + std::to_string(v) + " outside graph of order " + std::to_string(n));
    }
}

SimpleGraph::SimpleGraph(int n) :
    _n(n)
{
    if (n < 1 || n > max_vertices)
        throw InvalidInput("graph order must lie in [1, 64], got " + std::to_string(n));
}

auto SimpleGraph::edge_count() const -> int
{
    int twice = 0;
    for (int v = 0; v < _n; ++v)
        twice += std::popcount(_rows[v]);
    return twice / 2;
}

void SimpleGraph::add_edge(int u, int v)
{
    check_vertex(_n, u);
    check_vertex(_n, v);
    if (u == v)
        throw InvalidInput("self-loops are not allowed");
    _rows[u] |= std::uint64_t{1} << v;
    _rows[v] |= std::uint64_t{1} << u;
}

void SimpleGraph::remove_edge(int u, int v)
{
    check_vertex(_n, u);
    check_vertex(_n, v);
    _rows[u] &= ~(std::uint64_t{1} << v);
    _rows[v] &= ~(std::uint64_t{1} << u);
}

auto pmramsey::complete_graph(int n) -> SimpleGraph
{
    SimpleGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

auto pmramsey::isolated_count(const SimpleGraph &g, VertexSet s) -> int
{
    int count = 0;
    for (auto b = (s & g.vertices()).bits(); b; b &= b - 1)
        if (g.degree(std::countr_zero(b)) == 0)
            ++count;
    return count;
}

auto pmramsey::induced(const SimpleGraph &g, VertexSet s) -> InducedSubgraph
{
    s = s & g.vertices();
    if (s.empty())
        throw InvalidInput("induced subgraph on an empty vertex set");

    auto original = s.members();
    std::array<int, max_vertices> position{};
    for (std::size_t i = 0; i < original.size(); ++i)
        position[original[i]] = static_cast<int>(i);

    SimpleGraph sub(static_cast<int>(original.size()));
    for (std::size_t i = 0; i < original.size(); ++i)
        for (auto b = (g.neighbours(original[i]) & s).bits(); b; b &= b - 1) {
            int w = position[std::countr_zero(b)];
            if (w > static_cast<int>(i))
                sub.add_edge(static_cast<int>(i), w);
        }
    return InducedSubgraph{std::move(sub), std::move(original)};
}
