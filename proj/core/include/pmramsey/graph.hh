#ifndef PMRAMSEY_GRAPH_HH
#define PMRAMSEY_GRAPH_HH

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

namespace pmramsey {

inline constexpr int max_vertices = 64;

/// A subset of {0, ..., 63}, one bit per vertex.
class VertexSet
{
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : _bits(bits) {}

    static constexpr auto range(int n) -> VertexSet
    {
        return VertexSet{n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
    }

    static auto of(std::initializer_list<int> members) -> VertexSet
    {
        VertexSet s;
        for (int v : members)
            s.insert(v);
        return s;
    }

    constexpr auto bits() const -> std::uint64_t { return _bits; }
    constexpr auto contains(int v) const -> bool { return (_bits >> v) & 1U; }
    constexpr auto size() const -> int { return std::popcount(_bits); }
    constexpr auto empty() const -> bool { return _bits == 0; }
    constexpr void insert(int v) { _bits |= std::uint64_t{1} << v; }
    constexpr void erase(int v) { _bits &= ~(std::uint64_t{1} << v); }

    /// Smallest member; undefined on an empty set.
    constexpr auto first() const -> int { return std::countr_zero(_bits); }

    auto members() const -> std::vector<int>
    {
        std::vector<int> out;
        for (auto b = _bits; b; b &= b - 1)
            out.push_back(std::countr_zero(b));
        return out;
    }

    constexpr auto operator|(VertexSet o) const -> VertexSet { return VertexSet{_bits | o._bits}; }
    constexpr auto operator&(VertexSet o) const -> VertexSet { return VertexSet{_bits & o._bits}; }
    constexpr auto operator-(VertexSet o) const -> VertexSet { return VertexSet{_bits & ~o._bits}; }
    constexpr auto operator==(const VertexSet &) const -> bool = default;

private:
    std::uint64_t _bits = 0;
};

/// Simple undirected graph on at most 64 vertices, adjacency held as one bit row per vertex.
class SimpleGraph
{
public:
    explicit SimpleGraph(int n);

    auto size() const -> int { return _n; }
    auto vertices() const -> VertexSet { return VertexSet::range(_n); }
    auto adjacent(int u, int v) const -> bool { return (_rows[u] >> v) & 1U; }
    auto neighbours(int v) const -> VertexSet { return VertexSet{_rows[v]}; }
    auto degree(int v) const -> int { return std::popcount(_rows[v]); }
    auto edge_count() const -> int;

    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    auto operator==(const SimpleGraph &) const -> bool = default;

private:
    int _n;
    std::array<std::uint64_t, max_vertices> _rows{};
};

auto complete_graph(int n) -> SimpleGraph;

/// q_G(S): how many members of s have no neighbour at all in g.
auto isolated_count(const SimpleGraph &g, VertexSet s) -> int;

struct InducedSubgraph
{
    SimpleGraph graph;
    std::vector<int> original; ///< original[i] is the host vertex relabelled to i
};

/// Subgraph induced by s, relabelled to 0..|s|-1 in increasing host order.
auto induced(const SimpleGraph &g, VertexSet s) -> InducedSubgraph;

} // namespace pmramsey

#endif
