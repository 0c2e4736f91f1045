#ifndef PMRAMSEY_COLORING_HH
#define PMRAMSEY_COLORING_HH

#include <pmramsey/graph.hh>
#include <pmramsey/targets.hh>

#include <cstdint>
#include <span>
#include <vector>

namespace pmramsey {

/// An r-colouring of the edges of K_n. Colours are 1..r; storage is the upper
/// triangle row by row: (0,1), (0,2), ..., (0,n-1), (1,2), ...
class EdgeColoring
{
public:
    /// Every edge starts with colour 1.
    EdgeColoring(int n, int r);

    auto n() const -> int { return _n; }
    auto r() const -> int { return _r; }
    auto edge_count() const -> int { return static_cast<int>(_colors.size()); }

    auto color(int u, int v) const -> int { return _colors[index(u, v)]; }
    void set_color(int u, int v, int c);

    /// Row-major upper-triangular colour sequence.
    auto colors() const -> std::span<const std::uint8_t> { return _colors; }

    /// G_c: the spanning graph of colour-c edges.
    auto color_class(int c) const -> SimpleGraph;

    /// Colouring of K_{|s|} induced on s, relabelled in increasing order.
    auto restrict_to(VertexSet s) const -> EdgeColoring;

    /// Same edge colours with more (unused) colours allowed.
    auto with_colors(int r) const -> EdgeColoring;

    auto operator==(const EdgeColoring &) const -> bool = default;

private:
    auto index(int u, int v) const -> std::size_t;

    int _n;
    int _r;
    std::vector<std::uint8_t> _colors;
};

/// The layered colouring [t_1, ..., t_r]: parts A_1..A_r of sizes t_i, and each
/// edge takes the largest index of a part it meets.
auto layered_coloring(std::span<const int> part_sizes) -> EdgeColoring;

/// [p_1 - 1, ceil(p_2/3) - 1, ..., ceil(p_r/3) - 1], with colours in sorted target order.
auto pm_extremal_coloring(const TargetVector &p) -> EdgeColoring;

/// Appends blocks X_1..X_r with |X_i| = x_i and gives every edge touching X_i colour i.
/// An edge between X_i and X_j, i < j, ends up with colour j.
auto core_lift_coloring(const EdgeColoring &core, std::span<const int> x) -> EdgeColoring;

/// Largest path-matching order in each colour class.
auto mono_pm_profile(const EdgeColoring &c) -> std::vector<int>;

/// Number of vertices incident to each colour.
auto mono_core_profile(const EdgeColoring &c) -> std::vector<int>;

/// True when every colour i has path-matching order at most p_i - 1 (entry i of targets).
auto is_bad_pm_coloring(const EdgeColoring &c, std::span<const int> targets) -> bool;

/// True when every colour i touches at most p_i - 1 vertices.
auto is_bad_core_coloring(const EdgeColoring &c, std::span<const int> targets) -> bool;

} // namespace pmramsey

#endif
