#include <pmramsey/coloring.hh>
#include <pmramsey/errors.hh>
#include <pmramsey/int_math.hh>
#include <pmramsey/path_matching.hh>

#include <numeric>
#include <string>

using namespace pmramsey;

EdgeColoring::EdgeColoring(int n, int r) :
    _n(n),
    _r(r)
{
    if (n < 1 || n > max_vertices)
        throw InvalidInput("colouring order must lie in [1, 64], got " + std::to_string(n));
    if (r < 1 || r > 64)
        throw InvalidInput("colour count must lie in [1, 64], got " + std::to_string(r));
    _colors.assign(static_cast<std::size_t>(choose2(n)), 1);
}

auto EdgeColoring::index(int u, int v) const -> std::size_t
{
    if (u > v)
        std::swap(u, v);
    if (u < 0 || v >= _n || u == v)
        throw InvalidInput("no edge {" + std::to_string(u) + "," + std::to_string(v) + "} in K_" + std::to_string(_n));
    return static_cast<std::size_t>(u * (2 * _n - u - 1) / 2 + (v - u - 1));
}

void EdgeColoring::set_color(int u, int v, int c)
{
    if (c < 1 || c > _r)
        throw InvalidInput("colour " + std::to_string(c) + " outside 1.." + std::to_string(_r));
    _colors[index(u, v)] = static_cast<std::uint8_t>(c);
}

auto EdgeColoring::color_class(int c) const -> SimpleGraph
{
    SimpleGraph g(_n);
    std::size_t i = 0;
    for (int u = 0; u < _n; ++u)
        for (int v = u + 1; v < _n; ++v, ++i)
            if (_colors[i] == c)
                g.add_edge(u, v);
    return g;
}

auto EdgeColoring::restrict_to(VertexSet s) const -> EdgeColoring
{
    auto keep = (s & VertexSet::range(_n)).members();
    if (keep.empty())
        throw InvalidInput("cannot restrict a colouring to no vertices");
    EdgeColoring out(static_cast<int>(keep.size()), _r);
    for (std::size_t a = 0; a < keep.size(); ++a)
        for (std::size_t b = a + 1; b < keep.size(); ++b)
            out.set_color(static_cast<int>(a), static_cast<int>(b), color(keep[a], keep[b]));
    return out;
}

auto EdgeColoring::with_colors(int r) const -> EdgeColoring
{
    for (auto c : _colors)
        if (c > r)
            throw InvalidInput("colouring already uses colour " + std::to_string(c));
    EdgeColoring out(_n, r);
    out._colors = _colors;
    return out;
}

auto pmramsey::layered_coloring(std::span<const int> part_sizes) -> EdgeColoring
{
    if (part_sizes.empty())
        throw InvalidInput("layered colouring needs at least one part");
    for (int t : part_sizes)
        if (t < 0)
            throw InvalidInput("part sizes must be nonnegative");
    int n = std::accumulate(part_sizes.begin(), part_sizes.end(), 0);
    if (n < 2)
        throw InvalidInput("layered colouring needs at least two vertices");

    std::vector<int> part;
    for (std::size_t j = 0; j < part_sizes.size(); ++j)
        part.insert(part.end(), static_cast<std::size_t>(part_sizes[j]), static_cast<int>(j) + 1);

    EdgeColoring c(n, static_cast<int>(part_sizes.size()));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            c.set_color(u, v, std::max(part[u], part[v]));
    return c;
}

auto pmramsey::pm_extremal_coloring(const TargetVector &p) -> EdgeColoring
{
    std::vector<int> sizes{p[0] - 1};
    for (int i = 1; i < p.r(); ++i)
        sizes.push_back(static_cast<int>(ceil_div(p[i], 3)) - 1);
    return layered_coloring(sizes);
}

auto pmramsey::core_lift_coloring(const EdgeColoring &core, std::span<const int> x) -> EdgeColoring
{
    if (static_cast<int>(x.size()) != core.r())
        throw InvalidInput("lift needs one block size per colour");
    int added = 0;
    for (int xi : x) {
        if (xi < 0)
            throw InvalidInput("lift block sizes must be nonnegative");
        added += xi;
    }
    int n = core.n() + added;
    if (n > max_vertices)
        throw InvalidInput("lifted colouring would exceed 64 vertices");

    // owner[v] = 0 for core vertices, else the colour of the block v was added in
    std::vector<int> owner(static_cast<std::size_t>(core.n()), 0);
    for (std::size_t i = 0; i < x.size(); ++i)
        owner.insert(owner.end(), static_cast<std::size_t>(x[i]), static_cast<int>(i) + 1);

    EdgeColoring out(n, core.r());
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int c = std::max(owner[u], owner[v]);
            out.set_color(u, v, c == 0 ? core.color(u, v) : c);
        }
    return out;
}

auto pmramsey::mono_pm_profile(const EdgeColoring &c) -> std::vector<int>
{
    std::vector<int> out;
    for (int i = 1; i <= c.r(); ++i)
        out.push_back(max_pm_order(c.color_class(i)));
    return out;
}

auto pmramsey::mono_core_profile(const EdgeColoring &c) -> std::vector<int>
{
    std::vector<std::uint64_t> touched(static_cast<std::size_t>(c.r()), 0);
    std::size_t i = 0;
    auto colours = c.colors();
    for (int u = 0; u < c.n(); ++u)
        for (int v = u + 1; v < c.n(); ++v, ++i)
            touched[colours[i] - 1] |= (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
    std::vector<int> out;
    for (auto t : touched)
        out.push_back(std::popcount(t));
    return out;
}

auto pmramsey::is_bad_pm_coloring(const EdgeColoring &c, std::span<const int> targets) -> bool
{
    if (static_cast<int>(targets.size()) != c.r())
        throw InvalidInput("one target per colour is required");
    for (int i = 1; i <= c.r(); ++i)
        if (max_pm_order(c.color_class(i)) >= targets[static_cast<std::size_t>(i - 1)])
            return false;
    return true;
}

auto pmramsey::is_bad_core_coloring(const EdgeColoring &c, std::span<const int> targets) -> bool
{
    if (static_cast<int>(targets.size()) != c.r())
        throw InvalidInput("one target per colour is required");
    auto profile = mono_core_profile(c);
    for (std::size_t i = 0; i < profile.size(); ++i)
        if (profile[i] >= targets[i])
            return false;
    return true;
}
