#include <doctest.h>

#include <pmramsey/bounds.hh>
#include <pmramsey/coloring.hh>
#include <pmramsey/errors.hh>
#include <pmramsey/path_matching.hh>

#include <random>

using namespace pmramsey;

namespace {

auto parts(std::initializer_list<int> t) -> EdgeColoring
{
    std::vector<int> v(t);
    return layered_coloring(v);
}

} // namespace

TEST_CASE("layered colourings")
{
    auto k2 = parts({2, 0});
    CHECK(k2.n() == 2);
    CHECK(k2.color(0, 1) == 1);

    auto c = parts({4, 1, 1});
    CHECK(c.n() == 6);
    auto g1 = c.color_class(1);
    CHECK(g1.edge_count() == 6);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v)
            CHECK(g1.adjacent(u, v));
    CHECK(c.color_class(2).edge_count() == 4);
    CHECK(c.color_class(2).degree(4) == 4);
    CHECK(c.color_class(3).edge_count() == 5);
    CHECK(c.color_class(3).degree(5) == 5);

    auto d = parts({3, 1});
    CHECK(d.color_class(2).edge_count() == 3);
    CHECK(d.color_class(2).degree(3) == 3);

    CHECK_THROWS_AS(parts({1, 0}), InvalidInput);
    CHECK_THROWS_AS(parts({2, -1}), InvalidInput);
}

TEST_CASE("profiles")
{
    auto c = parts({4, 1, 1});
    CHECK(mono_pm_profile(c) == std::vector<int>{4, 3, 3});
    CHECK(mono_core_profile(c) == std::vector<int>{4, 5, 6});

    CHECK(mono_pm_profile(EdgeColoring(4, 1)) == std::vector<int>{4});
    CHECK(mono_core_profile(EdgeColoring(7, 1)) == std::vector<int>{7});

    EdgeColoring rainbow(3, 3);
    rainbow.set_color(0, 2, 2);
    rainbow.set_color(1, 2, 3);
    CHECK(mono_pm_profile(rainbow) == std::vector<int>{2, 2, 2});
    CHECK(mono_core_profile(rainbow) == std::vector<int>{2, 2, 2});
}

TEST_CASE("extremal colourings")
{
    CHECK(pm_extremal_coloring(TargetVector({5, 5, 5})) == parts({4, 1, 1}));
    CHECK(pm_extremal_coloring(TargetVector({4, 4, 4})) == parts({3, 1, 1}));
    auto mono = pm_extremal_coloring(TargetVector({6, 2}));
    CHECK(mono.n() == 5);
    CHECK(mono.color_class(2).edge_count() == 0);

    // Targets given out of order still colour in sorted target order.
    CHECK(pm_extremal_coloring(TargetVector({4, 7})) == pm_extremal_coloring(TargetVector({7, 4})));
}

TEST_CASE("extremal colourings are bad for every vector with r <= 5 and entries <= 9")
{
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<int> rd(1, 5), pd(3, 9);
    for (int k = 0; k < 400; ++k) {
        std::vector<int> p(static_cast<std::size_t>(rd(rng)));
        for (auto &x : p)
            x = pd(rng);
        TargetVector t(p);
        auto c = pm_extremal_coloring(t);
        CHECK(is_bad_pm_coloring(c, t.values()));
        CHECK(c.n() == pm_standard_value(t).value - 1);
    }
}

TEST_CASE("lifts")
{
    auto core = parts({2, 1});
    std::vector<int> zero{0, 0};
    CHECK(core_lift_coloring(core, zero) == core);

    // Rainbow K_5 in ten colours, one extra vertex per colour.
    EdgeColoring k5(5, 10);
    int col = 1;
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v)
            k5.set_color(u, v, col++);
    std::vector<int> ones(10, 1);
    auto lifted = core_lift_coloring(k5, ones);
    CHECK(lifted.n() == 15);
    for (int p : mono_pm_profile(lifted))
        CHECK(p <= 5);
    CHECK(is_bad_pm_coloring(lifted, TargetVector::uniform(6, 10).values()));

    // The block X_i gets colour i, including edges to earlier blocks.
    CHECK(lifted.color(5, 6) == 2);
    CHECK(lifted.color(0, 14) == 10);
}

TEST_CASE("a bad 1-core colouring lifts to a bad path-matching colouring")
{
    std::mt19937_64 rng(22);
    for (int k = 0; k < 200; ++k) {
        int r = 2 + k % 3;
        int n = 3 + k % 4;
        EdgeColoring core(n, r);
        std::uniform_int_distribution<int> cd(1, r), xd(0, 2);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                core.set_color(u, v, cd(rng));
        std::vector<int> x(static_cast<std::size_t>(r));
        for (auto &xi : x)
            xi = xd(rng);
        auto prof = mono_core_profile(core);
        std::vector<int> targets;
        for (int i = 0; i < r; ++i)
            targets.push_back(prof[i] + 1 + 3 * x[i]);
        auto lifted = core_lift_coloring(core, x);
        if (lifted.n() > default_deficiency_cap)
            continue;
        CHECK(is_bad_pm_coloring(lifted, targets));
    }
}

TEST_CASE("restriction and widening")
{
    auto c = parts({4, 1, 1});
    auto r = c.restrict_to(VertexSet::of({0, 1, 4}));
    CHECK(r.n() == 3);
    CHECK(r.color(0, 1) == 1);
    CHECK(r.color(1, 2) == 2);
    auto w = c.with_colors(5);
    CHECK(w.r() == 5);
    CHECK(mono_pm_profile(w) == std::vector<int>{4, 3, 3, 0, 0});
}

TEST_CASE("colour range is checked")
{
    EdgeColoring c(3, 2);
    CHECK_THROWS_AS(c.set_color(0, 1, 3), InvalidInput);
    CHECK_THROWS_AS(c.set_color(0, 1, 0), InvalidInput);
}
