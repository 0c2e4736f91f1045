#include <doctest.h>

#include "support/oracles.hh"

#include <pmramsey/coloring.hh>
#include <pmramsey/search.hh>

#include <random>

using namespace pmramsey;

namespace {

auto config(int n, std::vector<int> p) -> SearchConfig
{
    return SearchConfig(n, TargetVector(std::move(p)));
}

auto count_leaves(SearchConfig c) -> std::uint64_t
{
    std::uint64_t leaves = 0;
    auto out = enumerate_colorings(c, [&](const EdgeColoring &) {
        ++leaves;
        return true;
    });
    REQUIRE(out.verdict != SearchVerdict::budget_exhausted);
    CHECK(out.counterexamples == leaves);
    return leaves;
}

} // namespace

TEST_CASE("edge order: every prefix of length binom(m,2) spans K_m")
{
    auto order = search_edge_order(6);
    REQUIRE(order.size() == 15);
    CHECK(order[0] == std::pair{0, 1});
    CHECK(order[1] == std::pair{0, 2});
    CHECK(order[2] == std::pair{1, 2});
    CHECK(order[3] == std::pair{0, 3});
    for (std::size_t m = 2, at = 0; m <= 6; ++m)
        for (; at < m * (m - 1) / 2; ++at)
            CHECK(order[at].second < static_cast<int>(m));
}

TEST_CASE("small verdicts")
{
    auto rainbow = enumerate_colorings(config(3, {3, 3, 3}));
    REQUIRE(rainbow.verdict == SearchVerdict::counterexample_found);
    REQUIRE(rainbow.counterexample);
    CHECK(mono_pm_profile(*rainbow.counterexample) == std::vector<int>{2, 2, 2});

    CHECK(enumerate_colorings(config(4, {3, 3, 3})).verdict == SearchVerdict::all_succeed);
    CHECK(enumerate_colorings(config(5, {4, 3, 3, 3})).verdict == SearchVerdict::all_succeed);

    auto k4 = enumerate_colorings(config(4, {4, 3, 3, 3}));
    REQUIRE(k4.counterexample);
    auto &c = *k4.counterexample;
    CHECK(is_bad_pm_coloring(c, std::vector<int>{4, 3, 3, 3}));
    // Colours 2..4 are single edges, so colour 1 is a triangle or a star on three edges.
    for (int col = 2; col <= 4; ++col)
        CHECK(c.color_class(col).edge_count() <= 1);
    CHECK(c.color_class(1).edge_count() >= 3);
}

TEST_CASE("orderly generation visits exactly one colouring per isomorphism class")
{
    // Thresholds above n never prune, so every leaf is a class representative.
    for (int n = 2; n <= 6; ++n) {
        auto frozen = config(n, {n + 2, n + 1});
        CHECK(count_leaves(frozen) == oracle::coloring_classes(n, 2, false));
        if (n <= 5) {
            auto swapped = config(n, {n + 1, n + 1});
            CHECK(count_leaves(swapped) == oracle::coloring_classes(n, 2, true));
        }
    }
    CHECK(count_leaves(config(4, {5, 5, 5})) == oracle::coloring_classes(4, 3, true));
    CHECK(count_leaves(config(4, {7, 6, 5})) == oracle::coloring_classes(4, 3, false));
}

TEST_CASE("known class counts")
{
    CHECK(oracle::coloring_classes(4, 2, false) == 11);
    CHECK(oracle::coloring_classes(5, 2, false) == 34);
    CHECK(oracle::coloring_classes(6, 2, false) == 156);
    CHECK(oracle::coloring_classes(4, 2, true) == 6);
    CHECK(oracle::coloring_classes(5, 2, true) == 18);
}

TEST_CASE("verdicts match naive enumeration for n <= 4 and r <= 3")
{
    std::vector<std::vector<int>> vectors;
    for (int a = 2; a <= 5; ++a) {
        vectors.push_back({a});
        for (int b = 2; b <= a; ++b) {
            vectors.push_back({a, b});
            for (int c = 2; c <= b; ++c)
                vectors.push_back({a, b, c});
        }
    }
    for (auto &p : vectors)
        for (int n = 2; n <= 4; ++n)
            for (auto sym : {SymmetryLevel::none, SymmetryLevel::colors, SymmetryLevel::colors_and_vertices}) {
                auto c = config(n, p);
                c.symmetry = sym;
                auto out = enumerate_colorings(c);
                bool naive = oracle::bad_coloring_exists(n, p, oracle::Measure::path_matching);
                REQUIRE((out.verdict == SearchVerdict::counterexample_found) == naive);
                if (out.counterexample)
                    CHECK(is_bad_pm_coloring(*out.counterexample, p));
            }
}

TEST_CASE("without symmetry every bad colouring is visited")
{
    // Count bad colourings of K_4 for (3,3) directly.
    std::vector<int> p{3, 3};
    auto c = config(4, p);
    c.symmetry = SymmetryLevel::none;
    auto leaves = count_leaves(c);
    std::uint64_t naive = 0;
    auto t = oracle::forest_table(4, 2);
    for (std::uint32_t mask = 0; mask < 64; ++mask) {
        naive += t[mask] < 3 && t[63U & ~mask] < 3;
    }
    CHECK(leaves == naive);
}

TEST_CASE("canonical extension check")
{
    auto equal = config(4, {3, 3});
    std::vector<std::uint8_t> one{1}, two{2};
    CHECK(canonical_extension_check(one, equal));
    CHECK_FALSE(canonical_extension_check(two, equal));
    auto frozen = config(4, {4, 3});
    CHECK(canonical_extension_check(two, frozen));

    // Complete colourings of K_3 and K_4: canonical ones are one per orbit.
    for (auto [n, r] : {std::pair{3, 3}, {4, 2}, {4, 3}}) {
        auto c = config(n, std::vector<int>(static_cast<std::size_t>(r), 9));
        int m = n * (n - 1) / 2;
        std::vector<std::uint8_t> seq(static_cast<std::size_t>(m), 1);
        std::size_t canonical = 0;
        while (true) {
            canonical += canonical_extension_check(seq, c);
            int e = 0;
            while (e < m && ++seq[e] == r + 1)
                seq[e++] = 1;
            if (e == m)
                break;
        }
        CHECK(canonical == oracle::coloring_classes(n, r, true));
    }
}

TEST_CASE("budget exhaustion is an explicit verdict")
{
    // Budgets are charged in batches of a few thousand nodes; this search needs far more.
    auto c = config(8, {9, 9});
    c.budget.nodes = 50;
    auto out = enumerate_colorings(c, [](const EdgeColoring &) { return true; });
    CHECK(out.verdict == SearchVerdict::budget_exhausted);
}

TEST_CASE("determinism across runs and worker counts")
{
    std::vector<std::pair<int, std::vector<int>>> cases = {
        {5, {4, 4}}, {4, {4, 4}}, {5, {4, 3, 3}}, {6, {5, 5, 5}}, {5, {4, 4, 4}}, {6, {4, 4, 4}}, {3, {3, 3, 3}}};
    for (auto &[n, p] : cases) {
        auto base = enumerate_colorings(config(n, p));
        for (int w : {1, 2, 4, 8}) {
            auto c = config(n, p);
            c.workers = w;
            auto out = enumerate_colorings(c);
            CHECK(out.verdict == base.verdict);
            CHECK(out.counterexample == base.counterexample);
        }
    }
}

TEST_CASE("progress hook fires")
{
    auto c = config(7, {5, 5, 5});
    int calls = 0;
    c.progress_interval = std::chrono::milliseconds(0);
    c.progress = [&](const SearchProgress &p) {
        ++calls;
        CHECK(p.depth_histogram.size() == 22);
    };
    enumerate_colorings(c);
    CHECK(calls > 0);
}
