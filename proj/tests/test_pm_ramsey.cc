#include <doctest.h>

#include "support/oracles.hh"

#include <pmramsey/bounds.hh>
#include <pmramsey/core_ramsey.hh>
#include <pmramsey/errors.hh>
#include <pmramsey/pm_ramsey.hh>

#include <functional>
#include <random>

using namespace pmramsey;

namespace {

auto tv(std::vector<int> v) -> TargetVector
{
    return TargetVector(std::move(v));
}

auto quiet() -> PmOptions
{
    PmOptions o;
    o.cross_check = false;
    return o;
}

// Any deterministic function of the sorted list works as a stand-in oracle.
auto fake_oracle(const std::vector<int> &q) -> int
{
    int h = 7;
    for (int v : q)
        h = (h * 31 + v) % 11;
    return 2 + h + static_cast<int>(q.size());
}

// Plain grid recursion over 0 <= d x_i < p_i.
void grid_max(const std::vector<int> &p, int d, std::vector<int> &x, int &best)
{
    if (x.size() == p.size()) {
        std::vector<int> q;
        int sum = 0;
        for (std::size_t i = 0; i < p.size(); ++i) {
            sum += x[i];
            if (p[i] - d * x[i] >= 3)
                q.push_back(p[i] - d * x[i]);
        }
        std::sort(q.rbegin(), q.rend());
        best = std::max(best, (q.empty() ? 2 : fake_oracle(q)) + sum);
        return;
    }
    int pi = p[x.size()];
    for (int xi = 0; d * xi < pi; ++xi) {
        x.push_back(xi);
        grid_max(p, d, x, best);
        x.pop_back();
    }
}

} // namespace

TEST_CASE("f_d equals a plain grid maximum")
{
    std::mt19937_64 rng(51);
    std::uniform_int_distribution<int> rd(1, 4), pd(2, 12), dd(1, 4);
    CoreOracle fake = [](const TargetVector &q) { return fake_oracle(q.values()); };
    for (int k = 0; k < 300; ++k) {
        std::vector<int> p(static_cast<std::size_t>(rd(rng)));
        for (auto &v : p)
            v = pd(rng);
        std::sort(p.rbegin(), p.rend());
        int d = dd(rng);
        int expected = 0;
        std::vector<int> x;
        grid_max(p, d, x, expected);
        auto got = f_d(tv(p), d, fake, 1 + k % 3);
        REQUIRE(got.value == expected);

        // The reported argmax attains the value.
        std::vector<int> q;
        int sum = 0;
        for (std::size_t i = 0; i < p.size(); ++i) {
            CHECK(d * got.argmax[i] < p[i]);
            sum += got.argmax[i];
            if (p[i] - d * got.argmax[i] >= 3)
                q.push_back(p[i] - d * got.argmax[i]);
        }
        std::sort(q.rbegin(), q.rend());
        CHECK((q.empty() ? 2 : fake_oracle(q)) + sum == expected);
    }
}

TEST_CASE("f^3 over exact 1-core values")
{
    CoreOracle exact = [](const TargetVector &q) { return exact_core_ramsey(q).value; };
    CHECK(f_d(tv({3, 3, 3}), 3, exact).value == 4);
    CHECK(f_d(tv({5, 5}), 3, exact).value == 6);

    // The six terms for (6,6,6,6,6): R1C(6^a, 3^(5-a)) + (5 - a).
    int best = 0;
    for (int a = 0; a <= 5; ++a) {
        std::vector<int> q(static_cast<std::size_t>(a), 6);
        q.resize(5, 3);
        best = std::max(best, core_ramsey_value(q) + 5 - a);
    }
    CHECK(f_d(TargetVector::uniform(6, 5), 3, exact).value == best);
}

TEST_CASE("exact values by every strategy")
{
    struct Case
    {
        std::vector<int> p;
        int value;
    };
    std::vector<Case> cases = {{{3, 3, 3}, 4}, {{3, 3, 3, 3}, 4}, {{4, 3, 3, 3}, 5}, {{4, 4, 4}, 6}, {{5, 5, 5}, 7},
        {{2, 2}, 2}, {{5, 5}, 6}, {{6, 4}, 7}};
    for (auto &[p, v] : cases) {
        for (auto s : {PmStrategy::automatic, PmStrategy::reduction, PmStrategy::formula, PmStrategy::search}) {
            auto res = exact_pm_ramsey(tv(p), s);
            CHECK(res.value == v);
            if (auto w = std::get_if<EdgeColoring>(&res.lower_witness)) {
                CHECK(w->n() == v - 1);
                CHECK(is_bad_pm_coloring(*w, res.targets));
            }
            else {
                CHECK(v <= 2);
            }
        }
    }
}

TEST_CASE("exact values match brute force over colourings")
{
    std::vector<std::vector<int>> vectors = {{3, 3}, {4, 3}, {4, 4}, {5, 3}, {5, 2}, {3, 3, 3}, {4, 3, 3}, {3, 3, 2},
        {4, 3, 3, 3}, {3, 3, 3, 3}, {4, 4, 2}, {2, 2, 2}};
    for (auto &p : vectors) {
        auto brute = oracle::ramsey(p, oracle::Measure::path_matching);
        REQUIRE(brute);
        CHECK(exact_pm_ramsey(tv(p), PmStrategy::automatic).value == *brute);
        CHECK(exact_pm_ramsey(tv(p), PmStrategy::reduction, quiet()).value == *brute);
    }
}

TEST_CASE("uniform targets 4 and 5")
{
    for (int r = 2; r <= 6; ++r) {
        CHECK(exact_pm_ramsey(TargetVector::uniform(4, r), PmStrategy::reduction, quiet()).value == r + 3);
        CHECK(exact_pm_ramsey(TargetVector::uniform(5, r), PmStrategy::reduction, quiet()).value == r + 4);
    }
}

TEST_CASE("closed forms")
{
    CHECK(pm_closed_form(tv({2, 2})) == std::pair{2, Method::closed_form});
    CHECK(pm_closed_form(tv({7, 2})) == std::pair{7, Method::closed_form});
    CHECK(pm_closed_form(tv({4, 3, 3, 3})) == std::pair{5, Method::table});
    CHECK(pm_closed_form(TargetVector::uniform(3, 10))->first == 6);
    CHECK_FALSE(pm_closed_form(TargetVector::uniform(6, 5)).has_value());
    CHECK_THROWS_AS(exact_pm_ramsey(TargetVector::uniform(6, 5), PmStrategy::formula), InvalidInput);
    CHECK(exact_pm_ramsey(TargetVector::uniform(6, 5), PmStrategy::reduction, quiet()).value == 10);

    // Whenever a closed form exists the reduction agrees with it.
    std::mt19937_64 rng(52);
    std::uniform_int_distribution<int> rd(2, 5), pd(2, 8);
    CoreMemo memo;
    auto opt = quiet();
    opt.memo = &memo;
    for (int k = 0; k < 150; ++k) {
        std::vector<int> p(static_cast<std::size_t>(rd(rng)));
        for (auto &v : p)
            v = pd(rng);
        TargetVector t(p);
        if (auto cf = pm_closed_form(t))
            CHECK(exact_pm_ramsey(t, PmStrategy::reduction, opt).value == cf->first);
    }
    CHECK(memo.size() > 0);
}

TEST_CASE("witness routes")
{
    auto w = find_lower_witness(6, tv({5, 5, 5}));
    REQUIRE(w);
    CHECK(mono_pm_profile(*w) == std::vector<int>{4, 3, 3});

    auto six = TargetVector::uniform(6, 10);
    auto big = find_lower_witness(15, six);
    REQUIRE(big);
    CHECK(big->n() == 15);
    for (int v : mono_pm_profile(*big))
        CHECK(v <= 5);

    auto k4 = find_lower_witness(4, tv({4, 4}));
    REQUIRE(k4);
    CHECK(is_bad_pm_coloring(*k4, std::vector<int>{4, 4}));

    CHECK_FALSE(find_lower_witness(4, tv({3, 3, 3})));
    CHECK_FALSE(find_lower_witness(7, tv({5, 5, 5})));
}

TEST_CASE("verify_upper")
{
    CHECK_FALSE(verify_upper(4, tv({3, 3, 3})));
    auto tri = verify_upper(3, tv({3, 3, 3}));
    REQUIRE(tri);
    CHECK(mono_pm_profile(*tri) == std::vector<int>{2, 2, 2});
    auto k6 = verify_upper(6, tv({5, 5, 5}));
    REQUIRE(k6);
    CHECK(is_bad_pm_coloring(*k6, std::vector<int>{5, 5, 5}));

    PmOptions tight;
    tight.budget.nodes = 20;
    CHECK_THROWS_AS(verify_upper(8, tv({6, 6, 6}), tight), BudgetExhausted);
}

TEST_CASE("core colourings for shifted vectors")
{
    std::vector<int> q{4, 1, 4, 2};
    auto c = core_coloring_for(q);
    CHECK(c.n() == core_ramsey_value(q) - 1);
    CHECK(is_bad_core_coloring(c, q));
}

TEST_CASE("strategy names")
{
    for (auto s : {PmStrategy::automatic, PmStrategy::search, PmStrategy::reduction, PmStrategy::formula})
        CHECK(parse_strategy(to_string(s)) == s);
    CHECK_FALSE(parse_strategy("fast").has_value());
}
