#include <doctest.h>

#include "support/oracles.hh"

#include <pmramsey/bounds.hh>
#include <pmramsey/int_math.hh>

#include <random>

using namespace pmramsey;

namespace {

auto tv(std::initializer_list<int> v) -> TargetVector
{
    return TargetVector(std::vector<int>(v));
}

auto random_sorted(std::mt19937_64 &rng, int r_lo, int r_hi, int lo, int hi) -> std::vector<int>
{
    std::uniform_int_distribution<int> rd(r_lo, r_hi), pd(lo, hi);
    std::vector<int> v(static_cast<std::size_t>(rd(rng)));
    for (auto &x : v)
        x = pd(rng);
    std::sort(v.rbegin(), v.rend());
    return v;
}

} // namespace

TEST_CASE("integer helpers")
{
    CHECK(ceil_div(7, 3) == 3);
    CHECK(ceil_div(-7, 3) == -2);
    CHECK(floor_div(-7, 3) == -3);
    CHECK(isqrt(80) == 8);
    CHECK(isqrt(81) == 9);
    CHECK(binomial(13, 5) == 1287);
}

TEST_CASE("matching Ramsey formula against brute force")
{
    CHECK(cockayne_lorimer(tv({2, 2})) == 2);
    CHECK(cockayne_lorimer(tv({4, 4})) == 5);
    CHECK(cockayne_lorimer(tv({4, 3, 2})) == 5);
    for (auto p : {std::vector<int>{4, 4}, {4, 3, 2}, {4, 3}, {4, 2, 2}, {2, 2, 2}})
        CHECK(oracle::ramsey(p, oracle::Measure::matching) == cockayne_lorimer(TargetVector(p)));
    // Odd p_1 behaves like p_1 + 1.
    for (auto p : {std::vector<int>{3, 3}, {3, 2}, {3, 2, 2}, {3, 3, 2}})
        CHECK(oracle::ramsey(p, oracle::Measure::matching) == cockayne_lorimer(TargetVector(p)) + 1);
}

TEST_CASE("standard value and its exactness flag")
{
    auto a = pm_standard_value(tv({7, 6, 6, 6, 6}));
    CHECK(a.value == 11);
    CHECK(a.exact);
    auto b = pm_standard_value(tv({6, 6, 6, 6, 6}));
    CHECK(b.value == 10);
    CHECK_FALSE(b.exact);
    auto c = pm_standard_value(tv({5, 5}));
    CHECK(c.value == 6);
    CHECK(c.exact);
}

TEST_CASE("upper and lower bounds")
{
    CHECK(pm_upper(tv({4, 4, 4})) == 6);
    CHECK(pm_upper(tv({5, 5})) == 6);
    CHECK(pm_upper(TargetVector::uniform(6, 10)) == 21);

    auto l = pm_lowers(tv({5, 5, 5}));
    CHECK(l.standard == 7);
    CHECK(l.design == 5);
    auto m = pm_lowers(tv({3, 3}));
    CHECK(m.standard == 3);
    CHECK(m.design == 3);
    auto six = pm_lowers(TargetVector::uniform(6, 10));
    CHECK(six.standard == 15);
    CHECK(six.design == 16);
}

TEST_CASE("all-3 value is the least n with binom(n,2) > r")
{
    CHECK(pm_all3(2) == 3);
    CHECK(pm_all3(3) == 4);
    CHECK(pm_all3(10) == 6);
    for (std::int64_t r = 0; r <= 5000; ++r) {
        std::int64_t n = 1;
        while (n * (n - 1) / 2 <= r)
            ++n;
        REQUIRE(all3_formula(r) == n);
    }
    for (int r = 2; r <= 4; ++r)
        CHECK(oracle::ramsey(std::vector<int>(static_cast<std::size_t>(r), 3), oracle::Measure::one_core)
            == pm_all3(r));
}

TEST_CASE("diagonal guarantee")
{
    CHECK(diagonal_guarantee(12, 2) == 9);
    CHECK(diagonal_guarantee(7, 3) == 3);
    CHECK(diagonal_guarantee(4, 3) == 0);
}

TEST_CASE("1-core upper bounds")
{
    CHECK(core_upper_edgecount(tv({4, 4, 4})) == 5);
    CHECK(core_upper_edgecount(tv({5, 5, 5})) == 7);
    for (int r = 2; r <= 20; ++r)
        CHECK(core_upper_edgecount(TargetVector::uniform(3, r)) == all3_formula(r));

    CHECK(core_upper_degree(tv({4, 4, 4})) == 5);
    CHECK(core_upper_degree(tv({3, 3})) == 3);
    CHECK_FALSE(core_upper_degree(tv({9, 2}), 5).has_value());

    CHECK(core_upper_main(tv({5, 5, 5})) == 7);
    CHECK(core_upper_main(tv({4, 4, 4})) == 5);
    CHECK(core_upper_main(tv({7, 4})) == 7);
}

TEST_CASE("covering lower bounds")
{
    CHECK(covering_lower_eh(9, 4) == 6);
    CHECK(covering_lower_eh(13, 5) == 8);
    CHECK(covering_lower_eh(6, 6) == 1);
    CHECK(covering_lower_schonheim(9, 5) == 4);
    CHECK(covering_lower_schonheim(13, 5) == 8);
    CHECK(covering_lower_schonheim(7, 7) == 1);
    for (int v = 3; v <= 6; ++v)
        for (int k = 3; k <= v; ++k) {
            int exact = oracle::covering_number(v, k);
            CHECK(covering_lower_schonheim(v, k) <= exact);
            CHECK(covering_lower_eh(v, k) <= covering_lower_schonheim(v, k));
        }
}

TEST_CASE("technical inequalities agree with exact rational evaluation")
{
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> top(3, 30);
    int ii_false = 0, iii_false = 0;
    for (int k = 0; k < 3000; ++k) {
        auto a = random_sorted(rng, 3, 10, 2, top(rng));
        if (a[0] < 3)
            continue;
        auto lib = techfact_holds(TargetVector(a));
        auto ref = oracle::techfact(a);
        REQUIRE(lib.i == ref.i);
        REQUIRE(lib.ii_inequality == ref.ii_left);
        REQUIRE(lib.ii_condition == ref.ii_right);
        REQUIRE(lib.iii_inequality == ref.iii_left);
        REQUIRE(lib.iii_condition == ref.iii_right);
        CHECK(ref.i);
        CHECK(ref.ii_left == ref.ii_right);
        CHECK(ref.iii_left == ref.iii_right);
        if (a[0] >= 4)
            CHECK(ref.iii_left);
        ii_false += ! ref.ii_right;
        iii_false += ! ref.iii_right;
    }
    // Both sides of each equivalence were seen false at least once.
    CHECK(ii_false > 0);
    CHECK(iii_false > 0);
}

TEST_CASE("bounds report")
{
    auto six = bounds_report(TargetVector::uniform(6, 10));
    CHECK(six.best_lower() == 16);
    CHECK(six.best_upper() == 21);

    auto five = bounds_report(tv({5, 5}));
    CHECK(five.best_lower() == 6);
    CHECK(five.best_upper() == 6);

    auto three = bounds_report(tv({3, 3, 3}));
    CHECK(three.best_lower() == 4);
    CHECK(three.best_upper() == 4);

    std::mt19937_64 rng(32);
    for (int k = 0; k < 500; ++k) {
        auto rep = bounds_report(TargetVector(random_sorted(rng, 2, 12, 2, 40)));
        if (auto up = rep.best_upper())
            CHECK(rep.best_lower() <= *up);
    }
}
