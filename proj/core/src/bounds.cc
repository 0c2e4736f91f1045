#include <pmramsey/bounds.hh>
#include <pmramsey/errors.hh>
#include <pmramsey/int_math.hh>

#include <algorithm>
#include <stdexcept>

using namespace pmramsey;

namespace
{
    void require_colours(const TargetVector &p, int at_least, const char *what)
    {
        if (p.r() < at_least)
            throw InvalidInput(std::string(what) + " needs at least " + std::to_string(at_least) + " colours");
    }

    auto sum_ceil_third(const TargetVector &p, int from) -> std::int64_t
    {
        std::int64_t s = 0;
        for (int i = from; i < p.r(); ++i)
            s += ceil_div(p[i], 3);
        return s;
    }

    auto standard_value(const TargetVector &p) -> std::int64_t
    {
        return p[0] - (p.r() - 1) + sum_ceil_third(p, 1);
    }

    // ceil(p_1/3 - r/3 + sum_i p_i/3), the third term of the 1-core bound
    auto core_third_term(const TargetVector &p) -> std::int64_t
    {
        return ceil_div(p[0] - p.r() + p.sum(), 3);
    }

    // sum_{i>=2} 3 (ceil(p_i/3) - p_i/3), an integer
    auto rounding_slack(const TargetVector &p) -> std::int64_t
    {
        std::int64_t s = 0;
        for (int i = 1; i < p.r(); ++i)
            s += 3 * ceil_div(p[i], 3) - p[i];
        return s;
    }
}

auto pmramsey::cockayne_lorimer(const TargetVector &p) -> std::int64_t
{
    require_colours(p, 2, "cockayne_lorimer");
    std::int64_t value = p[0] - (p.r() - 1);
    for (int i = 1; i < p.r(); ++i)
        value += ceil_div(p[i], 2);
    return value;
}

auto pmramsey::pm_standard_value(const TargetVector &p) -> StandardValue
{
    auto value = standard_value(p);
    if (p.r() <= 2)
        return {value, true};
    bool exact = p[0] >= 4 && p[0] >= 2 * p.r() - 3 - rounding_slack(p);
    return {value, exact};
}

auto pmramsey::pm_upper(const TargetVector &p) -> std::int64_t
{
    require_colours(p, 2, "pm_upper");
    std::int64_t numerator = 3 * p[0] - p.r();
    for (int i = 1; i < p.r(); ++i)
        numerator += p[i];
    return ceil_div(numerator, 3);
}

auto pmramsey::all3_formula(std::int64_t r) -> std::int64_t
{
    if (r < 0)
        throw InvalidInput("all3_formula needs r >= 0");
    auto root = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(8 * r + 1)));
    return (root + 1) / 2 + 1;
}

auto pmramsey::pm_all3(std::int64_t r) -> std::int64_t
{
    if (r < 2)
        throw InvalidInput("pm_all3 needs r >= 2");
    return all3_formula(r);
}

auto pmramsey::pm_lowers(const TargetVector &p) -> PmLowerBounds
{
    std::int64_t divisible = 0, lifted = 0;
    for (int v : p.values()) {
        divisible += (v % 3 == 0);
        lifted += ceil_div(v, 3) - 1;
    }
    return {standard_value(p), all3_formula(divisible) + lifted};
}

auto pmramsey::diagonal_guarantee(std::int64_t n, std::int64_t r) -> std::int64_t
{
    if (n < 1 || r < 2)
        throw InvalidInput("diagonal_guarantee needs n >= 1 and r >= 2");
    return 3 * (n / (r + 2));
}

auto pmramsey::core_upper_edgecount(const TargetVector &p) -> std::int64_t
{
    std::int64_t capacity = 0;
    for (int v : p.values())
        capacity += choose2(v - 1);
    std::int64_t n = 2;
    while (choose2(n) <= capacity)
        ++n;
    return n;
}

auto pmramsey::core_upper_degree(const TargetVector &p, std::int64_t scan_cap) -> std::optional<std::int64_t>
{
    require_colours(p, 2, "core_upper_degree");
    if (scan_cap <= 0)
        scan_cap = 4 * p.sum();
    std::int64_t slack = p.sum() - p.r();
    for (std::int64_t n = 2; n <= scan_cap; ++n)
        for (std::int64_t t = 1; t <= p.r() - 1; ++t)
            if (p[0] <= ceil_div(n + t - 1, t) && slack < (t + 1) * n)
                return n;
    return std::nullopt;
}

auto pmramsey::core_upper_main(const TargetVector &p) -> std::int64_t
{
    if (p.r() == 1)
        return p[0];
    if (p.r() == 2)
        return std::max(p[0], p[1]);
    return std::max({std::int64_t{p[0]}, ceil_div(p[0] + p[1] + p[2], 2) - 1, core_third_term(p)});
}

auto pmramsey::covering_lower_eh(std::int64_t v, std::int64_t k) -> std::int64_t
{
    if (k < 2 || v < k)
        throw InvalidInput("covering_lower_eh needs v >= k >= 2");
    return ceil_div(v * (v - 1), k * (k - 1));
}

auto pmramsey::covering_lower_schonheim(std::int64_t v, std::int64_t k) -> std::int64_t
{
    if (k < 3 || v < k)
        throw InvalidInput("covering_lower_schonheim needs v >= k >= 3");
    return ceil_div(v * ceil_div(v - 1, k - 1), k);
}

auto pmramsey::techfact_holds(const TargetVector &a) -> TechFact
{
    require_colours(a, 3, "techfact_holds");
    if (a[0] < 3)
        throw InvalidInput("techfact_holds needs a_1 >= 3");

    auto r = a.r();
    auto standard = standard_value(a);
    auto half_top3 = ceil_div(a[0] + a[1] + a[2], 2) - 1;
    std::int64_t tail = 0;
    for (int i = 3; i < r; ++i)
        tail += ceil_div(a[i], 3) - 1;

    TechFact f{};
    f.i = ceil_div(2 * a[0] - r + a.sum(), 3) >= half_top3;
    f.ii_inequality = standard >= core_third_term(a);
    f.ii_condition = a[0] >= 2 * r - 3 - rounding_slack(a);
    f.iii_inequality = standard >= half_top3 + tail;
    f.iii_condition = a[0] >= 2 + (a[1] - 2 * ceil_div(a[1], 3)) + (a[2] - 2 * ceil_div(a[2], 3));
    return f;
}

auto pmramsey::to_string(BoundKind kind) -> std::string
{
    switch (kind) {
    case BoundKind::lower: return "lower";
    case BoundKind::upper: return "upper";
    case BoundKind::exact_if_condition: return "exact-if";
    }
    return "?";
}

auto BoundsReport::best_lower() const -> std::int64_t
{
    std::int64_t best = 0;
    for (auto &e : entries)
        if (e.kind == BoundKind::lower || (e.kind == BoundKind::exact_if_condition && e.condition_holds.value_or(false)))
            best = std::max(best, e.value);
    return best;
}

auto BoundsReport::best_upper() const -> std::optional<std::int64_t>
{
    std::optional<std::int64_t> best;
    for (auto &e : entries)
        if (e.kind == BoundKind::upper || (e.kind == BoundKind::exact_if_condition && e.condition_holds.value_or(false)))
            best = best ? std::min(*best, e.value) : e.value;
    return best;
}

auto pmramsey::bounds_report(const TargetVector &p) -> BoundsReport
{
    BoundsReport report{p, {}};
    auto &e = report.entries;

    if (p.r() == 1) {
        e.push_back({"single colour", BoundKind::exact_if_condition, p[0], true});
    }
    else {
        auto lowers = pm_lowers(p);
        e.push_back({"standard lower", BoundKind::lower, lowers.standard, std::nullopt});
        e.push_back({"design lower", BoundKind::lower, lowers.design, std::nullopt});

        auto standard = pm_standard_value(p);
        e.push_back({"standard formula", BoundKind::exact_if_condition, standard.value, standard.exact});
        bool all_three = std::all_of(p.values().begin(), p.values().end(), [](int v) { return v == 3; });
        e.push_back({"all-3 formula", BoundKind::exact_if_condition, pm_all3(p.r()), all_three});

        e.push_back({"ceiling upper", BoundKind::upper, pm_upper(p), std::nullopt});
        e.push_back({"matching upper", BoundKind::upper, cockayne_lorimer(p) + p[0] % 2, std::nullopt});
    }

    auto lo = report.best_lower();
    auto hi = report.best_upper();
    if (hi && lo > *hi)
        throw std::logic_error("inconsistent bounds for (" + p.key() + "): lower " + std::to_string(lo)
            + " exceeds upper " + std::to_string(*hi));
    return report;
}
