#include "app/reproduce.hh"

#include <pmramsey/bounds.hh>
#include <pmramsey/coloring.hh>
#include <pmramsey/core_ramsey.hh>
#include <pmramsey/cover.hh>
#include <pmramsey/path_matching.hh>
#include <pmramsey/pm_ramsey.hh>
#include <pmramsey/search.hh>

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

using namespace pmramsey;
using namespace pmramsey::app;

namespace {

// Collects failures; only the first few make it into the detail line.
class Tally
{
public:
    void expect(bool ok, const std::string &what)
    {
        ++_checks;
        if (ok)
            return;
        if (_failures++ < 3)
            _first += (_first.empty() ? "" : "; ") + what;
    }

    auto passed() const -> bool { return _failures == 0; }
    auto checks() const -> int { return _checks; }

    auto detail(const std::string &summary) const -> std::string
    {
        if (passed())
            return summary;
        return summary + "; " + std::to_string(_failures) + " failed: " + _first;
    }

private:
    int _checks = 0;
    int _failures = 0;
    std::string _first;
};

auto key_of(const std::vector<int> &v) -> std::string
{
    return TargetVector(v).key();
}

auto random_vector(std::mt19937_64 &rng, int r_lo, int r_hi, int p_lo, int p_hi) -> std::vector<int>
{
    std::uniform_int_distribution<int> rd(r_lo, r_hi), pd(p_lo, p_hi);
    std::vector<int> v(static_cast<std::size_t>(rd(rng)));
    for (auto &x : v)
        x = pd(rng);
    std::sort(v.rbegin(), v.rend());
    return v;
}

// Nonincreasing vectors of length r with entries in [lo, hi].
void nonincreasing(int r, int lo, int hi, std::vector<int> &cur, std::vector<std::vector<int>> &out)
{
    if (static_cast<int>(cur.size()) == r) {
        out.push_back(cur);
        return;
    }
    int top = cur.empty() ? hi : cur.back();
    for (int v = top; v >= lo; --v) {
        cur.push_back(v);
        nonincreasing(r, lo, hi, cur, out);
        cur.pop_back();
    }
}

auto small_vectors() -> std::vector<std::vector<int>>
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    for (int r = 1; r <= 3; ++r)
        nonincreasing(r, 3, 5, cur, out);
    return out;
}

struct Expected
{
    std::vector<int> p;
    int value;
};

auto exact_pm_cases() -> std::vector<Expected>
{
    std::vector<Expected> out = {{{3, 3, 3}, 4}, {{3, 3, 3, 3}, 4}, {{4, 3, 3, 3}, 5}, {{4, 4, 4}, 6}, {{5, 5, 5}, 7}};
    for (int p1 = 2; p1 <= 6; ++p1)
        for (int p2 = 2; p2 <= p1; ++p2)
            out.push_back({{p1, p2}, p1 + (p2 + 2) / 3 - 1});
    return out;
}

auto pm_options(const ReproduceOptions &o) -> PmOptions
{
    PmOptions opt;
    opt.workers = o.workers;
    opt.cross_check = false;
    return opt;
}

auto criterion_1(const ReproduceOptions &) -> CriterionResult
{
    Tally t;
    int graphs = 0;
    for (std::uint32_t mask = 0; mask < (1U << 15); ++mask) {
        SimpleGraph g(6);
        int e = 0;
        for (int u = 0; u < 6; ++u)
            for (int v = u + 1; v < 6; ++v, ++e)
                if ((mask >> e) & 1U)
                    g.add_edge(u, v);
        ++graphs;
        t.expect(max_pm_order(g) == packing_oracle(g), "six-vertex graph mask " + std::to_string(mask));
    }
    std::mt19937_64 rng(0x70a7'0001);
    std::uniform_int_distribution<int> nd(8, 10);
    std::uniform_real_distribution<double> dens(0.05, 0.95), coin(0.0, 1.0);
    for (int k = 0; k < 1000; ++k) {
        int n = nd(rng);
        double q = dens(rng);
        SimpleGraph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng) < q)
                    g.add_edge(u, v);
        ++graphs;
        t.expect(max_pm_order(g) == packing_oracle(g), "random graph " + std::to_string(k));
    }
    return {1, "", t.passed(), t.detail(std::to_string(graphs) + " graphs compared with the packing oracle"), 0};
}

auto criterion_2(const ReproduceOptions &o) -> CriterionResult
{
    Tally t;
    auto opt = pm_options(o);
    int searched = 0;
    for (auto &[raw, v] : exact_pm_cases()) {
        TargetVector p(raw);
        auto name = "(" + p.key() + ")";
        auto low = verify_upper(v - 1, p, opt);
        t.expect(low && is_bad_pm_coloring(*low, p.values()), name + ": no bad colouring of K_" + std::to_string(v - 1));
        // Only the r >= 3 step at n = 7, i.e. (5,5,5), is left to the reduction by default.
        if (v <= 6 || p.r() <= 2 || o.include_slow) {
            ++searched;
            t.expect(! verify_upper(v, p, opt), name + ": bad colouring of K_" + std::to_string(v));
        }
        else {
            auto red = exact_pm_ramsey(p, PmStrategy::reduction, opt);
            t.expect(red.value == v, name + ": reduction gives " + std::to_string(red.value));
        }
    }
    auto cases = exact_pm_cases().size();
    std::string summary = std::to_string(cases) + " vectors; lower steps by search, " + std::to_string(searched)
        + " upper steps by search" + (searched < static_cast<int>(cases) ? ", (5,5,5) at n = 7 by reduction" : "");
    return {2, "", t.passed(), t.detail(summary), 0};
}

auto criterion_3(const ReproduceOptions &o) -> CriterionResult
{
    Tally t;
    CoverOptions copt;
    copt.workers = o.workers;

    for (auto &[raw, v] : std::vector<Expected>{{{4, 4, 4}, 5}, {{5, 5, 5}, 7}}) {
        auto res = exact_core_ramsey(TargetVector(raw), copt);
        auto cover = std::get_if<BlockCover>(&res.lower_witness);
        t.expect(res.value == v, "R1C(" + key_of(raw) + ") = " + std::to_string(res.value));
        t.expect(cover && cover->valid() && cover->n == v - 1, "R1C(" + key_of(raw) + ") witness");
    }
    for (int p1 = 2; p1 <= 8; ++p1)
        for (int p2 = 2; p2 <= p1; ++p2) {
            std::vector<int> raw{p1, p2};
            t.expect(core_ramsey_value(raw, copt) == p1, "R1C(" + key_of(raw) + ")");
        }
    for (int r = 2; r <= 12; ++r) {
        auto res = exact_core_ramsey(TargetVector::uniform(3, r), copt);
        t.expect(res.value == pm_all3(r), "R1C(3*" + std::to_string(r) + ") = " + std::to_string(res.value));
    }
    t.expect(covering_number(9, 5, 20, copt) == 5, "C(9,5)");
    if (o.include_slow)
        t.expect(covering_number(13, 5, 20, copt) == 10, "C(13,5)");
    return {3, "", t.passed(),
        t.detail(std::to_string(t.checks()) + " checks" + (o.include_slow ? " including C(13,5)" : "")), 0};
}

auto criterion_4(const ReproduceOptions &o) -> CriterionResult
{
    Tally t;
    auto opt = pm_options(o);
    CoreMemo memo;
    opt.memo = &memo;
    int count = 0;
    for (auto &raw : small_vectors()) {
        TargetVector p(raw);
        auto by_search = exact_pm_ramsey(p, PmStrategy::search, opt);
        auto by_reduction = exact_pm_ramsey(p, PmStrategy::reduction, opt);
        ++count;
        t.expect(by_search.value == by_reduction.value, "(" + p.key() + "): search " + std::to_string(by_search.value)
            + ", reduction " + std::to_string(by_reduction.value));
        auto w = std::get_if<EdgeColoring>(&by_search.lower_witness);
        t.expect(w && is_bad_pm_coloring(*w, p.values()), "(" + p.key() + "): search witness");
    }
    return {4, "", t.passed(), t.detail(std::to_string(count) + " vectors, search equals reduction"), 0};
}

auto criterion_5(const ReproduceOptions &o) -> CriterionResult
{
    Tally t;
    auto opt = pm_options(o);
    CoreMemo memo;
    opt.memo = &memo;
    for (int r = 2; r <= 5; ++r)
        for (int p : {4, 5}) {
            auto res = exact_pm_ramsey(TargetVector::uniform(p, r), PmStrategy::reduction, opt);
            t.expect(res.value == r + p - 1,
                "R^PM(" + std::to_string(p) + "*" + std::to_string(r) + ") = " + std::to_string(res.value));
        }
    CoverOptions copt;
    copt.workers = o.workers;
    for (int r = 2; r <= 6; ++r)
        for (int p : {4, 5, 6}) {
            int v = exact_core_ramsey(TargetVector::uniform(p, r), copt).value;
            t.expect(v <= r + p - 1, "R1C(" + std::to_string(p) + "*" + std::to_string(r) + ") = " + std::to_string(v));
        }
    return {5, "", t.passed(), t.detail("8 uniform PM values and 15 uniform 1-core bounds"), 0};
}

auto criterion_6(const ReproduceOptions &o) -> CriterionResult
{
    Tally t;
    auto opt = pm_options(o);
    CoreMemo memo;
    opt.memo = &memo;
    std::mt19937_64 rng(0x70a7'0006);
    int exact_cases = 0;
    for (int k = 0; k < 200; ++k) {
        TargetVector p(random_vector(rng, 2, 6, 2, 9));
        auto name = "(" + p.key() + ")";
        int v = exact_pm_ramsey(p, PmStrategy::reduction, opt).value;
        auto low = pm_lowers(p);
        t.expect(low.standard <= v, name + ": standard lower above " + std::to_string(v));
        t.expect(low.design <= v, name + ": design lower above " + std::to_string(v));
        t.expect(v <= pm_upper(p), name + ": " + std::to_string(v) + " above upper bound");
        if (auto s = pm_standard_value(p); s.exact) {
            ++exact_cases;
            t.expect(s.value == v, name + ": standard value " + std::to_string(s.value) + " but " + std::to_string(v));
        }
    }
    return {6, "", t.passed(),
        t.detail("200 vectors, " + std::to_string(exact_cases) + " with a proven standard value, "
            + std::to_string(memo.size()) + " distinct 1-core values"),
        0};
}

auto six_vertex_core_coloring() -> EdgeColoring
{
    // A_i = {2i, 2i+1}; colour i on edges inside A_i and between A_i and A_{i+1}.
    EdgeColoring c(6, 3);
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v) {
            int a = u / 2, b = v / 2;
            int col = a == b || b == (a + 1) % 3 ? a : b;
            c.set_color(u, v, col + 1);
        }
    return c;
}

auto criterion_7(const ReproduceOptions &o) -> CriterionResult
{
    Tally t;
    std::vector<std::vector<int>> all;
    std::vector<int> cur;
    for (int r = 1; r <= 5; ++r)
        nonincreasing(r, 2, 9, cur, all);
    int extremal = 0;
    for (auto &raw : all) {
        TargetVector p(raw);
        if (pm_standard_value(p).value < 3)
            continue; // fewer than two vertices
        ++extremal;
        auto c = pm_extremal_coloring(p);
        t.expect(is_bad_pm_coloring(c, p.values()), "extremal (" + p.key() + ")");
        t.expect(c.n() == pm_standard_value(p).value - 1, "extremal (" + p.key() + ") order");
    }

    auto opt = pm_options(o);
    auto six10 = TargetVector::uniform(6, 10);
    auto w = find_lower_witness(15, six10, opt);
    t.expect(w && w->n() == 15 && is_bad_pm_coloring(*w, six10.values()), "K_15 witness for 6*10");

    TargetVector five3({5, 5, 5});
    std::vector<int> parts{4, 1, 1};
    t.expect(is_bad_pm_coloring(layered_coloring(parts), five3.values()), "[4,1,1] for (5,5,5)");
    t.expect(is_bad_core_coloring(six_vertex_core_coloring(), five3.values()), "A_i colouring for (5,5,5)");
    BlockCover cover;
    cover.n = 6;
    cover.capacities = {4, 4, 4};
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3;
        cover.blocks.push_back(VertexSet::of({2 * i, 2 * i + 1, 2 * j, 2 * j + 1}));
    }
    t.expect(cover.valid(), "A_i cover for (5,5,5)");

    std::vector<int> t4333{4, 3, 3, 3};
    EdgeColoring pm(4, 4), core(4, 4);
    pm.set_color(0, 1, 2);
    pm.set_color(0, 2, 3);
    pm.set_color(1, 2, 4);
    for (int v = 0; v < 3; ++v)
        core.set_color(v, 3, v + 2);
    t.expect(is_bad_pm_coloring(pm, t4333), "triangle 2,3,4 for PM (4,3,3,3)");
    t.expect(is_bad_core_coloring(core, t4333), "triangle 1 for 1-core (4,3,3,3)");

    CoverOptions copt;
    copt.workers = o.workers;
    for (auto &[raw, v] : std::vector<Expected>{{{5, 5, 5}, 7}, {{4, 3, 3, 3}, 5}}) {
        auto res = exact_core_ramsey(TargetVector(raw), copt);
        auto b = std::get_if<BlockCover>(&res.lower_witness);
        t.expect(res.value == v && b && b->valid() && b->n == v - 1, "computed 1-core witness (" + key_of(raw) + ")");
        if (b)
            t.expect(is_bad_core_coloring(coloring_from_cover(*b), raw), "cover colouring (" + key_of(raw) + ")");
    }
    return {7, "", t.passed(),
        t.detail(std::to_string(extremal) + " extremal colourings and " + std::to_string(t.checks() - 2 * extremal)
            + " named witnesses"),
        0};
}

auto criterion_8(const ReproduceOptions &o) -> CriterionResult
{
    Tally t;
    auto opt = pm_options(o);
    int cases = 0;
    for (int r = 2; r <= 4; ++r)
        for (int n = r + 2; n <= 8; n += r + 2) {
            ++cases;
            int m = n / (r + 2);
            int p = 3 * m;
            auto tag = "r=" + std::to_string(r) + " n=" + std::to_string(n);
            auto res = exact_pm_ramsey(TargetVector::uniform(p, r), PmStrategy::reduction, opt);
            t.expect(res.value <= n, tag + ": R^PM = " + std::to_string(res.value));
            std::vector<int> parts(static_cast<std::size_t>(r), m);
            parts[0] = p;
            auto c = layered_coloring(parts);
            auto prof = mono_pm_profile(c);
            t.expect(c.n() == n && *std::max_element(prof.begin(), prof.end()) == p, tag + ": layered profile");
            t.expect(diagonal_guarantee(n, r) == p, tag + ": guarantee");
            t.expect(is_bad_pm_coloring(c, TargetVector::uniform(p + 1, r).values()), tag + ": tightness");
        }
    return {8, "", t.passed(), t.detail(std::to_string(cases) + " (r, n) pairs"), 0};
}

auto criterion_9(const ReproduceOptions &) -> CriterionResult
{
    Tally t;
    std::mt19937_64 rng(0x70a7'0009);
    int ii_true = 0, ii_false = 0, iii_true = 0, iii_false = 0;
    std::uniform_int_distribution<int> top(3, 20);
    for (int k = 0; k < 500; ++k) {
        // A per-vector ceiling makes small entries common, where the conditions fail.
        TargetVector a(random_vector(rng, 3, 8, 3, top(rng)));
        auto f = techfact_holds(a);
        auto name = "(" + a.key() + ")";
        t.expect(f.i, name + ": (i)");
        t.expect(f.ii(), name + ": (ii)");
        t.expect(f.iii(), name + ": (iii)");
        if (a.front() >= 4)
            t.expect(f.iii_condition, name + ": (iii) condition with a_1 >= 4");
        (f.ii_condition ? ii_true : ii_false)++;
        (f.iii_condition ? iii_true : iii_false)++;
    }
    std::ostringstream s;
    s << "500 vectors; (ii) condition true/false " << ii_true << "/" << ii_false << ", (iii) " << iii_true << "/"
      << iii_false;
    return {9, "", t.passed(), t.detail(s.str()), 0};
}

auto criterion_10(const ReproduceOptions &o) -> CriterionResult
{
    Tally t;
    const int worker_counts[] = {1, 4, 8};

    std::vector<std::pair<int, std::vector<int>>> searches;
    for (auto &raw : small_vectors()) {
        int v = exact_pm_ramsey(TargetVector(raw), PmStrategy::reduction, pm_options(o)).value;
        searches.push_back({v - 1, raw});
        searches.push_back({v, raw});
    }
    for (auto &[raw, v] : exact_pm_cases())
        for (int n : {v - 1, v})
            if (n >= 2 && (n <= 6 || raw.size() <= 2 || o.include_slow))
                searches.push_back({n, raw});
    for (auto &[n, raw] : searches) {
        std::optional<SearchOutcome> first;
        for (int w : worker_counts) {
            SearchConfig config(n, TargetVector(raw));
            config.workers = w;
            auto out = enumerate_colorings(config);
            auto tag = "search n=" + std::to_string(n) + " (" + key_of(raw) + ") workers=" + std::to_string(w);
            t.expect(out.verdict != SearchVerdict::budget_exhausted, tag + ": budget");
            if (! first)
                first = out;
            else
                t.expect(out.verdict == first->verdict && out.counterexample == first->counterexample, tag);
        }
    }

    std::vector<std::vector<int>> cover_vectors = {{4, 4, 4}, {5, 5, 5}, {4, 3, 3, 3}};
    for (int p1 = 3; p1 <= 8; ++p1)
        for (int p2 = 3; p2 <= p1; ++p2)
            cover_vectors.push_back({p1, p2});
    for (int r = 2; r <= 12; ++r)
        cover_vectors.push_back(std::vector<int>(static_cast<std::size_t>(r), 3));
    for (int r = 2; r <= 6; ++r)
        for (int p : {4, 5, 6})
            cover_vectors.push_back(std::vector<int>(static_cast<std::size_t>(r), p));
    int covers = 0;
    for (auto &raw : cover_vectors) {
        int v = exact_core_ramsey(TargetVector(raw)).value;
        std::vector<int> caps;
        for (int p : raw)
            caps.push_back(p - 1);
        for (int n : {v - 1, v})
            for (bool local : {true, false}) {
                ++covers;
                std::optional<bool> first;
                for (int w : worker_counts) {
                    CoverOptions copt;
                    copt.workers = w;
                    copt.local_search = local;
                    bool feasible = cover_feasible(n, caps, copt).has_value();
                    t.expect(feasible == (n < v), "cover n=" + std::to_string(n) + " (" + key_of(raw) + ")");
                    if (! first)
                        first = feasible;
                    t.expect(feasible == *first, "cover n=" + std::to_string(n) + " (" + key_of(raw)
                        + ") workers=" + std::to_string(w));
                }
            }
    }
    return {10, "", t.passed(),
        t.detail(std::to_string(searches.size()) + " searches and " + std::to_string(covers)
            + " cover instances at 1, 4 and 8 workers"),
        0};
}

} // namespace

auto pmramsey::app::criterion_title(int id) -> std::string
{
    switch (id) {
    case 1: return "deficiency matches the packing oracle";
    case 2: return "exact path-matching Ramsey values";
    case 3: return "exact 1-core Ramsey values and covering numbers";
    case 4: return "search route equals the reduction";
    case 5: return "uniform targets 4, 5 and 6";
    case 6: return "bounds sandwich the reduction value";
    case 7: return "lower-bound witnesses";
    case 8: return "diagonal case";
    case 9: return "technical inequalities";
    case 10: return "determinism across worker counts";
    default: return "unknown";
    }
}

auto pmramsey::app::run_criterion(int id, const ReproduceOptions &options) -> CriterionResult
{
    using Fn = CriterionResult (*)(const ReproduceOptions &);
    static constexpr Fn table[] = {criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
        criterion_7, criterion_8, criterion_9, criterion_10};

    auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    if (id < 1 || id > criterion_count) {
        r.detail = "no such criterion";
    }
    else {
        try {
            r = table[id - 1](options);
        }
        catch (const std::exception &e) {
            r.passed = false;
            r.detail = std::string("error: ") + e.what();
        }
    }
    r.id = id;
    r.title = criterion_title(id);
    r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return r;
}

auto pmramsey::app::reproduce(const ReproduceOptions &options) -> std::vector<CriterionResult>
{
    std::vector<CriterionResult> out;
    for (int id = 1; id <= criterion_count; ++id) {
        if (! options.only.empty() && std::find(options.only.begin(), options.only.end(), id) == options.only.end())
            continue;
        out.push_back(run_criterion(id, options));
        if (options.on_result)
            options.on_result(out.back());
    }
    return out;
}

auto pmramsey::app::format_line(const CriterionResult &r) -> std::string
{
    std::ostringstream s;
    s << (r.passed ? "PASS" : "FAIL") << "  " << (r.id < 10 ? " " : "") << r.id << "  " << r.title << ": " << r.detail
      << " (" << r.millis << " ms)";
    return s.str();
}

auto pmramsey::app::to_json(const std::vector<CriterionResult> &results) -> nlohmann::json
{
    auto rows = nlohmann::json::array();
    bool all = true;
    for (auto &r : results) {
        all = all && r.passed;
        rows.push_back(
            {{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}, {"millis", r.millis}});
    }
    return {{"passed", all}, {"criteria", std::move(rows)}};
}
