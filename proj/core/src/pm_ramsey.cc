#include <pmramsey/bounds.hh>
#include <pmramsey/core_ramsey.hh>
#include <pmramsey/errors.hh>
#include <pmramsey/int_math.hh>
#include <pmramsey/parallel.hh>
#include <pmramsey/pm_ramsey.hh>
#include <pmramsey/search.hh>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <unordered_map>

using namespace pmramsey;

using std::optional;
using std::size_t;
using std::string;
using std::vector;

namespace
{
    constexpr std::uint64_t max_grid_points = 20'000'000;

    auto millis_since(std::chrono::steady_clock::time_point start) -> std::int64_t
    {
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    }

    auto big_entries(const vector<int> &raw) -> vector<int>
    {
        vector<int> out;
        for (int v : raw)
            if (v >= 3)
                out.push_back(v);
        std::stable_sort(out.begin(), out.end(), std::greater<>());
        return out;
    }

    auto colors_string(const EdgeColoring &c) -> string
    {
        string s = std::to_string(c.n()) + ":";
        for (auto x : c.colors())
            s += static_cast<char>('0' + x);
        return s;
    }

    // Memoized exact R^1C with node accounting.
    struct MemoOracle
    {
        CoreMemo &memo;
        CoverOptions cover;
        std::atomic<std::uint64_t> nodes{0};

        auto operator()(const TargetVector &q) -> int
        {
            auto key = q.key();
            if (auto hit = memo.find(key))
                return *hit;
            auto res = exact_core_ramsey(q, cover);
            nodes += res.stats.nodes;
            memo.store(key, res.value);
            return res.value;
        }
    };

    auto cover_options(const PmOptions &options) -> CoverOptions
    {
        CoverOptions c;
        c.budget = options.budget;
        return c;
    }

    auto bad_on(EdgeColoring c, int n, const TargetVector &p) -> optional<EdgeColoring>
    {
        if (c.n() < n)
            return std::nullopt;
        if (c.n() > n)
            c = c.restrict_to(VertexSet::range(n));
        if (! is_bad_pm_coloring(c, p.values()))
            return std::nullopt;
        return c;
    }

    auto lift_over(const TargetVector &p, const vector<int> &x, int n, const PmOptions &options)
        -> optional<EdgeColoring>
    {
        vector<int> q;
        int added = 0;
        for (int i = 0; i < p.r(); ++i) {
            q.push_back(p[i] - 3 * x[i]);
            added += x[i];
        }
        auto core = core_coloring_for(q, options);
        if (core.n() + added > max_vertices)
            return std::nullopt;
        return bad_on(core_lift_coloring(core, x), n, p);
    }

    auto search_route(const TargetVector &p, const PmOptions &options, RamseyResult &result) -> int
    {
        int upper = p.r() >= 2 ? static_cast<int>(pm_upper(p)) : p[0];
        optional<EdgeColoring> last;
        for (int n = std::max(1, p[0] - 1);; ++n) {
            if (n > upper)
                throw InconsistentRoutes("colouring search finds a bad colouring of K_" + std::to_string(n - 1)
                    + " for (" + p.key() + ") above the proven upper bound " + std::to_string(upper) + ": "
                    + colors_string(*last));
            SearchConfig config(n, p);
            config.budget = options.budget;
            config.workers = options.workers;
            config.progress = options.progress;
            auto outcome = enumerate_colorings(config);
            result.stats.nodes += outcome.nodes;
            if (outcome.verdict == SearchVerdict::budget_exhausted)
                throw BudgetExhausted("colouring search on K_" + std::to_string(n) + " exceeded its budget");
            if (outcome.verdict == SearchVerdict::all_succeed) {
                if (! last)
                    throw InconsistentRoutes("no bad colouring of K_" + std::to_string(n) + " for (" + p.key()
                        + ") although a monochromatic K_{p_1 - 1} is one");
                result.lower_witness = *last;
                return n;
            }
            last = outcome.counterexample;
        }
    }
}

auto CoreMemo::find(const string &key) const -> optional<int>
{
    std::lock_guard lock(_mutex);
    auto it = _values.find(key);
    if (it == _values.end())
        return std::nullopt;
    return it->second;
}

void CoreMemo::store(const string &key, int value)
{
    std::lock_guard lock(_mutex);
    _values.emplace(key, value);
}

auto CoreMemo::size() const -> size_t
{
    std::lock_guard lock(_mutex);
    return _values.size();
}

auto pmramsey::f_d(const TargetVector &p, int d, const CoreOracle &oracle, int workers) -> FdResult
{
    if (d < 1)
        throw InvalidInput("f_d needs d >= 1");
    int r = p.r();
    vector<int> extent(static_cast<size_t>(r));
    std::uint64_t points = 1;
    for (int i = 0; i < r; ++i) {
        extent[i] = (p[i] - 1) / d + 1;
        points *= static_cast<std::uint64_t>(extent[i]);
        if (points > max_grid_points)
            throw InvalidInput("f_d grid for (" + p.key() + ") is too large");
    }

    // Pass 1: distinct shifted vectors, in order of first appearance.
    vector<vector<int>> distinct;
    std::unordered_map<string, size_t> slot;
    vector<size_t> point_slot;
    vector<int> point_sum;
    point_slot.reserve(points);
    vector<int> x(static_cast<size_t>(r), 0);
    const size_t empty_slot = ~size_t{0};
    for (std::uint64_t k = 0; k < points; ++k) {
        vector<int> q;
        int sum = 0;
        for (int i = 0; i < r; ++i) {
            q.push_back(p[i] - d * x[i]);
            sum += x[i];
        }
        auto kept = big_entries(q);
        if (kept.empty())
            point_slot.push_back(empty_slot);
        else {
            string key;
            for (int v : kept)
                key += std::to_string(v) + ",";
            auto [it, fresh] = slot.emplace(key, distinct.size());
            if (fresh)
                distinct.push_back(kept);
            point_slot.push_back(it->second);
        }
        point_sum.push_back(sum);
        for (int i = r - 1; i >= 0; --i) {
            if (++x[i] < extent[i])
                break;
            x[i] = 0;
        }
    }

    vector<int> values(distinct.size(), 0);
    first_solution_index(distinct.size(), workers, [&](size_t i, const std::atomic<size_t> &) {
        values[i] = oracle(TargetVector(distinct[i]));
        return false;
    });

    // Pass 2: the first point (in odometer order) attaining the maximum.
    FdResult out;
    std::uint64_t best = 0;
    for (std::uint64_t k = 0; k < points; ++k) {
        int term = (point_slot[k] == empty_slot ? 2 : values[point_slot[k]]) + point_sum[k];
        if (term > out.value) {
            out.value = term;
            best = k;
        }
    }
    out.argmax.assign(static_cast<size_t>(r), 0);
    for (int i = r - 1; i >= 0; --i) {
        out.argmax[i] = static_cast<int>(best % static_cast<std::uint64_t>(extent[i]));
        best /= static_cast<std::uint64_t>(extent[i]);
    }
    return out;
}

auto pmramsey::to_string(PmStrategy s) -> string
{
    switch (s) {
    case PmStrategy::automatic: return "auto";
    case PmStrategy::search: return "search";
    case PmStrategy::reduction: return "reduction";
    case PmStrategy::formula: return "formula";
    }
    return "?";
}

auto pmramsey::parse_strategy(const string &s) -> optional<PmStrategy>
{
    for (auto v : {PmStrategy::automatic, PmStrategy::search, PmStrategy::reduction, PmStrategy::formula})
        if (to_string(v) == s)
            return v;
    return std::nullopt;
}

auto pmramsey::pm_closed_form(const TargetVector &p) -> optional<std::pair<int, Method>>
{
    auto big = big_entries(p.values());
    if (big.empty())
        return std::pair{2, Method::closed_form};
    TargetVector q(big);
    int r = q.r();
    if (r == 1)
        return std::pair{q[0], Method::closed_form};
    if (r == 2)
        return std::pair{q[0] + static_cast<int>(ceil_div(q[1], 3)) - 1, Method::closed_form};

    static const std::pair<const char *, int> table[] = {{"3,3,3", 4}, {"3,3,3,3", 4}, {"4,3,3,3", 5}};
    for (auto [key, value] : table)
        if (q.key() == key)
            return std::pair{value, Method::table};

    auto uniform = [&](int v) { return std::all_of(big.begin(), big.end(), [v](int x) { return x == v; }); };
    if (uniform(3))
        return std::pair{static_cast<int>(pm_all3(r)), Method::closed_form};
    if (uniform(4))
        return std::pair{r + 3, Method::closed_form};
    if (uniform(5))
        return std::pair{r + 4, Method::closed_form};

    auto standard = pm_standard_value(q);
    if (standard.exact)
        return std::pair{static_cast<int>(standard.value), Method::closed_form};
    return std::nullopt;
}

auto pmramsey::verify_upper(int n, const TargetVector &p, const PmOptions &options) -> optional<EdgeColoring>
{
    SearchConfig config(n, p);
    config.budget = options.budget;
    config.workers = options.workers;
    config.progress = options.progress;
    auto outcome = enumerate_colorings(config);
    if (outcome.verdict == SearchVerdict::budget_exhausted)
        throw BudgetExhausted("colouring search on K_" + std::to_string(n) + " exceeded its budget");
    return outcome.counterexample;
}

auto pmramsey::core_coloring_for(const vector<int> &q, const PmOptions &options) -> EdgeColoring
{
    if (q.empty())
        throw InvalidInput("core colouring needs at least one colour");
    vector<int> index;
    for (size_t i = 0; i < q.size(); ++i) {
        if (q[i] < 1)
            throw InvalidInput("shifted targets must be positive");
        if (q[i] >= 3)
            index.push_back(static_cast<int>(i));
    }
    std::stable_sort(index.begin(), index.end(), [&](int a, int b) { return q[a] > q[b]; });
    int r = static_cast<int>(q.size());
    if (index.empty())
        return EdgeColoring(1, r);

    vector<int> values;
    for (int i : index)
        values.push_back(q[i]);
    auto res = exact_core_ramsey(TargetVector(values), cover_options(options));
    auto sorted = coloring_from_cover(std::get<BlockCover>(res.lower_witness));

    EdgeColoring out(sorted.n(), r);
    for (int u = 0; u < sorted.n(); ++u)
        for (int v = u + 1; v < sorted.n(); ++v)
            out.set_color(u, v, index[sorted.color(u, v) - 1] + 1);
    return out;
}

auto pmramsey::find_lower_witness(int n, const TargetVector &p, const PmOptions &options) -> optional<EdgeColoring>
{
    if (n < 1 || n > max_vertices)
        return std::nullopt;

    if (auto c = bad_on(pm_extremal_coloring(p), n, p))
        return c;

    vector<int> x;
    for (int v : p.values())
        x.push_back(static_cast<int>(ceil_div(v, 3)) - 1);
    try {
        if (auto c = lift_over(p, x, n, options))
            return c;
    }
    catch (const BudgetExhausted &) {
    }

    try {
        CoreMemo local;
        MemoOracle oracle{options.memo ? *options.memo : local, cover_options(options)};
        auto f = f_d(p, 3, std::ref(oracle), options.workers);
        if (f.value - 1 >= n)
            if (auto c = lift_over(p, f.argmax, n, options))
                return c;
    }
    catch (const BudgetExhausted &) {
    }
    catch (const InvalidInput &) {
    }

    try {
        return verify_upper(n, p, options);
    }
    catch (const BudgetExhausted &) {
    }
    catch (const InvalidInput &) {
    }
    return std::nullopt;
}

auto pmramsey::exact_pm_ramsey(const TargetVector &p, PmStrategy strategy, const PmOptions &options) -> RamseyResult
{
    auto start = std::chrono::steady_clock::now();
    RamseyResult result;
    result.targets = p.values();

    if (strategy == PmStrategy::search) {
        result.method = Method::exhaustive_search;
        result.value = search_route(p, options, result);
        result.stats.millis = millis_since(start);
        return result;
    }

    CoreMemo local;
    PmOptions inner = options;
    if (! inner.memo)
        inner.memo = &local;

    // Targets equal to 2 never matter; they come last in sorted order, so the
    // witness only needs its colour count widened afterwards.
    auto big = big_entries(p.values());
    if (big.empty()) {
        result.value = 2;
        result.method = Method::closed_form;
        result.lower_witness = EdgeColoring(1, p.r());
        result.stats.millis = millis_since(start);
        return result;
    }
    TargetVector q(big);

    optional<std::pair<int, Method>> closed;
    if (strategy != PmStrategy::reduction)
        closed = pm_closed_form(q);
    if (strategy == PmStrategy::formula && ! closed)
        throw InvalidInput("no proven closed form for (" + q.key() + ")");

    if (closed) {
        result.value = closed->first;
        result.method = closed->second;
    }
    else {
        MemoOracle oracle{*inner.memo, cover_options(inner)};
        result.value = f_d(q, 3, std::ref(oracle), inner.workers).value;
        result.method = Method::f3_reduction;
        result.stats.nodes += oracle.nodes;
    }

    auto witness = find_lower_witness(result.value - 1, q, inner);

    if (strategy == PmStrategy::automatic && options.cross_check && result.value <= options.cross_check_max_n) {
        PmOptions check = inner;
        check.budget.nodes = options.cross_check_nodes;
        check.budget.time = options.cross_check_time;
        try {
            if (auto bad = verify_upper(result.value, q, check))
                throw InconsistentRoutes("(" + q.key() + "): " + to_string(result.method) + " gives "
                    + std::to_string(result.value) + " but search finds the bad colouring " + colors_string(*bad));
            if (! witness && result.value >= 2 && ! verify_upper(result.value - 1, q, check))
                throw InconsistentRoutes("(" + q.key() + "): " + to_string(result.method) + " gives "
                    + std::to_string(result.value) + " but no bad colouring of K_" + std::to_string(result.value - 1)
                    + " exists");
        }
        catch (const BudgetExhausted &) {
        }
    }

    if (witness)
        result.lower_witness = witness->with_colors(p.r());
    result.stats.millis = millis_since(start);
    return result;
}
