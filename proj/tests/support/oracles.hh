// Brute-force reference implementations for the tests. Nothing here calls the
// library's algorithms; only plain integers and bitmasks.
#ifndef PMRAMSEY_TESTS_ORACLES_HH
#define PMRAMSEY_TESTS_ORACLES_HH

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

// Edges of K_n, row-major: (0,1), (0,2), ..., (1,2), ...
inline auto edges_of(int n) -> std::vector<std::pair<int, int>>
{
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            out.emplace_back(u, v);
    return out;
}

// Most vertices spanned by an edge subset of `mask` that has max degree `max_deg`
// and no cycle. max_deg 2 gives linear forests, max_deg 1 matchings.
inline auto best_forest(int n, std::uint32_t mask, int max_deg) -> int
{
    auto edges = edges_of(n);
    int best = 0;
    for (std::uint32_t sub = mask;; sub = (sub - 1) & mask) {
        std::vector<int> deg(static_cast<std::size_t>(n), 0), parent(static_cast<std::size_t>(n));
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x)
                x = parent[x] = parent[parent[x]];
            return x;
        };
        bool ok = true;
        for (std::size_t e = 0; ok && e < edges.size(); ++e) {
            if (! ((sub >> e) & 1U))
                continue;
            auto [u, v] = edges[e];
            int a = find(u), b = find(v);
            ok = a != b && ++deg[u] <= max_deg && ++deg[v] <= max_deg;
            parent[a] = b;
        }
        if (ok)
            best = std::max(best, static_cast<int>(std::count_if(deg.begin(), deg.end(), [](int d) { return d > 0; })));
        if (sub == 0)
            break;
    }
    return best;
}

// Table over every edge mask of K_n (n <= 5).
inline auto forest_table(int n, int max_deg) -> std::vector<int>
{
    std::vector<int> t(std::size_t{1} << edges_of(n).size());
    for (std::uint32_t m = 0; m < t.size(); ++m)
        t[m] = best_forest(n, m, max_deg);
    return t;
}

inline auto touched(int n, std::uint32_t mask) -> int
{
    auto edges = edges_of(n);
    std::uint32_t vs = 0;
    for (std::size_t e = 0; e < edges.size(); ++e)
        if ((mask >> e) & 1U)
            vs |= (1U << edges[e].first) | (1U << edges[e].second);
    return std::popcount(vs);
}

enum class Measure
{
    path_matching,
    matching,
    one_core,
};

// Is there an r-colouring of K_n with colour i below targets[i] under `measure`?
inline auto bad_coloring_exists(int n, const std::vector<int> &targets, Measure measure) -> bool
{
    int m = static_cast<int>(edges_of(n).size());
    int r = static_cast<int>(targets.size());
    std::vector<int> table;
    if (measure == Measure::path_matching)
        table = forest_table(n, 2);
    else if (measure == Measure::matching)
        table = forest_table(n, 1);
    std::vector<int> digit(static_cast<std::size_t>(m), 0);
    while (true) {
        std::vector<std::uint32_t> cls(static_cast<std::size_t>(r), 0);
        for (int e = 0; e < m; ++e)
            cls[digit[e]] |= 1U << e;
        bool bad = true;
        for (int c = 0; bad && c < r; ++c) {
            int v = measure == Measure::one_core ? touched(n, cls[c]) : table[cls[c]];
            bad = v < targets[c];
        }
        if (bad)
            return true;
        int e = 0;
        while (e < m && ++digit[e] == r)
            digit[e++] = 0;
        if (e == m)
            return false;
    }
}

// Least n <= n_max with no bad colouring, if any.
inline auto ramsey(const std::vector<int> &targets, Measure measure, int n_max = 5) -> std::optional<int>
{
    for (int n = 2; n <= n_max; ++n)
        if (! bad_coloring_exists(n, targets, measure))
            return n;
    return std::nullopt;
}

// Can r cliques with the given sizes cover every pair of K_n?
inline auto cover_exists(int n, const std::vector<int> &caps) -> bool
{
    int m = static_cast<int>(edges_of(n).size());
    std::uint32_t full = m == 32 ? ~0U : (1U << m) - 1;
    auto edges = edges_of(n);
    auto pairs_of = [&](std::uint32_t vs) {
        std::uint32_t out = 0;
        for (int e = 0; e < m; ++e)
            if (((vs >> edges[e].first) & 1U) && ((vs >> edges[e].second) & 1U))
                out |= 1U << e;
        return out;
    };
    std::vector<std::vector<std::uint32_t>> options;
    for (int cap : caps) {
        int size = std::min(cap, n);
        std::vector<std::uint32_t> opts;
        for (std::uint32_t vs = 0; vs < (1U << n); ++vs)
            if (std::popcount(vs) == size)
                opts.push_back(pairs_of(vs));
        options.push_back(opts);
    }
    std::vector<std::uint32_t> reach{0};
    for (auto &opts : options) {
        std::set<std::uint32_t> next;
        for (auto have : reach)
            for (auto o : opts)
                next.insert(have | o);
        reach.assign(next.begin(), next.end());
    }
    return std::find(reach.begin(), reach.end(), full) != reach.end();
}

// C(v, k) for small v.
inline auto covering_number(int v, int k) -> int
{
    for (int b = 1;; ++b)
        if (cover_exists(v, std::vector<int>(static_cast<std::size_t>(b), k)))
            return b;
}

// Orbits of r-colourings of K_n under vertex permutations, and under colour
// permutations too when `swap_colors` is set.
inline auto coloring_classes(int n, int r, bool swap_colors) -> std::size_t
{
    auto edges = edges_of(n);
    int m = static_cast<int>(edges.size());
    std::vector<std::vector<int>> index(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int e = 0; e < m; ++e)
        index[edges[e].first][edges[e].second] = index[edges[e].second][edges[e].first] = e;

    std::vector<std::vector<int>> vperms, cperms;
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do
        vperms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::vector<int> c(static_cast<std::size_t>(r));
    std::iota(c.begin(), c.end(), 0);
    do
        cperms.push_back(c);
    while (swap_colors && std::next_permutation(c.begin(), c.end()));

    std::set<std::vector<int>> seen;
    std::vector<int> col(static_cast<std::size_t>(m), 0);
    while (true) {
        std::vector<int> best;
        for (auto &vp : vperms)
            for (auto &cp : cperms) {
                std::vector<int> img(static_cast<std::size_t>(m));
                for (int e = 0; e < m; ++e)
                    img[index[vp[edges[e].first]][vp[edges[e].second]]] = cp[col[e]];
                if (best.empty() || img < best)
                    best = img;
            }
        seen.insert(best);
        int e = 0;
        while (e < m && ++col[e] == r)
            col[e++] = 0;
        if (e == m)
            break;
    }
    return seen.size();
}

// Exact rationals for the technical inequalities.
struct Q
{
    long long num, den; // den > 0

    friend auto operator+(Q a, Q b) -> Q { return {a.num * b.den + b.num * a.den, a.den * b.den}; }
    friend auto operator-(Q a, Q b) -> Q { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
};

inline auto ceil_q(Q q) -> long long
{
    long long f = q.num / q.den;
    if (q.num % q.den != 0 && q.num > 0)
        ++f;
    return f;
}

inline auto ceil_int(long long a, long long b) -> long long
{
    return ceil_q({a, b});
}

struct TechFact
{
    bool i, ii_left, ii_right, iii_left, iii_right;
};

// a sorted nonincreasing, r >= 3.
inline auto techfact(const std::vector<int> &a) -> TechFact
{
    long long r = static_cast<long long>(a.size());
    Q sum_third{0, 1};
    for (int x : a)
        sum_third = sum_third + Q{x, 3};
    long long standard = a[0] - (r - 1);
    for (std::size_t i = 1; i < a.size(); ++i)
        standard += ceil_int(a[i], 3);
    long long half3 = ceil_int(a[0] + a[1] + a[2], 2) - 1;

    TechFact t{};
    t.i = ceil_q(Q{2 * a[0], 3} - Q{r, 3} + sum_third) >= half3;
    t.ii_left = standard >= ceil_q(Q{a[0], 3} - Q{r, 3} + sum_third);
    Q slack{0, 1};
    for (std::size_t i = 1; i < a.size(); ++i)
        slack = slack + Q{3 * ceil_int(a[i], 3), 1} - Q{a[i], 1};
    t.ii_right = (Q{a[0], 1} - Q{2 * r - 3, 1} + slack).num >= 0;
    long long tail = 0;
    for (std::size_t i = 3; i < a.size(); ++i)
        tail += ceil_int(a[i], 3) - 1;
    t.iii_left = standard >= half3 + tail;
    t.iii_right = a[0] >= 2 + (a[1] - 2 * ceil_int(a[1], 3)) + (a[2] - 2 * ceil_int(a[2], 3));
    return t;
}

} // namespace oracle

#endif
