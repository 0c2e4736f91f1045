#include <pmramsey/errors.hh>
#include <pmramsey/parallel.hh>
#include <pmramsey/path_matching.hh>
#include <pmramsey/search.hh>

#include <algorithm>
#include <array>
#include <atomic>
#include <mutex>
#include <string>

using namespace pmramsey;

using std::size_t;
using std::uint64_t;
using std::uint8_t;
using std::vector;

namespace
{
    constexpr int max_search_vertices = 32;
    constexpr int parallel_split_depth = 8;

    auto colex_index(int a, int b) -> int
    {
        if (a > b)
            std::swap(a, b);
        return b * (b - 1) / 2 + a;
    }

    struct Layout
    {
        int n = 0;
        int r = 0;
        int edges = 0;
        vector<std::pair<int, int>> ends;
        vector<int> completes; // edge index -> m when it finishes K_m, else 0
        vector<int> thresholds; // by colour, 1-based
        vector<int> group;      // colour -> equal-threshold group
        vector<int> group_first;
        SymmetryLevel symmetry = SymmetryLevel::colors_and_vertices;
    };

    auto make_layout(const SearchConfig &config) -> Layout
    {
        if (config.n < 1 || config.n > max_search_vertices)
            throw InvalidInput("search needs 1 <= n <= " + std::to_string(max_search_vertices));
        if (config.r() > 64)
            throw InvalidInput("search supports at most 64 colours");
        Layout l;
        l.n = config.n;
        l.r = config.r();
        l.symmetry = config.symmetry;
        l.ends = search_edge_order(l.n);
        l.edges = static_cast<int>(l.ends.size());
        l.completes.assign(static_cast<size_t>(l.edges), 0);
        for (int e = 0; e < l.edges; ++e)
            if (l.ends[e].first == l.ends[e].second - 1)
                l.completes[e] = l.ends[e].second + 1;
        l.thresholds.assign(static_cast<size_t>(l.r) + 1, 0);
        l.group.assign(static_cast<size_t>(l.r) + 1, 0);
        for (int c = 1; c <= l.r; ++c) {
            l.thresholds[c] = config.thresholds[c - 1];
            if (c == 1 || l.thresholds[c] != l.thresholds[c - 1]) {
                l.group_first.push_back(c);
                l.group[c] = static_cast<int>(l.group_first.size()) - 1;
            }
            else
                l.group[c] = l.group[c - 1];
        }
        return l;
    }

    struct Shared
    {
        explicit Shared(const SearchConfig &config, const Layout &layout, const ColoringVisitor &visitor) :
            config(config),
            layout(layout),
            visitor(visitor),
            tracker(config.budget),
            histogram(static_cast<size_t>(layout.edges) + 1)
        {
        }

        const SearchConfig &config;
        const Layout &layout;
        const ColoringVisitor &visitor;
        BudgetTracker tracker;
        vector<std::atomic<uint64_t>> histogram;
        std::mutex visitor_mutex;
        std::atomic<uint64_t> counterexamples{0};
        std::atomic<int64_t> last_report{0};

        auto snapshot() -> SearchProgress
        {
            SearchProgress p;
            p.nodes = tracker.nodes();
            p.elapsed = tracker.elapsed();
            auto secs = static_cast<double>(p.elapsed.count()) / 1000.0;
            p.nodes_per_second = secs > 0 ? static_cast<double>(p.nodes) / secs : 0;
            for (auto &h : histogram)
                p.depth_histogram.push_back(h.load(std::memory_order_relaxed));
            return p;
        }

        void maybe_report()
        {
            if (! config.progress)
                return;
            auto now = tracker.elapsed().count();
            auto last = last_report.load();
            if (now - last < config.progress_interval.count())
                return;
            if (! last_report.compare_exchange_strong(last, now))
                return;
            std::lock_guard lock(visitor_mutex);
            config.progress(snapshot());
        }
    };

    // Incremental state of one depth-first walk over the edge sequence.
    class Walker
    {
    public:
        explicit Walker(const Layout &l) :
            _l(l),
            _colors(static_cast<size_t>(l.edges), 0),
            _covered(static_cast<size_t>(l.r) + 1, 0),
            _bound(static_cast<size_t>(l.r) + 1, 0),
            _top(l.group_first.size()),
            _undo(static_cast<size_t>(l.edges))
        {
            for (int c = 0; c <= l.r; ++c)
                _classes.emplace_back(l.n);
            for (size_t g = 0; g < _top.size(); ++g)
                _top[g] = l.group_first[g] - 1;
        }

        auto colors() const -> const vector<uint8_t> & { return _colors; }

        // Colour c may go next under the first-occurrence rule.
        auto admissible(int c) const -> bool
        {
            if (_l.symmetry == SymmetryLevel::none)
                return true;
            return c <= _top[_l.group[c]] + 1;
        }

        // Colours edge e with c; true when colour c now reaches its threshold.
        auto push(int e, int c) -> bool
        {
            auto [u, v] = _l.ends[e];
            auto &g = _classes[c];
            auto &undo = _undo[e];
            undo.bound = _bound[c];
            undo.raised_top = false;
            _colors[e] = static_cast<uint8_t>(c);
            auto gi = _l.group[c];
            if (c > _top[gi]) {
                _top[gi] = c;
                undo.raised_top = true;
            }
            _covered[c] += (g.degree(u) == 0) + (g.degree(v) == 0);
            g.add_edge(u, v);

            // One new edge lifts the best path-matching by at most two vertices.
            auto bound = std::min(_bound[c] + 2, _covered[c]);
            if (bound >= _l.thresholds[c])
                bound = max_pm_order(g);
            _bound[c] = bound;
            return bound >= _l.thresholds[c];
        }

        void pop(int e)
        {
            auto [u, v] = _l.ends[e];
            int c = _colors[e];
            auto &g = _classes[c];
            g.remove_edge(u, v);
            _covered[c] -= (g.degree(u) == 0) + (g.degree(v) == 0);
            _bound[c] = _undo[e].bound;
            if (_undo[e].raised_top)
                --_top[_l.group[c]];
            _colors[e] = 0;
        }

        // Is the colouring of K_m (the first m(m-1)/2 edges) lexicographically least
        // among its images under vertex and allowed colour permutations?
        auto canonical_block(int m) -> bool
        {
            if (m <= 2)
                return true;
            _m = m;
            _image.assign(static_cast<size_t>(m), -1);
            _map.assign(static_cast<size_t>(_l.r) + 1, 0);
            _next.assign(_l.group_first.begin(), _l.group_first.end());
            _used = 0;
            return ! smaller_image(0);
        }

        auto to_coloring() const -> EdgeColoring
        {
            EdgeColoring out(_l.n, _l.r);
            for (int e = 0; e < _l.edges; ++e)
                out.set_color(_l.ends[e].first, _l.ends[e].second, _colors[e]);
            return out;
        }

    private:
        // Position p of the image gets some unused vertex; the block of image edges
        // (0,p)..(p-1,p) is compared with the current colours as it is produced.
        auto smaller_image(int p) -> bool
        {
            if (p == _m)
                return false;
            for (int w = 0; w < _m; ++w) {
                if ((_used >> w) & 1U)
                    continue;
                _image[p] = w;
                int cmp = 0;
                int mapped[64];
                int mapped_count = 0;
                for (int q = 0; q < p && cmp == 0; ++q) {
                    int orig = _colors[colex_index(_image[q], w)];
                    if (_map[orig] == 0) {
                        auto gi = _l.group[orig];
                        _map[orig] = _next[gi]++;
                        mapped[mapped_count++] = orig;
                    }
                    int here = _colors[colex_index(q, p)];
                    cmp = (_map[orig] > here) - (_map[orig] < here);
                }
                if (cmp < 0)
                    return true;
                if (cmp == 0) {
                    _used |= uint64_t{1} << w;
                    bool found = smaller_image(p + 1);
                    _used &= ~(uint64_t{1} << w);
                    if (found)
                        return true;
                }
                for (int i = mapped_count - 1; i >= 0; --i) {
                    --_next[_l.group[mapped[i]]];
                    _map[mapped[i]] = 0;
                }
            }
            return false;
        }

        struct Undo
        {
            int bound = 0;
            bool raised_top = false;
        };

        const Layout &_l;
        vector<uint8_t> _colors;
        vector<SimpleGraph> _classes;
        vector<int> _covered;
        vector<int> _bound; // upper bound on each colour's max PM order, exact near the threshold
        vector<int> _top;   // largest colour used so far in each group
        vector<Undo> _undo;

        int _m = 0;
        vector<int> _image;
        vector<int> _map;
        vector<int> _next;
        uint64_t _used = 0;
    };

    class Task
    {
    public:
        Task(Shared &s, size_t index, const std::atomic<size_t> &cutoff) :
            _s(s),
            _l(s.layout),
            _walker(s.layout),
            _index(index),
            _cutoff(cutoff),
            _histogram(static_cast<size_t>(s.layout.edges) + 1, 0)
        {
        }

        ~Task() { flush(); }

        auto walker() -> Walker & { return _walker; }

        // Replays a prefix that already passed every test during the split.
        void replay(const vector<uint8_t> &prefix)
        {
            for (size_t e = 0; e < prefix.size(); ++e)
                _walker.push(static_cast<int>(e), prefix[e]);
        }

        // Returns true when the search should stop (visitor asked to, or cut off).
        auto run(int e, int stop_at, vector<vector<uint8_t>> *frontier) -> bool
        {
            if (frontier && e == stop_at) {
                frontier->emplace_back(_walker.colors().begin(), _walker.colors().begin() + e);
                return false;
            }
            if (e == _l.edges)
                return leaf();
            for (int c = 1; c <= _l.r; ++c) {
                if (! _walker.admissible(c))
                    continue;
                tick(e);
                bool success = _walker.push(e, c);
                bool descend = ! success;
                if (descend && _l.symmetry == SymmetryLevel::colors_and_vertices && _l.completes[e])
                    descend = _walker.canonical_block(_l.completes[e]);
                bool stop = descend && run(e + 1, stop_at, frontier);
                _walker.pop(e);
                if (stop)
                    return true;
            }
            return false;
        }

        auto first_counterexample() -> std::optional<EdgeColoring> & { return _first; }

    private:
        auto leaf() -> bool
        {
            auto coloring = _walker.to_coloring();
            if (! _first)
                _first = coloring;
            _s.counterexamples.fetch_add(1, std::memory_order_relaxed);
            if (! _s.visitor)
                return true;
            std::lock_guard lock(_s.visitor_mutex);
            return ! _s.visitor(coloring);
        }

        void tick(int depth)
        {
            ++_histogram[static_cast<size_t>(depth) + 1];
            if (++_pending < 4096)
                return;
            flush();
            if (_s.tracker.exhausted())
                throw BudgetExhausted("colouring search exceeded its budget");
            if (_cutoff.load(std::memory_order_relaxed) < _index)
                throw Cancelled{};
            _s.maybe_report();
        }

        void flush()
        {
            for (size_t d = 0; d < _histogram.size(); ++d)
                if (_histogram[d]) {
                    _s.histogram[d].fetch_add(_histogram[d], std::memory_order_relaxed);
                    _histogram[d] = 0;
                }
            _s.tracker.charge(_pending);
            _pending = 0;
        }

    public:
        struct Cancelled
        {
        };

    private:
        Shared &_s;
        const Layout &_l;
        Walker _walker;
        size_t _index;
        const std::atomic<size_t> &_cutoff;
        vector<uint64_t> _histogram;
        uint64_t _pending = 0;
        std::optional<EdgeColoring> _first;
    };
}

auto pmramsey::to_string(SearchVerdict v) -> const char *
{
    switch (v) {
        case SearchVerdict::all_succeed:
            return "all-succeed";
        case SearchVerdict::counterexample_found:
            return "counterexample";
        case SearchVerdict::budget_exhausted:
            return "budget-exhausted";
    }
    return "?";
}

auto pmramsey::search_edge_order(int n) -> vector<std::pair<int, int>>
{
    vector<std::pair<int, int>> out;
    for (int b = 1; b < n; ++b)
        for (int a = 0; a < b; ++a)
            out.emplace_back(a, b);
    return out;
}

auto pmramsey::canonical_extension_check(std::span<const uint8_t> prefix, const SearchConfig &config) -> bool
{
    auto l = make_layout(config);
    if (prefix.size() > static_cast<size_t>(l.edges))
        throw InvalidInput("prefix is longer than the edge list");
    Walker w(l);
    int complete = 0;
    for (size_t e = 0; e < prefix.size(); ++e) {
        int c = prefix[e];
        if (c < 1 || c > l.r)
            throw InvalidInput("prefix colour out of range");
        if (! w.admissible(c))
            return false;
        w.push(static_cast<int>(e), c);
        if (l.completes[e])
            complete = l.completes[e];
    }
    if (l.symmetry != SymmetryLevel::colors_and_vertices)
        return true;
    return w.canonical_block(complete);
}

auto pmramsey::enumerate_colorings(const SearchConfig &config, const ColoringVisitor &visitor) -> SearchOutcome
{
    auto layout = make_layout(config);
    Shared shared(config, layout, visitor);
    SearchOutcome outcome;

    int split = config.split_depth >= 0 ? config.split_depth : (config.workers > 1 ? parallel_split_depth : 0);
    split = std::min(split, layout.edges);

    vector<vector<uint8_t>> frontier;
    bool budget_hit = false;
    {
        std::atomic<size_t> no_cutoff{~size_t{0}};
        Task root(shared, 0, no_cutoff);
        try {
            root.run(0, split, &frontier);
        }
        catch (const BudgetExhausted &) {
            budget_hit = true;
        }
    }

    vector<std::optional<EdgeColoring>> firsts(frontier.size());
    std::optional<size_t> stopped;
    if (! budget_hit) {
        try {
            stopped = first_solution_index(frontier.size(), config.workers,
                [&](size_t i, const std::atomic<size_t> &cutoff) {
                    Task task(shared, i, cutoff);
                    task.replay(frontier[i]);
                    bool stop = false;
                    try {
                        stop = task.run(static_cast<int>(frontier[i].size()), -1, nullptr);
                    }
                    catch (const Task::Cancelled &) {
                    }
                    firsts[i] = std::move(task.first_counterexample());
                    return stop;
                });
        }
        catch (const BudgetExhausted &) {
            budget_hit = true;
        }
    }

    // Below a stopping task every task ran to completion, so the earliest
    // counterexample in search order is well defined.
    size_t limit = stopped ? *stopped + 1 : firsts.size();
    for (size_t i = 0; i < limit && ! budget_hit; ++i)
        if (firsts[i]) {
            outcome.counterexample = std::move(firsts[i]);
            break;
        }
    if (budget_hit)
        for (auto &f : firsts)
            if (f) {
                outcome.counterexample = std::move(f);
                break;
            }

    outcome.counterexamples = shared.counterexamples.load();
    outcome.nodes = shared.tracker.nodes();
    outcome.elapsed = shared.tracker.elapsed();
    if (outcome.counterexample)
        outcome.verdict = SearchVerdict::counterexample_found;
    else
        outcome.verdict = budget_hit ? SearchVerdict::budget_exhausted : SearchVerdict::all_succeed;
    if (config.progress) {
        std::lock_guard lock(shared.visitor_mutex);
        config.progress(shared.snapshot());
    }
    return outcome;
}
