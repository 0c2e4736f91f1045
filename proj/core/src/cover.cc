#include <pmramsey/cover.hh>
#include <pmramsey/errors.hh>
#include <pmramsey/int_math.hh>
#include <pmramsey/parallel.hh>

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <random>
#include <string>

using namespace pmramsey;

using std::array;
using std::atomic;
using std::optional;
using std::size_t;
using std::uint16_t;
using std::uint64_t;
using std::vector;

auto BlockCover::valid() const -> bool
{
    if (capacities.size() != blocks.size() || n < 0 || n > max_vertices)
        return false;
    array<uint64_t, max_vertices> covered{};
    for (size_t i = 0; i < blocks.size(); ++i) {
        auto b = blocks[i] & VertexSet::range(n);
        if (b != blocks[i] || b.size() > std::max(capacities[i], 0))
            return false;
        for (int v : b.members())
            covered[v] |= b.bits();
    }
    for (int v = 0; v < n; ++v)
        if ((covered[v] | (uint64_t{1} << v)) != VertexSet::range(n).bits())
            return false;
    return true;
}

auto BlockCover::truncated(int m) const -> BlockCover
{
    BlockCover out{m, capacities, {}};
    for (auto b : blocks)
        out.blocks.push_back(b & VertexSet::range(m));
    return out;
}

namespace
{
    constexpr int default_split_depth = 4;

    struct Problem
    {
        int n;
        vector<int> caps;     // useful blocks only, clamped to n
        vector<int> original; // useful block index -> caller's block index
    };

    [[noreturn]] void out_of_budget(const char *engine)
    {
        throw BudgetExhausted(std::string("cover search (") + engine + ") exceeded its budget");
    }

    // Two counting arguments: the blocks hold enough pairs, and every vertex can
    // sit in enough of the largest blocks to meet its n - 1 neighbours.
    auto counting_refutes(const Problem &p) -> bool
    {
        std::int64_t pairs = 0, slots = 0;
        for (int c : p.caps) {
            pairs += choose2(c);
            slots += c;
        }
        if (pairs < choose2(p.n))
            return true;
        auto caps = p.caps;
        std::sort(caps.begin(), caps.end(), std::greater<>());
        int reach = 0, need = 0;
        for (int c : caps) {
            if (reach >= p.n - 1)
                break;
            reach += c - 1;
            ++need;
        }
        return reach < p.n - 1 || slots < std::int64_t{p.n} * need;
    }

    // ---------------------------------------------------------------- pair branching

    struct PairState
    {
        array<uint64_t, max_vertices> uncovered{}; // bit v of row u: {u,v} not yet inside a block
        array<uint64_t, max_vertices> blocks{};
        array<int, max_vertices> sizes{};
        int remaining = 0;
    };

    class PairSearch
    {
    public:
        PairSearch(const Problem &p) :
            _p(p),
            _r(static_cast<int>(p.caps.size()))
        {
        }

        auto root() const -> PairState
        {
            PairState s;
            for (int u = 0; u < _p.n; ++u)
                s.uncovered[u] = VertexSet::range(_p.n).bits() & ~(uint64_t{1} << u);
            s.remaining = static_cast<int>(choose2(_p.n));
            return s;
        }

        // Expands the tree breadth-first in DFS order down to depth, keeping live nodes.
        void split(const PairState &s, int depth, vector<PairState> &frontier) const
        {
            if (s.remaining == 0 || depth == 0) {
                frontier.push_back(s);
                return;
            }
            if (! bounds_ok(s))
                return;
            int u, v;
            array<int, max_vertices> admitting;
            int count = choose(s, u, v, admitting);
            for (int i = 0; i < count; ++i)
                split(place(s, admitting[i], u, v), depth - 1, frontier);
        }

        auto dfs(const PairState &s, NodeMeter &meter, size_t task, const atomic<size_t> &cutoff,
            PairState &solution) const -> bool
        {
            if (! meter.tick())
                out_of_budget("pair branching");
            if (cutoff.load(std::memory_order_relaxed) < task)
                return false;
            if (s.remaining == 0) {
                solution = s;
                return true;
            }
            if (! bounds_ok(s))
                return false;
            int u, v;
            array<int, max_vertices> admitting;
            int count = choose(s, u, v, admitting);
            for (int i = 0; i < count; ++i)
                if (dfs(place(s, admitting[i], u, v), meter, task, cutoff, solution))
                    return true;
            return false;
        }

    private:
        // Pair-count and per-vertex capacity arguments.
        auto bounds_ok(const PairState &s) const -> bool
        {
            int64_t pair_room = 0, free_slots = 0;
            for (int b = 0; b < _r; ++b) {
                pair_room += choose2(_p.caps[b]) - choose2(s.sizes[b]);
                free_slots += _p.caps[b] - s.sizes[b];
            }
            if (pair_room < s.remaining)
                return false;

            // Vertex v still needs need(v) partners. Blocks holding v add at most
            // their free room; any other block v joins adds at most cap - 1 and
            // spends one free slot on v itself.
            int64_t joins = 0;
            for (int v = 0; v < _p.n; ++v) {
                int need = std::popcount(s.uncovered[v]);
                if (need == 0)
                    continue;
                int spare = 0;
                array<int, max_vertices> gains;
                int gain_count = 0;
                for (int b = 0; b < _r; ++b) {
                    int room = _p.caps[b] - s.sizes[b];
                    if ((s.blocks[b] >> v) & 1U)
                        spare += room;
                    else if (room >= 1)
                        gains[gain_count++] = _p.caps[b] - 1;
                }
                if (spare >= need)
                    continue;
                std::sort(gains.begin(), gains.begin() + gain_count, std::greater<>());
                int deficit = need - spare, used = 0;
                while (deficit > 0 && used < gain_count)
                    deficit -= gains[used++];
                if (deficit > 0)
                    return false;
                joins += used;
            }
            return joins <= free_slots;
        }

        // Fail-first: the uncovered pair with fewest admitting blocks. Among empty
        // blocks of one capacity only the first is offered.
        auto choose(const PairState &s, int &best_u, int &best_v, array<int, max_vertices> &admitting) const -> int
        {
            int best = -1;
            array<int, max_vertices> candidate;
            for (int u = 0; u < _p.n && best != 0; ++u)
                for (auto bits = s.uncovered[u] & ~((uint64_t{2} << u) - 1); bits; bits &= bits - 1) {
                    int v = std::countr_zero(bits);
                    int count = 0;
                    uint64_t seen_empty_caps = 0;
                    for (int b = 0; b < _r; ++b) {
                        int extra = !((s.blocks[b] >> u) & 1U) + !((s.blocks[b] >> v) & 1U);
                        if (s.sizes[b] + extra > _p.caps[b])
                            continue;
                        if (s.sizes[b] == 0) {
                            auto cap_bit = uint64_t{1} << _p.caps[b];
                            if (seen_empty_caps & cap_bit)
                                continue;
                            seen_empty_caps |= cap_bit;
                        }
                        candidate[count++] = b;
                    }
                    if (best < 0 || count < best) {
                        best = count;
                        best_u = u;
                        best_v = v;
                        std::copy(candidate.begin(), candidate.begin() + count, admitting.begin());
                        if (best == 0)
                            break;
                    }
                }
            return std::max(best, 0);
        }

        static void add_vertex(PairState &s, int b, int w)
        {
            if ((s.blocks[b] >> w) & 1U)
                return;
            auto newly = s.uncovered[w] & s.blocks[b];
            s.remaining -= std::popcount(newly);
            s.uncovered[w] &= ~s.blocks[b];
            for (auto bits = newly; bits; bits &= bits - 1)
                s.uncovered[std::countr_zero(bits)] &= ~(uint64_t{1} << w);
            s.blocks[b] |= uint64_t{1} << w;
            ++s.sizes[b];
        }

        static auto place(const PairState &s, int b, int u, int v) -> PairState
        {
            PairState next = s;
            add_vertex(next, b, u);
            add_vertex(next, b, v);
            return next;
        }

        const Problem &_p;
        int _r;
    };

    auto run_pair_engine(const Problem &p, const CoverOptions &options, BudgetTracker &tracker)
        -> optional<vector<uint64_t>>
    {
        PairSearch search(p);
        vector<PairState> frontier;
        search.split(search.root(), options.workers > 1 ? default_split_depth : 0, frontier);

        vector<PairState> solutions(frontier.size());
        auto found = first_solution_index(frontier.size(), options.workers,
            [&](size_t i, const atomic<size_t> &cutoff) {
                NodeMeter meter(tracker);
                return search.dfs(frontier[i], meter, i, cutoff, solutions[i]);
            });
        if (! found)
            return std::nullopt;
        auto &s = solutions[*found];
        return vector<uint64_t>(s.blocks.begin(), s.blocks.begin() + static_cast<long>(p.caps.size()));
    }

    // ---------------------------------------------------------------- vertex types
    //
    // A cover is a multiset of vertex labels T(v) (the set of blocks containing v)
    // such that any two labels meet and each block is used at most cap times.
    // Labels are visited in a fixed order (size, then mask) and the search fixes
    // each label's multiplicity, smallest first.

    using TypeBits = array<uint64_t, 16>;

    struct TypeFrame
    {
        int next = 0; // labels before this index are decided
        int left = 0; // vertices still to label
        array<int, max_type_engine_blocks> loads{};
        TypeBits allowed{};
        vector<int> mult;
    };

    class TypeSearch
    {
    public:
        explicit TypeSearch(const Problem &p) :
            _p(p),
            _m(static_cast<int>(p.caps.size()))
        {
            // A vertex labelled L meets at most sum(cap_b - 1) others over b in L, so
            // that sum must reach n - 1. This also rules out singleton labels.
            for (unsigned mask = 1; mask < (1U << _m); ++mask) {
                int reach = 0;
                for (int b = 0; b < _m; ++b)
                    if (mask & (1U << b))
                        reach += p.caps[b] - 1;
                if (reach >= p.n - 1)
                    _labels.push_back(mask);
            }
            std::stable_sort(_labels.begin(), _labels.end(),
                [](unsigned a, unsigned b) { return std::popcount(a) < std::popcount(b); });
            _min_size.assign(_labels.size() + 1, _m + 1);
            for (size_t i = _labels.size(); i-- > 0;)
                _min_size[i] = std::min(_min_size[i + 1], std::popcount(_labels[i]));

            _index_of.assign(size_t{1} << _m, -1);
            for (size_t i = 0; i < _labels.size(); ++i)
                _index_of[_labels[i]] = static_cast<int>(i);

            _meets.resize(_labels.size());
            for (size_t i = 0; i < _labels.size(); ++i)
                for (size_t j = 0; j < _labels.size(); ++j)
                    if (_labels[i] & _labels[j])
                        _meets[i][j / 64] |= uint64_t{1} << (j % 64);

            // Transpositions of equal-capacity blocks, applied to label indices.
            for (int a = 0; a < _m; ++a)
                for (int b = a + 1; b < _m; ++b)
                    if (p.caps[a] == p.caps[b]) {
                        vector<int> image(_labels.size());
                        for (size_t i = 0; i < _labels.size(); ++i) {
                            unsigned mask = _labels[i];
                            unsigned swapped = mask & ~((1U << a) | (1U << b));
                            if (mask & (1U << a))
                                swapped |= 1U << b;
                            if (mask & (1U << b))
                                swapped |= 1U << a;
                            image[i] = _index_of[swapped];
                        }
                        _swaps.push_back(std::move(image));
                    }
        }

        auto root() const -> TypeFrame
        {
            TypeFrame f;
            f.left = _p.n;
            f.mult.assign(_labels.size(), 0);
            for (size_t j = 0; j < _labels.size(); ++j)
                f.allowed[j / 64] |= uint64_t{1} << (j % 64);
            return f;
        }

        void split(TypeFrame f, int depth, vector<TypeFrame> &frontier) const
        {
            if (! settle(f))
                return;
            if (f.left == 0 || depth == 0) {
                frontier.push_back(std::move(f));
                return;
            }
            for (int k = 0, top = max_multiplicity(f); k <= top; ++k)
                split(child(f, k), depth - 1, frontier);
        }

        auto dfs(TypeFrame &f, NodeMeter &meter, size_t task, const atomic<size_t> &cutoff) const -> bool
        {
            if (! meter.tick())
                out_of_budget("vertex types");
            if (cutoff.load(std::memory_order_relaxed) < task)
                return false;
            if (! settle(f))
                return false;
            if (f.left == 0)
                return true;
            for (int k = 0, top = max_multiplicity(f); k <= top; ++k) {
                auto c = child(f, k);
                if (dfs(c, meter, task, cutoff)) {
                    f = std::move(c);
                    return true;
                }
            }
            return false;
        }

        auto blocks_of(const TypeFrame &f) const -> vector<uint64_t>
        {
            vector<uint64_t> blocks(static_cast<size_t>(_m), 0);
            int v = 0;
            for (size_t i = 0; i < _labels.size(); ++i)
                for (int c = 0; c < f.mult[i]; ++c, ++v)
                    for (int b = 0; b < _m; ++b)
                        if (_labels[i] & (1U << b))
                            blocks[b] |= uint64_t{1} << v;
            return blocks;
        }

    private:
        auto usable(const TypeFrame &f, int i) const -> bool
        {
            if (! ((f.allowed[i / 64] >> (i % 64)) & 1U))
                return false;
            for (int b = 0; b < _m; ++b)
                if ((_labels[i] & (1U << b)) && f.loads[b] >= _p.caps[b])
                    return false;
            return true;
        }

        // Skips unusable labels and applies the pruning tests. False means dead.
        auto settle(TypeFrame &f) const -> bool
        {
            if (f.left == 0)
                return true;
            auto total = static_cast<int>(_labels.size());
            while (f.next < total && ! usable(f, f.next))
                ++f.next;
            if (f.next == total)
                return false;

            // Every remaining vertex uses at least _min_size[next] units of block room.
            int room = 0;
            for (int b = 0; b < _m; ++b)
                room += _p.caps[b] - f.loads[b];
            if (room < f.left * _min_size[f.next])
                return false;

            return lex_leader_ok(f);
        }

        // Reject when swapping two equal-capacity blocks gives a lexicographically
        // larger multiplicity vector on the decided labels.
        auto lex_leader_ok(const TypeFrame &f) const -> bool
        {
            for (auto &image : _swaps)
                for (int q = 0; q < f.next; ++q) {
                    int j = image[q];
                    if (j >= f.next)
                        break;
                    if (f.mult[j] != f.mult[q]) {
                        if (f.mult[j] > f.mult[q])
                            return false;
                        break;
                    }
                }
            return true;
        }

        auto max_multiplicity(const TypeFrame &f) const -> int
        {
            int k = f.left;
            for (int b = 0; b < _m; ++b)
                if (_labels[f.next] & (1U << b))
                    k = std::min(k, _p.caps[b] - f.loads[b]);
            return k;
        }

        auto child(const TypeFrame &f, int k) const -> TypeFrame
        {
            TypeFrame c = f;
            int i = c.next++;
            c.mult[i] = k;
            if (k > 0) {
                c.left -= k;
                for (int b = 0; b < _m; ++b)
                    if (_labels[i] & (1U << b))
                        c.loads[b] += k;
                for (size_t w = 0; w < c.allowed.size(); ++w)
                    c.allowed[w] &= _meets[i][w];
            }
            return c;
        }

        const Problem &_p;
        int _m;
        vector<unsigned> _labels;
        vector<int> _index_of;
        vector<int> _min_size; // smallest label size from each index on
        vector<TypeBits> _meets;
        vector<vector<int>> _swaps;
    };

    auto run_type_engine(const Problem &p, const CoverOptions &options, BudgetTracker &tracker)
        -> optional<vector<uint64_t>>
    {
        TypeSearch search(p);
        vector<TypeFrame> frontier;
        search.split(search.root(), options.workers > 1 ? default_split_depth : 0, frontier);

        auto found = first_solution_index(frontier.size(), options.workers,
            [&](size_t i, const atomic<size_t> &cutoff) {
                NodeMeter meter(tracker);
                return search.dfs(frontier[i], meter, i, cutoff);
            });
        if (! found)
            return std::nullopt;
        return search.blocks_of(frontier[*found]);
    }
}

auto pmramsey::solve_cover(int n, std::span<const int> capacities, const CoverOptions &options) -> CoverOutcome
{
    if (n < 1 || n > max_vertices)
        throw InvalidInput("cover search needs 1 <= n <= 64, got " + std::to_string(n));
    if (capacities.empty())
        throw InvalidInput("cover search needs at least one block");
    if (capacities.size() > 64)
        throw InvalidInput("at most 64 blocks are supported");

    BlockCover cover{n, vector<int>(capacities.begin(), capacities.end()),
        vector<VertexSet>(capacities.size())};
    CoverOutcome outcome;

    Problem p{n, {}, {}};
    for (size_t i = 0; i < capacities.size(); ++i)
        if (capacities[i] >= 2) {
            p.caps.push_back(std::min(capacities[i], n));
            p.original.push_back(static_cast<int>(i));
        }

    if (n == 1) {
        outcome.cover = cover;
        return outcome;
    }
    if (p.caps.empty())
        return outcome;
    auto widest = std::max_element(p.caps.begin(), p.caps.end());
    if (*widest >= n) {
        cover.blocks[p.original[static_cast<size_t>(widest - p.caps.begin())]] = VertexSet::range(n);
        outcome.cover = cover;
        return outcome;
    }

    if (counting_refutes(p))
        return outcome;

    if (options.local_search)
        if (auto found = local_search_cover(n, capacities)) {
            outcome.cover = std::move(found);
            outcome.from_local_search = true;
            return outcome;
        }

    auto engine = options.engine;
    if (engine == CoverEngine::automatic)
        engine = p.caps.size() <= static_cast<size_t>(max_type_engine_blocks) ? CoverEngine::vertex_types
                                                                             : CoverEngine::pair_branching;
    if (engine == CoverEngine::vertex_types && p.caps.size() > static_cast<size_t>(max_type_engine_blocks))
        throw InvalidInput("vertex-type engine supports at most " + std::to_string(max_type_engine_blocks)
            + " useful blocks");
    outcome.engine_used = engine;

    BudgetTracker tracker(options.budget);
    auto blocks = engine == CoverEngine::vertex_types ? run_type_engine(p, options, tracker)
                                                      : run_pair_engine(p, options, tracker);
    outcome.nodes = tracker.nodes();
    if (! blocks)
        return outcome;
    for (size_t i = 0; i < blocks->size(); ++i)
        cover.blocks[p.original[i]] = VertexSet{(*blocks)[i]};
    outcome.cover = cover;
    return outcome;
}

auto pmramsey::cover_feasible(int n, std::span<const int> capacities, const CoverOptions &options)
    -> optional<BlockCover>
{
    return solve_cover(n, capacities, options).cover;
}

auto pmramsey::local_search_cover(int n, std::span<const int> capacities, int restarts, int steps)
    -> optional<BlockCover>
{
    if (n < 1 || n > max_vertices)
        throw InvalidInput("cover search needs 1 <= n <= 64, got " + std::to_string(n));
    vector<int> useful;
    for (size_t i = 0; i < capacities.size(); ++i)
        if (capacities[i] >= 2)
            useful.push_back(static_cast<int>(i));
    if (useful.empty() || n < 2)
        return std::nullopt;

    auto total_pairs = n * (n - 1) / 2;
    std::mt19937 rng(0x9e3779b9U ^ static_cast<unsigned>(n * 131 + static_cast<int>(capacities.size())));
    vector<vector<int>> members(useful.size());
    vector<uint64_t> masks(useful.size());
    vector<uint16_t> count(static_cast<size_t>(n * n));
    auto at = [&](int u, int v) -> uint16_t & { return count[static_cast<size_t>(u * n + v)]; };

    auto cover_pairs = [&](size_t b, int v, int delta, int &uncovered) {
        for (int w : members[b])
            if (w != v) {
                auto &c = at(std::min(v, w), std::max(v, w));
                if (delta > 0 && c++ == 0)
                    --uncovered;
                if (delta < 0 && --c == 0)
                    ++uncovered;
            }
    };

    vector<int> order(static_cast<size_t>(n));
    for (int attempt = 0; attempt < restarts; ++attempt) {
        std::fill(count.begin(), count.end(), 0);
        int uncovered = total_pairs;
        for (size_t b = 0; b < useful.size(); ++b) {
            for (int v = 0; v < n; ++v)
                order[v] = v;
            std::shuffle(order.begin(), order.end(), rng);
            int size = std::min(capacities[useful[b]], n);
            members[b].assign(order.begin(), order.begin() + size);
            masks[b] = 0;
            for (int v : members[b])
                masks[b] |= uint64_t{1} << v;
            for (int i = 0; i < size; ++i)
                for (int j = i + 1; j < size; ++j) {
                    auto &c = at(std::min(members[b][i], members[b][j]), std::max(members[b][i], members[b][j]));
                    if (c++ == 0)
                        --uncovered;
                }
        }

        for (int step = 0; step < steps && uncovered > 0; ++step) {
            auto b = static_cast<size_t>(rng() % useful.size());
            if (static_cast<int>(members[b].size()) >= n)
                continue;
            auto slot = static_cast<size_t>(rng() % members[b].size());
            int out = members[b][slot];
            int in = static_cast<int>(rng() % static_cast<unsigned>(n));
            if ((masks[b] >> in) & 1U)
                continue;

            int delta = 0;
            for (int w : members[b])
                if (w != out) {
                    delta += at(std::min(out, w), std::max(out, w)) == 1;
                    delta -= at(std::min(in, w), std::max(in, w)) == 0;
                }
            if (delta > 0 && (delta > 1 || rng() % 64 != 0))
                continue;

            cover_pairs(b, out, -1, uncovered);
            members[b][slot] = in;
            masks[b] = (masks[b] & ~(uint64_t{1} << out)) | (uint64_t{1} << in);
            cover_pairs(b, in, +1, uncovered);
        }

        if (uncovered == 0) {
            BlockCover cover{n, vector<int>(capacities.begin(), capacities.end()),
                vector<VertexSet>(capacities.size())};
            for (size_t b = 0; b < useful.size(); ++b)
                cover.blocks[useful[b]] = VertexSet{masks[b]};
            if (cover.valid())
                return cover;
        }
    }
    return std::nullopt;
}
