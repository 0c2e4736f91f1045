#include "app/commands.hh"

#include "app/cache.hh"
#include "app/reproduce.hh"
#include "app/targets_arg.hh"

#include <pmramsey/bounds.hh>
#include <pmramsey/core_ramsey.hh>
#include <pmramsey/io.hh>
#include <pmramsey/path_matching.hh>
#include <pmramsey/pm_ramsey.hh>

#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>

using namespace pmramsey;
using namespace pmramsey::app;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

auto sorted_key(const std::vector<int> &raw) -> std::string
{
    return TargetVector(raw).key();
}

auto progress_printer(std::ostream &err) -> std::function<void(const SearchProgress &)>
{
    return [&err](const SearchProgress &p) {
        err << "  " << p.nodes << " nodes, " << static_cast<long long>(p.nodes_per_second) << " nodes/s, "
            << p.elapsed.count() << " ms\n";
    };
}

auto pm_options(const CommonOptions &c, Streams io) -> PmOptions
{
    PmOptions opt;
    opt.budget = c.budget;
    opt.workers = c.threads;
    if (c.verbose)
        opt.progress = progress_printer(io.err);
    return opt;
}

auto cover_options(const CommonOptions &c) -> CoverOptions
{
    CoverOptions opt;
    opt.budget = c.budget;
    opt.workers = c.threads;
    return opt;
}

auto members_string(VertexSet s) -> std::string
{
    std::string out = "{";
    for (int v : s.members())
        out += (out.size() > 1 ? "," : "") + std::to_string(v + 1);
    return out + "}";
}

void write_text_file(const fs::path &path, const std::string &text)
{
    std::ofstream f(path, std::ios::trunc);
    f << text;
    if (! f)
        throw InvalidInput("cannot write " + path.string());
}

auto witness_text(const LowerWitness &w) -> std::optional<std::string>
{
    std::ostringstream s;
    if (auto c = std::get_if<EdgeColoring>(&w))
        write_coloring(s, *c);
    else if (auto b = std::get_if<BlockCover>(&w))
        s << cover_to_json(*b).dump(2) << '\n';
    else
        return std::nullopt;
    return s.str();
}

// Loads the cache if enabled; returns it together with a hit for `key`.
struct CacheLookup
{
    std::optional<ResultCache> cache;
    std::optional<CacheEntry> hit;
};

auto lookup(const CacheOptions &opt, const std::string &key) -> CacheLookup
{
    CacheLookup l;
    if (! opt.enabled)
        return l;
    l.cache.emplace(opt.path.value_or(default_cache_path()));
    l.cache->load();
    l.hit = l.cache->find(key);
    return l;
}

void record(CacheLookup &l, const CacheOptions &opt, const std::string &key, int value, const std::string &method)
{
    if (! l.cache)
        return;
    if (l.hit && l.hit->value != value)
        throw InconsistentRoutes("cache holds " + key + " = " + std::to_string(l.hit->value) + " but recomputation gives "
            + std::to_string(value));
    if (l.hit && opt.verify)
        return;
    l.cache->put({key, value, method, ""});
    l.cache->save();
}

void print_cached(Streams io, const CommonOptions &c, const std::string &label, const CacheEntry &e)
{
    if (c.json)
        io.out << json{{"key", e.key}, {"value", e.value}, {"method", e.method}, {"cached", true}}.dump(2) << '\n';
    else
        io.out << label << " = " << e.value << "\nmethod: " << e.method << " (cached " << e.created << ")\n";
}

} // namespace

auto pmramsey::app::cmd_exact(Streams io, Kind kind, const std::string &targets, const std::string &strategy,
    const CommonOptions &common, const CacheOptions &cache, const std::optional<fs::path> &witness_out) -> int
{
    auto raw = parse_targets(targets);
    auto strat = parse_strategy(strategy);
    if (! strat)
        throw InvalidInput("unknown strategy '" + strategy + "'");
    auto sorted = sorted_key(raw);
    auto key = kind == Kind::pm ? pm_key(sorted) : core_key(sorted);
    auto label = (kind == Kind::pm ? "R^PM(" : "R^1C(") + sorted + ")";

    auto cached = lookup(cache, key);
    if (cached.hit && ! cache.verify) {
        print_cached(io, common, label, *cached.hit);
        return exit_ok;
    }

    RamseyResult result;
    if (kind == Kind::pm) {
        result = exact_pm_ramsey(TargetVector(raw), *strat, pm_options(common, io));
    }
    else if (auto q = normalize_targets(raw, true)) {
        result = exact_core_ramsey(*q, cover_options(common));
    }
    else {
        result.targets = TargetVector(raw).values();
        result.value = 2;
        result.method = Method::closed_form;
    }
    record(cached, cache, key, result.value, to_string(result.method));

    std::optional<std::string> written;
    if (witness_out) {
        if (auto text = witness_text(result.lower_witness)) {
            write_text_file(*witness_out, *text);
            written = witness_out->string();
        }
    }

    if (common.json) {
        auto j = result_to_json(result);
        j["key"] = key;
        j["cached"] = false;
        j["witness_path"] = written ? json(*written) : json(nullptr);
        io.out << j.dump(2) << '\n';
    }
    else {
        io.out << label << " = " << result.value << "\nmethod: " << to_string(result.method) << '\n';
        if (written)
            io.out << "witness: " << *written << '\n';
        io.out << "nodes: " << result.stats.nodes << ", time: " << result.stats.millis << " ms\n";
    }
    return exit_ok;
}

auto pmramsey::app::cmd_covering(Streams io, int v, int k, int max_blocks, const CommonOptions &common,
    const CacheOptions &cache) -> int
{
    if (v < 2 || v > max_vertices || k < 2 || k > v || max_blocks < 1)
        throw InvalidInput("need 2 <= k <= v <= " + std::to_string(max_vertices) + " and a positive block limit");
    auto key = covering_key(v, k);
    auto label = "C(" + std::to_string(v) + "," + std::to_string(k) + ")";
    auto cached = lookup(cache, key);
    if (cached.hit && ! cache.verify) {
        print_cached(io, common, label, *cached.hit);
        return exit_ok;
    }
    auto value = covering_number(v, k, max_blocks, cover_options(common));
    if (! value)
        throw BudgetExhausted(label + " not settled with at most " + std::to_string(max_blocks) + " blocks");
    record(cached, cache, key, *value, "exhaustive-search");
    if (common.json)
        io.out << json{{"key", key}, {"value", *value}, {"cached", false}}.dump(2) << '\n';
    else
        io.out << label << " = " << *value << '\n';
    return exit_ok;
}

auto pmramsey::app::cmd_bounds(Streams io, const std::string &targets, const CommonOptions &common) -> int
{
    TargetVector p(parse_targets(targets));
    if (p.r() < 2)
        throw InvalidInput("bounds need at least two targets");
    auto report = bounds_report(p);
    auto upper = report.best_upper();
    if (common.json) {
        json rows = json::array();
        for (auto &e : report.entries)
            rows.push_back({{"name", e.name}, {"kind", to_string(e.kind)}, {"value", e.value},
                {"condition", e.condition_holds ? json(*e.condition_holds) : json(nullptr)}});
        io.out << json{{"targets", p.values()}, {"entries", rows}, {"best_lower", report.best_lower()},
                          {"best_upper", upper ? json(*upper) : json(nullptr)}}
                      .dump(2)
               << '\n';
        return exit_ok;
    }
    io.out << "R^PM(" << p.key() << ")\n";
    for (auto &e : report.entries) {
        io.out << "  " << e.name << "  " << to_string(e.kind) << "  " << e.value;
        if (e.condition_holds)
            io.out << (*e.condition_holds ? "  (condition holds)" : "  (condition fails)");
        io.out << '\n';
    }
    io.out << "best lower " << report.best_lower();
    if (upper)
        io.out << ", best upper " << *upper << (*upper == report.best_lower() ? ", exact" : "");
    io.out << '\n';
    return exit_ok;
}

auto pmramsey::app::cmd_witness(Streams io, Kind kind, const std::string &targets, int n,
    const CommonOptions &common, const std::optional<fs::path> &out_path) -> int
{
    TargetVector p(parse_targets(targets));
    if (n < 1 || n > max_vertices)
        throw InvalidInput("n must be in [1, " + std::to_string(max_vertices) + "]");

    std::optional<std::string> text;
    if (kind == Kind::pm) {
        auto opt = pm_options(common, io);
        auto w = find_lower_witness(n, p, opt);
        // The witness routes give up quietly on budget; ask the search directly so
        // "none exists" is never confused with "ran out".
        if (! w)
            w = verify_upper(n, p, opt);
        if (w)
            text = witness_text(*w);
    }
    else {
        std::vector<int> caps;
        for (int v : p.values())
            caps.push_back(v - 1);
        if (auto c = cover_feasible(n, caps, cover_options(common)))
            text = witness_text(*c);
    }

    if (! text) {
        io.err << "no bad " << (kind == Kind::pm ? "colouring" : "cover") << " of K_" << n << " exists for (" << p.key()
               << ")\n";
        return exit_ok;
    }
    if (out_path) {
        write_text_file(*out_path, *text);
        io.out << out_path->string() << '\n';
    }
    else {
        io.out << *text;
    }
    return exit_ok;
}

auto pmramsey::app::cmd_deficiency(Streams io, const fs::path &graph_file, const CommonOptions &common) -> int
{
    std::ifstream in(graph_file);
    if (! in)
        throw InvalidInput("cannot open " + graph_file.string());
    auto g = read_graph(in);
    auto d = deficiency(g);
    int order = g.size() - d.deficiency;
    if (common.json) {
        auto one_based = [](VertexSet s) {
            std::vector<int> v;
            for (int x : s.members())
                v.push_back(x + 1);
            return v;
        };
        io.out << json{{"n", g.size()}, {"deficiency", d.deficiency}, {"max_pm_order", order},
                          {"lv_set", one_based(d.certificate.lv_set)},
                          {"isolated", one_based(d.certificate.isolated_witness)}}
                      .dump(2)
               << '\n';
    }
    else {
        io.out << "n = " << g.size() << "\ndeficiency = " << d.deficiency << "\nmax path-matching order = " << order
               << "\nX = " << members_string(d.certificate.lv_set)
               << "\nisolated in G - X = " << members_string(d.certificate.isolated_witness) << '\n';
    }
    return exit_ok;
}

auto pmramsey::app::cmd_reproduce(Streams io, bool include_slow, const CommonOptions &common) -> int
{
    ReproduceOptions opt;
    opt.include_slow = include_slow;
    opt.workers = common.threads;
    if (! common.json)
        opt.on_result = [&](const CriterionResult &r) { io.out << format_line(r) << std::endl; };
    auto results = reproduce(opt);
    bool all = std::all_of(results.begin(), results.end(), [](auto &r) { return r.passed; });
    if (common.json)
        io.out << to_json(results).dump(2) << '\n';
    else
        io.out << (all ? "all criteria pass" : "some criteria FAIL") << '\n';
    return all ? exit_ok : exit_inconsistent;
}
