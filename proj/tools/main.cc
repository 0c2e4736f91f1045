#include "app/commands.hh"

#include <CLI11.hpp>

#include <iostream>

using namespace pmramsey::app;

namespace {

void add_common(CLI::App *cmd, CommonOptions &c, std::uint64_t &nodes, long long &millis)
{
    cmd->add_option("--node-budget", nodes, "search nodes allowed per search")->capture_default_str();
    cmd->add_option("--time-budget-ms", millis, "wall-clock limit per search, 0 for none")->capture_default_str();
    cmd->add_option("--threads", c.threads, "worker threads")->check(CLI::Range(1, 256))->capture_default_str();
    cmd->add_flag("--json", c.json, "machine-readable output");
    cmd->add_flag("--verbose", c.verbose, "report search progress on stderr");
}

void add_cache(CLI::App *cmd, CacheOptions &cache, std::string &path, bool &disabled)
{
    cmd->add_option("--cache", path, "cache file (default: $RAMSEY_PM_CACHE or the user cache directory)");
    cmd->add_flag("--no-cache", disabled, "neither read nor write the cache");
    cmd->add_flag("--verify-cache", cache.verify, "recompute cached values and fail if they differ");
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Path-matching and 1-core Ramsey numbers"};
    app.require_subcommand(1);

    CommonOptions common;
    std::uint64_t nodes = pmramsey::default_node_budget;
    long long millis = 0;
    CacheOptions cache;
    std::string cache_path;
    bool no_cache = false;

    std::string kind_name, targets, strategy = "auto", out_path;
    int n = 0;

    auto kind_check = CLI::IsMember({"pm", "core"});

    auto exact = app.add_subcommand("exact", "compute R^PM or R^1C exactly");
    exact->add_option("kind", kind_name, "pm or core")->required()->check(kind_check);
    exact->add_option("-t,--targets", targets, "targets, e.g. 5,5,5 or 6*10")->required();
    exact->add_option("-s,--strategy", strategy, "auto, search, reduction or formula (pm only)")->capture_default_str();
    exact->add_option("-w,--witness-out", out_path, "write the lower-bound witness here");
    add_common(exact, common, nodes, millis);
    add_cache(exact, cache, cache_path, no_cache);

    int v = 0, k = 0, max_blocks = 64;
    auto covering = app.add_subcommand("covering", "covering number C(v,k)");
    covering->add_option("-v", v, "ground set size")->required();
    covering->add_option("-k", k, "block size")->required();
    covering->add_option("--max-blocks", max_blocks, "give up above this many blocks")->capture_default_str();
    add_common(covering, common, nodes, millis);
    add_cache(covering, cache, cache_path, no_cache);

    auto bounds = app.add_subcommand("bounds", "closed-form bounds on R^PM");
    bounds->add_option("-t,--targets", targets, "targets")->required();
    bounds->add_flag("--json", common.json, "machine-readable output");

    auto witness = app.add_subcommand("witness", "bad colouring (pm) or cover (core) of K_n");
    witness->add_option("kind", kind_name, "pm or core")->required()->check(kind_check);
    witness->add_option("-t,--targets", targets, "targets")->required();
    witness->add_option("-n", n, "number of vertices")->required();
    witness->add_option("-o,--output", out_path, "output file (default: stdout)");
    add_common(witness, common, nodes, millis);

    std::string graph_file;
    auto defic = app.add_subcommand("deficiency", "path-matching deficiency of a graph file");
    defic->add_option("graph", graph_file, "graph file: n, then one 'u v' edge per line")->required();
    defic->add_flag("--json", common.json, "machine-readable output");

    bool include_slow = false;
    auto repro = app.add_subcommand("reproduce", "run the reproduction suite");
    repro->add_flag("--include-slow", include_slow, "also run C(13,5) and the n = 7 searches");
    add_common(repro, common, nodes, millis);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    common.budget.nodes = nodes;
    common.budget.time = std::chrono::milliseconds(millis);
    cache.enabled = ! no_cache;
    if (! cache_path.empty())
        cache.path = cache_path;
    Streams io{std::cout, std::cerr};
    auto kind = kind_name == "core" ? Kind::core : Kind::pm;
    std::optional<std::filesystem::path> out;
    if (! out_path.empty())
        out = out_path;

    return guarded_command(io, [&] {
        if (*exact)
            return cmd_exact(io, kind, targets, strategy, common, cache, out);
        if (*covering)
            return cmd_covering(io, v, k, max_blocks, common, cache);
        if (*bounds)
            return cmd_bounds(io, targets, common);
        if (*witness)
            return cmd_witness(io, kind, targets, n, common, out);
        if (*defic)
            return cmd_deficiency(io, graph_file, common);
        return cmd_reproduce(io, include_slow, common);
    });
}
