#ifndef PMRAMSEY_APP_COMMANDS_HH
#define PMRAMSEY_APP_COMMANDS_HH

#include <pmramsey/budget.hh>

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace pmramsey::app {

enum ExitCode
{
    exit_ok = 0,
    exit_usage = 1,
    exit_budget = 2,
    exit_inconsistent = 3,
};

enum class Kind
{
    pm,
    core,
};

struct CommonOptions
{
    Budget budget;
    int threads = 1;
    bool json = false;
    bool verbose = false;
};

struct CacheOptions
{
    bool enabled = true;
    std::optional<std::filesystem::path> path; ///< default_cache_path() when empty
    /// Recompute on a hit and fail with exit_inconsistent if the values differ.
    bool verify = false;
};

struct Streams
{
    std::ostream &out;
    std::ostream &err;
};

auto cmd_exact(Streams io, Kind kind, const std::string &targets, const std::string &strategy,
    const CommonOptions &common, const CacheOptions &cache, const std::optional<std::filesystem::path> &witness_out)
    -> int;

auto cmd_covering(Streams io, int v, int k, int max_blocks, const CommonOptions &common, const CacheOptions &cache)
    -> int;

auto cmd_bounds(Streams io, const std::string &targets, const CommonOptions &common) -> int;

auto cmd_witness(Streams io, Kind kind, const std::string &targets, int n, const CommonOptions &common,
    const std::optional<std::filesystem::path> &out_path) -> int;

auto cmd_deficiency(Streams io, const std::filesystem::path &graph_file, const CommonOptions &common) -> int;

auto cmd_reproduce(Streams io, bool include_slow, const CommonOptions &common) -> int;

/// Runs `body` and maps library exceptions to exit codes, reporting on io.err.
template <typename F>
auto guarded_command(Streams io, F &&body) -> int;

} // namespace pmramsey::app

#include <pmramsey/errors.hh>

#include <ostream>

template <typename F>
auto pmramsey::app::guarded_command(Streams io, F &&body) -> int
{
    try {
        return body();
    }
    catch (const InvalidInput &e) {
        io.err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const BudgetExhausted &e) {
        io.err << "budget exhausted: " << e.what() << '\n';
        return exit_budget;
    }
    catch (const InconsistentRoutes &e) {
        io.err << "inconsistency: " << e.what() << '\n';
        return exit_inconsistent;
    }
}

#endif
