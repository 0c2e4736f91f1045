#include <pmramsey/core_ramsey.hh>
#include <pmramsey/cover.hh>

#include <benchmark/benchmark.h>

using namespace pmramsey;

namespace {

void cover_uniform(benchmark::State &state, CoverEngine engine, bool local)
{
    int n = static_cast<int>(state.range(0));
    std::vector<int> caps(static_cast<std::size_t>(state.range(1)), static_cast<int>(state.range(2)));
    CoverOptions o;
    o.engine = engine;
    o.local_search = local;
    for (auto _ : state)
        benchmark::DoNotOptimize(cover_feasible(n, caps, o));
}

// (n, blocks, capacity): feasible and infeasible instances near R^1C.
#define COVER_ARGS Args({6, 3, 4})->Args({7, 3, 4})->Args({10, 6, 5})->Args({11, 6, 5})->Args({12, 9, 5})

BENCHMARK_CAPTURE(cover_uniform, types, CoverEngine::vertex_types, false)->COVER_ARGS;
BENCHMARK_CAPTURE(cover_uniform, pairs, CoverEngine::pair_branching, false)->Args({6, 3, 4})->Args({7, 3, 4});
BENCHMARK_CAPTURE(cover_uniform, automatic, CoverEngine::automatic, true)->COVER_ARGS;

void core_ramsey_all3(benchmark::State &state)
{
    auto p = TargetVector::uniform(3, static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(exact_core_ramsey(p));
}
BENCHMARK(core_ramsey_all3)->DenseRange(4, 12, 4);

void covering_9_5(benchmark::State &state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(covering_number(9, 5, 20));
}
BENCHMARK(covering_9_5)->Unit(benchmark::kMillisecond);

} // namespace
