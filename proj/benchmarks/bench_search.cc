#include <pmramsey/search.hh>

#include <benchmark/benchmark.h>

using namespace pmramsey;

namespace {

void search_case(benchmark::State &state, int n, std::vector<int> p, SymmetryLevel symmetry)
{
    SearchConfig c(n, TargetVector(std::move(p)));
    c.symmetry = symmetry;
    c.workers = static_cast<int>(state.range(0));
    std::uint64_t nodes = 0;
    for (auto _ : state)
        nodes += enumerate_colorings(c).nodes;
    state.counters["nodes/s"] = benchmark::Counter(static_cast<double>(nodes), benchmark::Counter::kIsRate);
}

BENCHMARK_CAPTURE(search_case, k6_555, 6, {5, 5, 5}, SymmetryLevel::colors_and_vertices)->Arg(1)->Arg(4);
BENCHMARK_CAPTURE(search_case, k7_555, 7, {5, 5, 5}, SymmetryLevel::colors_and_vertices)->Arg(1)->Arg(4);
BENCHMARK_CAPTURE(search_case, k6_444, 6, {4, 4, 4}, SymmetryLevel::colors_and_vertices)->Arg(1);
BENCHMARK_CAPTURE(search_case, k8_666, 8, {6, 6, 6}, SymmetryLevel::colors_and_vertices)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(search_case, k5_4333_colors_only, 5, {4, 3, 3, 3}, SymmetryLevel::colors)->Arg(1);

void all_classes(benchmark::State &state)
{
    int n = static_cast<int>(state.range(0));
    SearchConfig c(n, TargetVector({n + 2, n + 1}));
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_colorings(c, [](const EdgeColoring &) { return true; }));
}
BENCHMARK(all_classes)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

} // namespace
