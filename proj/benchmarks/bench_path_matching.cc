#include <pmramsey/path_matching.hh>

#include <benchmark/benchmark.h>

#include <random>

using namespace pmramsey;

namespace {

auto random_graphs(int n, double q, int count) -> std::vector<SimpleGraph>
{
    std::mt19937_64 rng(static_cast<std::uint64_t>(n) * 1000 + static_cast<std::uint64_t>(q * 100));
    std::bernoulli_distribution coin(q);
    std::vector<SimpleGraph> out;
    for (int k = 0; k < count; ++k) {
        SimpleGraph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng))
                    g.add_edge(u, v);
        out.push_back(g);
    }
    return out;
}

void deficiency_random(benchmark::State &state)
{
    auto graphs = random_graphs(static_cast<int>(state.range(0)), static_cast<double>(state.range(1)) / 100, 64);
    std::size_t i = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(deficiency(graphs[i++ % graphs.size()]));
}
BENCHMARK(deficiency_random)->ArgsProduct({{8, 12, 16, 20}, {10, 30}});

void deficiency_star(benchmark::State &state)
{
    int n = static_cast<int>(state.range(0));
    SimpleGraph g(n);
    for (int v = 1; v < n; ++v)
        g.add_edge(0, v);
    for (auto _ : state)
        benchmark::DoNotOptimize(deficiency(g));
}
BENCHMARK(deficiency_star)->DenseRange(8, 24, 8);

void packing_oracle_random(benchmark::State &state)
{
    auto graphs = random_graphs(static_cast<int>(state.range(0)), 0.3, 64);
    std::size_t i = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(packing_oracle(graphs[i++ % graphs.size()]));
}
BENCHMARK(packing_oracle_random)->DenseRange(6, 10, 2);

} // namespace
