#include "mct/kernels.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace mct;

namespace {

std::vector<NodeProfile> profiles(std::size_t n) {
    std::mt19937 gen(1);
    std::uniform_int_distribution<std::int64_t> deg(0, 500);
    std::vector<NodeProfile> out;
    for (std::size_t i = 0; i < n; ++i)
        out.push_back({"n" + std::to_string(i), deg(gen), deg(gen), gen() % 4 == 0 ? Category::verified : Category::unverified});
    return out;
}

kernels::EdgeAdjacency random_graph(std::size_t n, double mean_degree) {
    std::mt19937 gen(2);
    std::bernoulli_distribution coin(mean_degree / static_cast<double>(n - 1));
    kernels::EdgeAdjacency adj(n);
    std::size_t e = 0;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (coin(gen)) {
                adj[u].push_back({v, e});
                adj[v].push_back({u, e});
                ++e;
            }
    return adj;
}

std::size_t edge_count(const kernels::EdgeAdjacency& adj) {
    std::size_t twice = 0;
    for (const auto& row : adj) twice += row.size();
    return twice / 2;
}

DenseMatrix distributions(std::size_t n, std::size_t k) {
    std::mt19937 gen(3);
    std::exponential_distribution<double> ex(1.0);
    DenseMatrix m(n, k);
    for (std::size_t i = 0; i < n; ++i) {
        double t = 0;
        for (std::size_t j = 0; j < k; ++j) t += m(i, j) = ex(gen);
        for (std::size_t j = 0; j < k; ++j) m(i, j) /= t;
    }
    return m;
}

template <auto Kernel>
void pair_probabilities(benchmark::State& state) {
    const auto ps = profiles(static_cast<std::size_t>(state.range(0)));
    const ReciprocityConfig cfg;
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(ps, cfg));
}

template <auto Kernel>
void edge_betweenness(benchmark::State& state) {
    const auto adj = random_graph(static_cast<std::size_t>(state.range(0)), 8.0);
    const auto m = edge_count(adj);
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(adj, m));
}

template <auto Kernel>
void js_similarity(benchmark::State& state) {
    const auto d = distributions(static_cast<std::size_t>(state.range(0)), 20);
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(d));
}

}  // namespace

BENCHMARK(pair_probabilities<kernels::serial::pair_probabilities>)->Name("pair_probabilities/serial")->Arg(500)->Arg(2000);
BENCHMARK(pair_probabilities<kernels::parallel::pair_probabilities>)->Name("pair_probabilities/parallel")->Arg(500)->Arg(2000)->UseRealTime();
BENCHMARK(edge_betweenness<kernels::serial::edge_betweenness>)->Name("edge_betweenness/serial")->Arg(500)->Arg(2000);
BENCHMARK(edge_betweenness<kernels::parallel::edge_betweenness>)->Name("edge_betweenness/parallel")->Arg(500)->Arg(2000)->UseRealTime();
BENCHMARK(js_similarity<kernels::serial::js_similarity>)->Name("js_similarity/serial")->Arg(500)->Arg(2000);
BENCHMARK(js_similarity<kernels::parallel::js_similarity>)->Name("js_similarity/parallel")->Arg(500)->Arg(2000)->UseRealTime();

BENCHMARK_MAIN();
