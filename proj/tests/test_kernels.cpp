#include "helpers.hpp"

#include "mct/kernels.hpp"
#include "mct/textual.hpp"

#include <doctest.h>

#include <cmath>
#include <queue>
#include <random>

using namespace mct;
using namespace mct::kernels;

namespace {

struct RandomGraph {
    EdgeAdjacency adj;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
};

RandomGraph random_graph(std::mt19937& gen, std::size_t n, double p) {
    RandomGraph g;
    g.adj.resize(n);
    std::bernoulli_distribution coin(p);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (coin(gen)) {
                const std::size_t id = g.edges.size();
                g.edges.emplace_back(u, v);
                g.adj[u].push_back({v, id});
                g.adj[v].push_back({u, id});
            }
    return g;
}

// Shortest-path counts from every source by BFS; an edge (u, v) lies on
// sigma(s,u) * sigma(v,t) of the sigma(s,t) geodesics when d(s,u)+1+d(v,t) = d(s,t).
std::vector<double> betweenness_oracle(const RandomGraph& g) {
    const std::size_t n = g.adj.size();
    std::vector<std::vector<long long>> dist(n, std::vector<long long>(n, -1));
    std::vector<std::vector<double>> sigma(n, std::vector<double>(n, 0.0));
    for (std::size_t s = 0; s < n; ++s) {
        std::queue<std::size_t> q;
        dist[s][s] = 0;
        sigma[s][s] = 1;
        q.push(s);
        while (!q.empty()) {
            auto u = q.front();
            q.pop();
            for (auto [v, _] : g.adj[u]) {
                if (dist[s][v] < 0) {
                    dist[s][v] = dist[s][u] + 1;
                    q.push(v);
                }
                if (dist[s][v] == dist[s][u] + 1) sigma[s][v] += sigma[s][u];
            }
        }
    }
    std::vector<double> out(g.edges.size(), 0.0);
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        auto [a, b] = g.edges[e];
        for (std::size_t s = 0; s < n; ++s)
            for (std::size_t t = s + 1; t < n; ++t) {
                if (dist[s][t] <= 0) continue;
                for (auto [u, v] : {std::pair{a, b}, std::pair{b, a}})
                    if (dist[s][u] >= 0 && dist[v][t] >= 0 && dist[s][u] + 1 + dist[v][t] == dist[s][t])
                        out[e] += sigma[s][u] * sigma[v][t] / sigma[s][t];
            }
    }
    return out;
}

DenseMatrix random_simplex_rows(std::mt19937& gen, std::size_t rows, std::size_t cols) {
    DenseMatrix m(rows, cols);
    std::exponential_distribution<double> ex(1.0);
    for (std::size_t i = 0; i < rows; ++i) {
        double total = 0;
        for (std::size_t k = 0; k < cols; ++k) total += m(i, k) = ex(gen);
        for (std::size_t k = 0; k < cols; ++k) m(i, k) /= total;
    }
    return m;
}

}  // namespace

TEST_SUITE("kernels") {

TEST_CASE("betweenness on a three-node path") {
    RandomGraph g;
    g.adj = {{{1, 0}}, {{0, 0}, {2, 1}}, {{1, 1}}};
    g.edges = {{0, 1}, {1, 2}};
    CHECK(serial::edge_betweenness(g.adj, 2) == std::vector<double>{2.0, 2.0});
    CHECK(parallel::edge_betweenness(g.adj, 2) == std::vector<double>{2.0, 2.0});
}

TEST_CASE("serial betweenness agrees with the path-count oracle") {
    std::mt19937 gen(21);
    for (int trial = 0; trial < 30; ++trial) {
        auto g = random_graph(gen, 12, 0.25);
        auto got = serial::edge_betweenness(g.adj, g.edges.size());
        auto want = betweenness_oracle(g);
        REQUIRE(got.size() == want.size());
        for (std::size_t e = 0; e < got.size(); ++e) CHECK(got[e] == doctest::Approx(want[e]).epsilon(1e-12));
    }
}

TEST_CASE("parallel kernels match the serial reference") {
    std::mt19937 gen(8);
    for (int trial = 0; trial < 10; ++trial) {
        auto g = random_graph(gen, 60, 0.08);
        auto s = serial::edge_betweenness(g.adj, g.edges.size());
        auto p = parallel::edge_betweenness(g.adj, g.edges.size());
        REQUIRE(s.size() == p.size());
        for (std::size_t e = 0; e < s.size(); ++e) CHECK(std::abs(s[e] - p[e]) <= 1e-9 * std::max(1.0, s[e]));
    }

    std::vector<NodeProfile> profiles;
    std::uniform_int_distribution<int> deg(0, 30);
    for (int i = 0; i < 80; ++i)
        profiles.push_back(testing::profile("v" + std::to_string(i), deg(gen), deg(gen), gen() % 3 == 0));
    ReciprocityConfig cfg;
    auto ps = serial::pair_probabilities(profiles, cfg);
    auto pp = parallel::pair_probabilities(profiles, cfg);
    CHECK(ps.data() == pp.data());
    CHECK(ps.is_symmetric(0.0));
    for (std::size_t i = 0; i < ps.rows(); ++i) CHECK(ps(i, i) == 0.0);
    CHECK(ps(0, 1) == reciprocity_prob(profiles[0], profiles[1], cfg));

    auto d = random_simplex_rows(gen, 40, 6);
    auto js = serial::js_similarity(d);
    auto jp = parallel::js_similarity(d);
    CHECK(js.data() == jp.data());
    for (std::size_t i = 0; i < js.rows(); ++i) CHECK(js(i, i) == 1.0);
    std::vector<double> r0(d.data().begin(), d.data().begin() + 6), r1(d.data().begin() + 6, d.data().begin() + 12);
    CHECK(js(0, 1) == 1.0 - js_distance(r0, r1));
}

TEST_CASE("thread count is positive") {
    CHECK(max_threads() >= 1);
}

}
