#include "mct/kernels.hpp"
#include "kernels_detail.hpp"

#include "mct/textual.hpp"

#include <queue>

namespace mct::kernels {

namespace detail {

void accumulate_source(const EdgeAdjacency& adj, std::size_t source, std::vector<double>& acc,
                       std::vector<std::size_t>& order, std::vector<long long>& dist,
                       std::vector<double>& sigma, std::vector<double>& delta) {
    order.clear();
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    dist[source] = 0;
    sigma[source] = 1.0;
    std::queue<std::size_t> q;
    q.push(source);
    while (!q.empty()) {
        const std::size_t v = q.front();
        q.pop();
        order.push_back(v);
        for (const auto& [w, e] : adj[v]) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
            if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
        }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const std::size_t w = *it;
        for (const auto& [v, e] : adj[w]) {
            if (dist[v] == dist[w] - 1) {
                const double c = sigma[v] / sigma[w] * (1.0 + delta[w]);
                acc[e] += c;
                delta[v] += c;
            }
        }
    }
}

}  // namespace detail

namespace serial {

DenseMatrix pair_probabilities(std::span<const NodeProfile> profiles, const ReciprocityConfig& cfg) {
    const std::size_t n = profiles.size();
    DenseMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            out(i, j) = out(j, i) = reciprocity_prob(profiles[i], profiles[j], cfg);
    return out;
}

std::vector<double> edge_betweenness(const EdgeAdjacency& adj, std::size_t num_edge_ids) {
    const std::size_t n = adj.size();
    std::vector<double> acc(num_edge_ids, 0.0);
    std::vector<std::size_t> order;
    std::vector<long long> dist(n);
    std::vector<double> sigma(n), delta(n);
    for (std::size_t s = 0; s < n; ++s) detail::accumulate_source(adj, s, acc, order, dist, sigma, delta);
    // every pair was seen from both ends
    for (auto& x : acc) x *= 0.5;
    return acc;
}

DenseMatrix js_similarity(const DenseMatrix& dists) {
    const std::size_t m = dists.rows();
    DenseMatrix out(m, m);
    std::vector<std::vector<double>> rows(m, std::vector<double>(dists.cols()));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < dists.cols(); ++k) rows[i][k] = dists(i, k);
    for (std::size_t i = 0; i < m; ++i) {
        out(i, i) = 1.0;
        for (std::size_t j = i + 1; j < m; ++j)
            out(i, j) = out(j, i) = 1.0 - js_distance(rows[i], rows[j]);
    }
    return out;
}

}  // namespace serial

}  // namespace mct::kernels
