#include "mct/kernels.hpp"
#include "kernels_detail.hpp"

#include "mct/textual.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mct::kernels {

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

namespace parallel {

DenseMatrix pair_probabilities(std::span<const NodeProfile> profiles, const ReciprocityConfig& cfg) {
    const auto n = static_cast<std::ptrdiff_t>(profiles.size());
    DenseMatrix out(profiles.size(), profiles.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t i = 0; i < n; ++i)
        for (std::ptrdiff_t j = i + 1; j < n; ++j) {
            const double p = reciprocity_prob(profiles[i], profiles[j], cfg);
            out(i, j) = p;
            out(j, i) = p;
        }
    return out;
}

std::vector<double> edge_betweenness(const EdgeAdjacency& adj, std::size_t num_edge_ids) {
    // Sources are cut into a fixed number of blocks and the block sums are
    // reduced in block order, so the result does not depend on thread count.
    constexpr std::size_t kBlocks = 64;
    const std::size_t n = adj.size();
    const std::size_t blocks = std::min(kBlocks, std::max<std::size_t>(n, 1));
    std::vector<std::vector<double>> partial(blocks, std::vector<double>(num_edge_ids, 0.0));
#pragma omp parallel
    {
        std::vector<std::size_t> order;
        std::vector<long long> dist(n);
        std::vector<double> sigma(n), delta(n);
#pragma omp for schedule(dynamic, 1)
        for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(blocks); ++b) {
            const std::size_t lo = n * static_cast<std::size_t>(b) / blocks;
            const std::size_t hi = n * (static_cast<std::size_t>(b) + 1) / blocks;
            for (std::size_t s = lo; s < hi; ++s)
                detail::accumulate_source(adj, s, partial[b], order, dist, sigma, delta);
        }
    }
    std::vector<double> acc(num_edge_ids, 0.0);
    for (const auto& part : partial)
        for (std::size_t e = 0; e < num_edge_ids; ++e) acc[e] += part[e];
    for (auto& x : acc) x *= 0.5;
    return acc;
}

DenseMatrix js_similarity(const DenseMatrix& dists) {
    const std::size_t m = dists.rows();
    DenseMatrix out(m, m);
    std::vector<std::vector<double>> rows(m, std::vector<double>(dists.cols()));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < dists.cols(); ++k) rows[i][k] = dists(i, k);
#pragma omp parallel for schedule(dynamic, 8)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(m); ++i) {
        out(i, i) = 1.0;
        for (std::size_t j = static_cast<std::size_t>(i) + 1; j < m; ++j) {
            const double s = 1.0 - js_distance(rows[i], rows[j]);
            out(i, j) = s;
            out(j, i) = s;
        }
    }
    return out;
}

}  // namespace parallel

}  // namespace mct::kernels
