#include "mct/reciprocity.hpp"

#include "mct/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace mct {

void ReciprocityConfig::validate() const {
    if (!(tau > 0.0 && tau < 1.0)) throw ValidationError("tau must lie in (0, 1)");
    if (!(zeta > 0.0)) throw ValidationError("zeta must be positive");
    if (!(band_lo <= 1.0 && 1.0 <= band_hi)) throw ValidationError("ratio band must contain 1");
}

namespace {

bool counts_similar(std::int64_t a, std::int64_t b, const ReciprocityConfig& cfg) {
    if (a == 0 && b == 0) return true;
    if (b == 0 || a == 0) return false;
    const double ratio = static_cast<double>(a) / static_cast<double>(b);
    return ratio >= cfg.band_lo && ratio <= cfg.band_hi;
}

// The band is not closed under inversion; a pair passes if either ratio lands
// in it, which keeps the score symmetric.
bool ratio_test(std::int64_t a, std::int64_t b, const ReciprocityConfig& cfg) {
    return counts_similar(a, b, cfg) || counts_similar(b, a, cfg);
}

}  // namespace

double feature_jaccard(const NodeProfile& a, const NodeProfile& b, const ReciprocityConfig& cfg) {
    int matches = 0;
    matches += ratio_test(a.indegree, b.indegree, cfg) ? 1 : 0;
    matches += ratio_test(a.outdegree, b.outdegree, cfg) ? 1 : 0;
    matches += a.category == b.category ? 1 : 0;
    return matches / 3.0;
}

double reciprocity_from_jaccard(double jaccard, double zeta) {
    const double shifted = jaccard + zeta;
    if (shifted <= 0.0) return 0.0;
    const double denom = zeta * (1.0 + std::log(shifted));
    if (denom <= 0.0) return 0.0;
    const double eps = 1.0 / denom;
    const double s = eps + jaccard;
    if (s <= 0.0) return 0.0;
    const double phi = -std::log(s) * s;
    return 1.0 / (1.0 + std::exp(phi));
}

double reciprocity_prob(const NodeProfile& a, const NodeProfile& b, const ReciprocityConfig& cfg) {
    return reciprocity_from_jaccard(feature_jaccard(a, b, cfg), cfg.zeta);
}

double StructuralResult::probability(const NodeId& a, const NodeId& b) const {
    auto it = prob.find(make_pair_sorted(a, b));
    return it == prob.end() ? 0.0 : it->second;
}

std::vector<NodeId> StructuralResult::related_nodes() const {
    std::set<NodeId> s;
    for (const auto& [a, b] : related) {
        s.insert(a);
        s.insert(b);
    }
    return {s.begin(), s.end()};
}

StructuralResult f_sim(const NetworkData& net, const ReciprocityConfig& cfg) {
    cfg.validate();
    StructuralResult r;
    r.tau = cfg.tau;
    r.nodes = net.nodes();
    const std::size_t n = r.nodes.size();

    std::vector<NodeProfile> profiles;
    profiles.reserve(n);
    for (const auto& id : r.nodes) profiles.push_back(net.profile(id));

    // Candidate pairs in index space (i < j).
    std::vector<std::pair<std::size_t, std::size_t>> candidates;
    DenseMatrix probs;
    if (cfg.scope == PairScope::all_pairs) {
        probs = kernels::parallel::pair_probabilities(profiles, cfg);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) candidates.emplace_back(i, j);
    } else {
        std::set<std::pair<std::size_t, std::size_t>> tie_set;
        for (const auto& e : net.edges()) {
            std::size_t u = net.index_of(e.src), v = net.index_of(e.dst);
            tie_set.emplace(std::min(u, v), std::max(u, v));
        }
        candidates.assign(tie_set.begin(), tie_set.end());
        probs = DenseMatrix(n, n);
        for (auto [i, j] : candidates) {
            const double p = reciprocity_prob(profiles[i], profiles[j], cfg);
            probs(i, j) = probs(j, i) = p;
        }
    }

    r.adjacency = DenseMatrix(n, n);
    r.degree = DenseMatrix(n, n);
    r.laplacian = DenseMatrix(n, n);
    for (auto [i, j] : candidates) {
        const double p = probs(i, j);
        NodePair key{r.nodes[i], r.nodes[j]};
        r.prob.emplace(key, p);
        if (p >= cfg.tau) {
            r.related.push_back(key);
            r.adjacency(i, j) = r.adjacency(j, i) = 1.0;
            r.laplacian(i, j) = r.laplacian(j, i) = -p;
            r.laplacian(i, i) += p;
            r.laplacian(j, j) += p;
            r.degree(i, i) += 1.0;
            r.degree(j, j) += 1.0;
        } else {
            r.unrelated.push_back(key);
        }
    }
    std::sort(r.related.begin(), r.related.end());
    std::sort(r.unrelated.begin(), r.unrelated.end());
    r.adjacency.row_labels = r.adjacency.col_labels = r.nodes;
    r.laplacian.row_labels = r.laplacian.col_labels = r.nodes;
    r.degree.row_labels = r.degree.col_labels = r.nodes;
    return r;
}

AccuracyReport prediction_accuracy(const StructuralResult& result,
                                   const std::vector<NodePair>& truth) {
    std::set<NodePair> truth_set;
    for (const auto& [a, b] : truth) truth_set.insert(make_pair_sorted(a, b));
    if (truth_set.empty()) throw ValidationError("no ground truth");
    AccuracyReport rep;
    rep.truth = truth_set.size();
    rep.predicted = result.related.size();
    for (const auto& pr : result.related)
        if (truth_set.count(pr)) ++rep.true_positives;
    rep.accuracy = static_cast<double>(rep.true_positives) / static_cast<double>(rep.truth);
    rep.precision = rep.predicted == 0
                        ? 0.0
                        : static_cast<double>(rep.true_positives) / static_cast<double>(rep.predicted);
    rep.f1 = rep.accuracy + rep.precision > 0.0
                 ? 2.0 * rep.accuracy * rep.precision / (rep.accuracy + rep.precision)
                 : 0.0;
    return rep;
}

}  // namespace mct
