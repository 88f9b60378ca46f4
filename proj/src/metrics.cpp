#include "mct/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace mct {

double modularity_labels(const UndirectedGraph& g, const std::vector<std::size_t>& labels) {
    const std::size_t m = g.num_edges();
    if (m == 0) throw ValidationError("no edges");
    if (labels.size() != g.num_nodes()) throw ValidationError("label vector does not match graph");
    const std::size_t k = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
    std::vector<double> inside(k, 0.0), degree(k, 0.0);
    for (auto [u, v] : g.edges)
        if (labels[u] == labels[v]) inside[labels[u]] += 1.0;
    for (std::size_t v = 0; v < g.num_nodes(); ++v) degree[labels[v]] += static_cast<double>(g.degree(v));
    const double md = static_cast<double>(m);
    double q = 0.0;
    for (std::size_t c = 0; c < k; ++c) {
        const double frac = degree[c] / (2.0 * md);
        q += inside[c] / md - frac * frac;
    }
    return q;
}

double modularity(const UndirectedGraph& g, const Partition& p) {
    validate_partition(p, g.ids);
    if (p.num_assigned() != g.num_nodes()) throw ValidationError("partition does not cover every node");
    return modularity_labels(g, labels_for(p, g.ids));
}

double modularity(const NetworkData& net, const Partition& p) {
    return modularity(undirected_graph(net), p);
}

namespace {

std::vector<NodeId> universe_of(const Partition& p) {
    std::vector<NodeId> out;
    for (const auto& c : p.communities) out.insert(out.end(), c.begin(), c.end());
    std::sort(out.begin(), out.end());
    return out;
}

// Label vectors of both partitions over their shared, sorted node set.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> aligned_labels(const Partition& a,
                                                                             const Partition& b) {
    const auto ua = universe_of(a);
    const auto ub = universe_of(b);
    if (std::adjacent_find(ua.begin(), ua.end()) != ua.end() ||
        std::adjacent_find(ub.begin(), ub.end()) != ub.end())
        throw ValidationError("partition has overlapping communities");
    if (ua != ub) throw ValidationError("partitions cover different node sets");
    return {labels_for(a, ua), labels_for(b, ua)};
}

double entropy(const std::map<std::size_t, double>& counts, double n) {
    double h = 0.0;
    for (const auto& [_, c] : counts) {
        const double q = c / n;
        h -= q * std::log(q);
    }
    return h;
}

}  // namespace

double nmi(const Partition& a, const Partition& b) {
    const auto [la, lb] = aligned_labels(a, b);
    const double n = static_cast<double>(la.size());
    if (la.empty()) throw ValidationError("partitions are empty");
    std::map<std::size_t, double> ca, cb;
    std::map<std::pair<std::size_t, std::size_t>, double> joint;
    for (std::size_t i = 0; i < la.size(); ++i) {
        ca[la[i]] += 1.0;
        cb[lb[i]] += 1.0;
        joint[{la[i], lb[i]}] += 1.0;
    }
    const double ha = entropy(ca, n);
    const double hb = entropy(cb, n);
    if (ha + hb == 0.0) return 1.0;
    double mi = 0.0;
    for (const auto& [key, c] : joint) mi += c / n * std::log(c * n / (ca[key.first] * cb[key.second]));
    return std::clamp(mi / (0.5 * (ha + hb)), 0.0, 1.0);
}

PairAgreement rand_jaccard(const Partition& a, const Partition& b) {
    const auto [la, lb] = aligned_labels(a, b);
    const std::size_t n = la.size();
    if (n < 2) throw ValidationError("pair agreement needs at least two nodes");
    double both = 0, only_a = 0, only_b = 0, neither = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool sa = la[i] == la[j];
            const bool sb = lb[i] == lb[j];
            if (sa && sb) both += 1;
            else if (sa) only_a += 1;
            else if (sb) only_b += 1;
            else neither += 1;
        }
    PairAgreement r;
    r.rand = (both + neither) / (both + only_a + only_b + neither);
    const double together = both + only_a + only_b;
    r.jaccard = together == 0 ? 1.0 : both / together;
    return r;
}

double clustering_coefficient(const UndirectedGraph& g, const NodeId& v) {
    auto it = std::lower_bound(g.ids.begin(), g.ids.end(), v);
    if (it == g.ids.end() || *it != v) throw ValidationError("unknown node " + v);
    const auto& nb = g.adj[static_cast<std::size_t>(it - g.ids.begin())];
    const std::size_t k = nb.size();
    if (k < 2) return 0.0;
    std::size_t links = 0;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (std::binary_search(g.adj[nb[i]].begin(), g.adj[nb[i]].end(), nb[j])) ++links;
    return 2.0 * static_cast<double>(links) / (static_cast<double>(k) * static_cast<double>(k - 1));
}

AverageDegree average_degree(const NetworkData& net) {
    AverageDegree d;
    if (net.size() == 0) return d;
    const double n = static_cast<double>(net.size());
    d.undirected = 2.0 * static_cast<double>(undirected_graph(net).num_edges()) / n;
    d.directed = 2.0 * static_cast<double>(net.edges().size()) / n;
    return d;
}

std::pair<double, Partition> brute_force_best_modularity(const UndirectedGraph& g, std::size_t max_nodes) {
    const std::size_t n = g.num_nodes();
    if (n > max_nodes) throw ValidationError("graph too large for exhaustive modularity search");
    if (n == 0) throw ValidationError("graph has no nodes");
    // Restricted growth strings enumerate each set partition once.
    std::vector<std::size_t> rgs(n, 0), prefix_max(n, 0);
    std::vector<std::size_t> best = rgs;
    double best_q = modularity_labels(g, rgs);
    while (true) {
        std::size_t i = n;
        bool can_grow = false;
        while (i-- > 1)
            if (rgs[i] <= prefix_max[i - 1]) {
                can_grow = true;
                break;
            }
        if (!can_grow) break;
        ++rgs[i];
        prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
        for (std::size_t j = i + 1; j < n; ++j) {
            rgs[j] = 0;
            prefix_max[j] = prefix_max[i];
        }
        const double q = modularity_labels(g, rgs);
        if (q > best_q) {
            best_q = q;
            best = rgs;
        }
    }
    return {best_q, partition_from_labels(g.ids, best, "brute_force")};
}

std::vector<std::pair<double, double>> ecdf(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    std::vector<std::pair<double, double>> out;
    const double n = static_cast<double>(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        if (i + 1 == values.size() || values[i + 1] != values[i])
            out.emplace_back(values[i], static_cast<double>(i + 1) / n);
    return out;
}

MetricsReport evaluate(const NetworkData& net, const Partition& found, const Partition* truth) {
    const auto g = undirected_graph(net);
    validate_partition(found, g.ids);
    const auto labels = labels_for(found, g.ids);
    MetricsReport r;
    const Partition full = partition_from_labels(g.ids, labels, found.algorithm, found.params);
    r.num_communities = full.size();
    if (g.num_edges() > 0) r.modularity = modularity_labels(g, labels);
    r.avg_degree = average_degree(net);
    for (const auto& id : g.ids) r.clustering_coeffs[id] = clustering_coefficient(g, id);
    if (truth) {
        validate_partition(*truth, g.ids);
        const Partition t = partition_from_labels(g.ids, labels_for(*truth, g.ids));
        r.nmi = nmi(full, t);
        if (g.num_nodes() >= 2) {
            const auto pa = rand_jaccard(full, t);
            r.rand = pa.rand;
            r.jaccard = pa.jaccard;
        }
        r.has_truth = true;
    }
    return r;
}

}  // namespace mct
