#pragma once

#include "mct/core.hpp"

#include <map>
#include <utility>
#include <vector>

namespace mct {

/// Q = sum_c [ e_c / m - (d_c / 2m)^2 ] on the undirected projection.
/// The partition must cover every node. Throws ValidationError("no edges")
/// when m = 0.
double modularity(const UndirectedGraph& g, const Partition& p);
double modularity(const NetworkData& net, const Partition& p);

/// Same, from a label vector aligned with g.ids.
double modularity_labels(const UndirectedGraph& g, const std::vector<std::size_t>& labels);

/// Mutual information normalised by the arithmetic mean of the two entropies.
/// Both entropies zero gives 1. The partitions must assign the same nodes.
double nmi(const Partition& a, const Partition& b);

struct PairAgreement {
    double rand = 0.0;
    double jaccard = 0.0;
};

/// Pair-counting agreement. Jaccard is 1 when no pair is co-clustered in
/// either partition. Needs at least two nodes.
PairAgreement rand_jaccard(const Partition& a, const Partition& b);

/// 2 E_v / (k_v (k_v - 1)); 0 for degree below 2.
double clustering_coefficient(const UndirectedGraph& g, const NodeId& v);

struct AverageDegree {
    double undirected = 0.0;  // 2 m / n over the undirected projection
    double directed = 0.0;    // (in + out) / n over the directed edges
};

AverageDegree average_degree(const NetworkData& net);

/// Exhaustive search over all set partitions. Ties keep the first partition in
/// restricted-growth order, so the single community wins a tie.
std::pair<double, Partition> brute_force_best_modularity(const UndirectedGraph& g,
                                                         std::size_t max_nodes = 8);

/// Empirical CDF: sorted distinct values x with the fraction of values <= x.
std::vector<std::pair<double, double>> ecdf(std::vector<double> values);

struct MetricsReport {
    double modularity = 0.0;
    double nmi = 0.0;
    double rand = 0.0;
    double jaccard = 0.0;
    std::size_t num_communities = 0;
    AverageDegree avg_degree;
    std::map<NodeId, double> clustering_coeffs;
    bool has_truth = false;
};

/// Scores `found` on `net`; agreement measures only when `truth` is given.
/// Nodes left out of `found` count as singletons.
MetricsReport evaluate(const NetworkData& net, const Partition& found, const Partition* truth);

}  // namespace mct
