#pragma once

#include "mct/core.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace mct {

enum class GnTarget { modularity_peak, fixed_k };

struct BaselineConfig {
    int lp_max_sweeps = 100;
    std::uint64_t seed = 42;
    GnTarget gn_target = GnTarget::modularity_peak;
    std::size_t gn_k = 2;  // used with GnTarget::fixed_k

    void validate() const;
};

struct GnLevel {
    std::size_t removed = 0;               // edges removed when this level appeared
    std::vector<std::size_t> labels;       // component labels over the graph's ids
    std::size_t num_components = 0;
    double modularity = 0.0;               // on the intact graph
};

struct GnTrace {
    std::vector<NodePair> removals;  // in removal order
    std::vector<GnLevel> levels;     // the intact graph, then every split
    std::size_t chosen = 0;          // index into levels
};

/// Girvan-Newman on the undirected projection: repeatedly drops the edge of
/// highest betweenness (recomputed after every removal; ties to the
/// lexicographically smallest edge) and records each new component split.
GnTrace girvan_newman_trace(const NetworkData& net, const BaselineConfig& cfg);

/// The level chosen by cfg.gn_target: the modularity maximum (earliest level
/// on ties) or the first level with gn_k components.
Partition girvan_newman(const NetworkData& net, const BaselineConfig& cfg);

/// Asynchronous label propagation on the undirected projection. Every node
/// starts with its own label; each sweep visits nodes in a fresh seeded random
/// order and moves each to its most frequent neighbour label. A node already
/// holding one of the most frequent labels keeps it; otherwise ties are broken
/// uniformly at random.
Partition label_propagation(const NetworkData& net, const BaselineConfig& cfg);

struct LpRun {
    Partition partition;
    int sweeps = 0;
    bool converged = false;
};

/// label_propagation plus its sweep count and whether it converged.
LpRun label_propagation_run(const NetworkData& net, const BaselineConfig& cfg);

}  // namespace mct
