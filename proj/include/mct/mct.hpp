#pragma once

#include "mct/core.hpp"
#include "mct/nmf.hpp"
#include "mct/reciprocity.hpp"
#include "mct/spectral.hpp"
#include "mct/textual.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace mct {

enum class MctMode { joint, structural_only };

struct MctConfig {
    double tau = 0.5;
    double lambda = 0.5;               // weight of the structural score
    std::vector<double> lambda_grid;   // for tune_lambda
    std::size_t max_clusters = 2;      // M
    int max_iters = 100;
    std::uint64_t seed = 42;
    MctMode mode = MctMode::joint;
    std::size_t seeds_per_round = 4;
    bool strict_clique = false;        // detect_mct: split components into cliques

    void validate() const;
};

/// Both modality results for one network. `textual` is empty in
/// structural-only mode.
struct Modalities {
    StructuralResult structural;
    std::optional<TextualResult> textual;
};

/// f-sim over the network, then text-sim over the nodes of the related pairs
/// (skipped in structural-only mode). The reciprocity and text thresholds are
/// taken from cfg.tau.
Modalities compute_modalities(const NetworkData& net, const MctConfig& cfg, ReciprocityConfig recip,
                              TextConfig text);

/// psi = lambda * S + (1 - lambda) * T with S = p(R) and T = 1 - JS distance;
/// psi = S when `textual` is null. Throws when neither modality knows a node.
double joint_similarity(const NodeId& i, const NodeId& j, const StructuralResult& structural,
                        const TextualResult* textual, double lambda);

/// Microcosms: connected components of the graph joining pairs with
/// p(R) >= tau and (outside structural-only mode) textual similarity >= tau.
/// Every node of the network appears, unconnected ones as singletons.
Partition detect_mct(const NetworkData& net, const MctConfig& cfg, const ReciprocityConfig& recip,
                     const TextConfig& text);
Partition detect_mct(const NetworkData& net, const Modalities& mods, const MctConfig& cfg);

/// Candidate nodes of the seeded clustering: nodes in a related pair, and
/// (outside structural-only mode) carrying text.
std::vector<NodeId> mct2_candidates(const Modalities& mods, const MctConfig& cfg);

/// Seeded clustering on psi. Rounds of `seeds_per_round` random candidates
/// are merged where psi >= tau and the groups opened as clusters until M
/// exist; then every candidate, in id order, joins the cluster with the
/// highest mean psi to its members, means updating after each move, until a
/// pass changes nothing or max_iters passes ran. Non-candidates are
/// singletons.
Partition detect_mct2(const NetworkData& net, const MctConfig& cfg, const ReciprocityConfig& recip,
                      const TextConfig& text);
Partition detect_mct2(const NetworkData& net, const Modalities& mods, const MctConfig& cfg);

/// Undirected graph of the related pairs, over every node of the network.
UndirectedGraph reciprocity_graph(const StructuralResult& structural);

/// Runs detect_mct2 for each lambda of cfg.lambda_grid and keeps the one whose
/// partition has the highest modularity on the reciprocity graph; ties go to
/// the smaller lambda.
std::pair<double, Partition> tune_lambda(const NetworkData& net, const Modalities& mods, const MctConfig& cfg);

/// Joint-weight grid searched by detect_nmf.
inline const std::vector<double> kNmfLambdaGrid = {0.0, 0.01, 0.1, 0.5, 1.0};

struct NmfDetectConfig {
    std::size_t bands = 4;
    std::size_t clusters = 2;
    NmfOptions options;
    std::vector<double> lambda_grid = kNmfLambdaGrid;
};

/// Factorises the node x size-band matrix with the joint affinity term (the
/// textual affinity, or the weighted structural ties in structural-only mode)
/// and keeps the joint weight whose partition scores best on the reciprocity
/// graph.
Partition detect_nmf(const NetworkData& net, const Modalities& mods, const NmfDetectConfig& cfg);

/// Spectral clustering of the structural Laplacian.
Partition detect_spectral(const Modalities& mods, const SpectralConfig& cfg);

}  // namespace mct
