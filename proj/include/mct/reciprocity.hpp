#pragma once

#include "mct/core.hpp"

#include <map>
#include <vector>

namespace mct {

/// Which node pairs f-sim scores.
enum class PairScope {
    all_pairs,      // every unordered pair of distinct nodes
    observed_ties,  // pairs joined by at least one directed edge
};

struct ReciprocityConfig {
    double tau = 0.5;
    double zeta = 1.0 / 3.0;
    double band_lo = 0.75;
    double band_hi = 1.25;
    PairScope scope = PairScope::all_pairs;

    void validate() const;
};

/// Fraction of the features {indegree, outdegree, category} on which the two
/// profiles agree. Count features agree when their ratio falls inside the
/// band (0/0 counts as agreement, x/0 does not); category by equality.
double feature_jaccard(const NodeProfile& a, const NodeProfile& b, const ReciprocityConfig& cfg);

/// Reciprocity likelihood for a given feature Jaccard value:
///   eps = 1 / (zeta * (1 + ln(J + zeta)))
///   phi = -ln(eps + J) * (eps + J)
///   p   = 1 / (1 + exp(phi))
/// Returns 0 where eps is undefined or non-positive (1 + ln(J + zeta) <= 0).
double reciprocity_from_jaccard(double jaccard, double zeta);

/// reciprocity_from_jaccard(feature_jaccard(a, b)). Symmetric in (a, b).
double reciprocity_prob(const NodeProfile& a, const NodeProfile& b, const ReciprocityConfig& cfg);

struct StructuralResult {
    std::vector<NodeId> nodes;             // row/column order of the matrices
    std::vector<NodePair> related;         // p >= tau, sorted
    std::vector<NodePair> unrelated;       // scored pairs with p < tau, sorted
    std::map<NodePair, double> prob;       // every scored pair
    DenseMatrix adjacency;                 // binary, p >= tau
    DenseMatrix degree;                    // diagonal, row sums of weighted ties
    DenseMatrix laplacian;                 // degree - weighted adjacency
    double tau = 0.5;

    /// p(R) for a pair, 0 when the pair was not scored.
    double probability(const NodeId& a, const NodeId& b) const;
    /// Nodes taking part in at least one related pair, sorted.
    std::vector<NodeId> related_nodes() const;
};

/// Scores node pairs, splits them at tau and builds the structural matrices.
/// Every node must carry a profile.
StructuralResult f_sim(const NetworkData& net, const ReciprocityConfig& cfg);

struct AccuracyReport {
    double accuracy = 0.0;  // |predicted ∩ truth| / |truth|
    double precision = 0.0;
    double f1 = 0.0;
    std::size_t true_positives = 0;
    std::size_t predicted = 0;
    std::size_t truth = 0;
};

/// Compares predicted related pairs with ground-truth reciprocal pairs.
/// Throws ValidationError("no ground truth") for an empty truth set.
AccuracyReport prediction_accuracy(const StructuralResult& result,
                                   const std::vector<NodePair>& truth);

}  // namespace mct
