#pragma once

// Data-parallel inner loops. Each kernel has a serial reference in
// kernels::serial and an OpenMP version in kernels::parallel; the library calls
// the parallel one, the tests hold it to the serial one.

#include "mct/core.hpp"
#include "mct/reciprocity.hpp"

#include <span>
#include <vector>

namespace mct::kernels {

struct AdjEntry {
    std::size_t to;
    std::size_t edge;
};
/// Adjacency lists annotated with edge ids; an undirected edge appears in
/// both endpoint lists under the same id.
using EdgeAdjacency = std::vector<std::vector<AdjEntry>>;

namespace serial {

/// Symmetric n x n matrix of p(R) over all profile pairs, zero diagonal.
DenseMatrix pair_probabilities(std::span<const NodeProfile> profiles, const ReciprocityConfig& cfg);

/// Brandes edge betweenness on an unweighted undirected graph. Each unordered
/// source/target pair is counted once. Result indexed by edge id.
std::vector<double> edge_betweenness(const EdgeAdjacency& adj, std::size_t num_edge_ids);

/// Pairwise 1 - JS distance between the rows of `dists` (each a probability
/// vector). Unit diagonal.
DenseMatrix js_similarity(const DenseMatrix& dists);

}  // namespace serial

namespace parallel {

DenseMatrix pair_probabilities(std::span<const NodeProfile> profiles, const ReciprocityConfig& cfg);
std::vector<double> edge_betweenness(const EdgeAdjacency& adj, std::size_t num_edge_ids);
DenseMatrix js_similarity(const DenseMatrix& dists);

}  // namespace parallel

/// Number of OpenMP threads the parallel kernels would use (1 without OpenMP).
int max_threads();

}  // namespace mct::kernels
