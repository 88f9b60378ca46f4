#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace mct {

using NodeId = std::string;

/// Raised for malformed or inconsistent input data.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Category { unverified, verified };

struct NodeProfile {
    NodeId id;
    std::int64_t indegree = 0;
    std::int64_t outdegree = 0;
    Category category = Category::unverified;

    bool operator==(const NodeProfile&) const = default;
};

/// Directed edge src -> dst.
struct Edge {
    NodeId src;
    NodeId dst;

    auto operator<=>(const Edge&) const = default;
};

/// Unordered pair stored with first < second.
using NodePair = std::pair<NodeId, NodeId>;

NodePair make_pair_sorted(const NodeId& a, const NodeId& b);

/// Immutable network: sorted node ids, deduplicated directed edges, optional
/// profiles and per-node text corpora. Build through build_network().
class NetworkData {
public:
    NetworkData() = default;

    const std::vector<NodeId>& nodes() const { return nodes_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t size() const { return nodes_.size(); }

    bool contains(const NodeId& id) const { return index_.count(id) != 0; }
    /// Position of `id` in nodes(); throws ValidationError for unknown ids.
    std::size_t index_of(const NodeId& id) const;

    bool has_profiles() const { return !profiles_.empty(); }
    bool has_corpora() const { return !corpora_.empty(); }
    const std::map<NodeId, NodeProfile>& profiles() const { return profiles_; }
    const std::map<NodeId, std::vector<std::string>>& corpora() const { return corpora_; }
    /// Throws ValidationError naming the node when no profile exists.
    const NodeProfile& profile(const NodeId& id) const;
    bool has_edge(const NodeId& src, const NodeId& dst) const;

private:
    friend NetworkData build_network(std::vector<NodeProfile>, std::vector<Edge>,
                                     std::map<NodeId, std::vector<std::string>>,
                                     std::vector<NodeId>);

    std::vector<NodeId> nodes_;
    std::unordered_map<NodeId, std::size_t> index_;
    std::vector<Edge> edges_;
    std::map<NodeId, NodeProfile> profiles_;
    std::map<NodeId, std::vector<std::string>> corpora_;
};

/// Validates and assembles a network. The node set is the union of profiled
/// ids and `extra_nodes`; every edge endpoint must be in it. Duplicate edges
/// collapse, self-loops are rejected. Corpora keys must be known nodes.
NetworkData build_network(std::vector<NodeProfile> profiles, std::vector<Edge> edges,
                          std::map<NodeId, std::vector<std::string>> corpora = {},
                          std::vector<NodeId> extra_nodes = {});

/// Copy of `net` with profiles replaced.
NetworkData with_profiles(const NetworkData& net, std::vector<NodeProfile> profiles);

struct UndirectedView {
    std::vector<NodePair> reciprocal;  // sorted
    std::vector<Edge> one_edge;        // sorted
};

/// Splits directed edges into mutual pairs and unreciprocated edges.
UndirectedView undirected_view(const NetworkData& net);

/// Index-based simple undirected graph: the symmetric projection of a network
/// (an edge exists if either direction does). Used by the baselines and metrics.
struct UndirectedGraph {
    std::vector<NodeId> ids;
    std::vector<std::vector<std::size_t>> adj;           // sorted neighbour lists
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // u < v, sorted

    std::size_t num_nodes() const { return ids.size(); }
    std::size_t num_edges() const { return edges.size(); }
    std::size_t degree(std::size_t v) const { return adj[v].size(); }
};

UndirectedGraph undirected_graph(const NetworkData& net);

/// A set of disjoint, non-empty communities plus the run that produced it.
struct Partition {
    std::vector<std::vector<NodeId>> communities;
    std::string algorithm;
    std::map<std::string, std::string> params;

    std::size_t size() const { return communities.size(); }
    /// Sorts members, drops empty communities and orders communities by their
    /// smallest member.
    void canonicalize();
    /// node -> community index
    std::unordered_map<NodeId, std::size_t> membership() const;
    std::size_t num_assigned() const;
};

/// Throws ValidationError on empty or overlapping communities, or members
/// missing from `nodes`.
void validate_partition(const Partition& p, const std::vector<NodeId>& nodes);

/// Builds a canonical partition from a dense label vector over `ids`.
Partition partition_from_labels(const std::vector<NodeId>& ids,
                                const std::vector<std::size_t>& labels,
                                std::string algorithm = {},
                                std::map<std::string, std::string> params = {});

/// Label vector aligned with `ids`; nodes missing from the partition each get a
/// fresh singleton label.
std::vector<std::size_t> labels_for(const Partition& p, const std::vector<NodeId>& ids);

/// Row-major dense matrix with optional row/column labels. The numeric
/// exchange type between modules.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0);
    static DenseMatrix from_eigen(const Eigen::MatrixXd& m);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    const std::vector<double>& data() const { return data_; }

    Eigen::MatrixXd to_eigen() const;
    bool all_finite() const;
    bool is_symmetric(double tol) const;

    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

}  // namespace mct
