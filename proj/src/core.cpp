#include "mct/core.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_set>

namespace mct {

NodePair make_pair_sorted(const NodeId& a, const NodeId& b) {
    return a < b ? NodePair{a, b} : NodePair{b, a};
}

std::size_t NetworkData::index_of(const NodeId& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw ValidationError("unknown node " + id);
    return it->second;
}

const NodeProfile& NetworkData::profile(const NodeId& id) const {
    auto it = profiles_.find(id);
    if (it == profiles_.end()) throw ValidationError("missing profile for node " + id);
    return it->second;
}

bool NetworkData::has_edge(const NodeId& src, const NodeId& dst) const {
    return std::binary_search(edges_.begin(), edges_.end(), Edge{src, dst});
}

NetworkData build_network(std::vector<NodeProfile> profiles, std::vector<Edge> edges,
                          std::map<NodeId, std::vector<std::string>> corpora,
                          std::vector<NodeId> extra_nodes) {
    NetworkData net;
    std::set<NodeId> node_set(extra_nodes.begin(), extra_nodes.end());
    for (auto& p : profiles) {
        if (p.indegree < 0 || p.outdegree < 0)
            throw ValidationError("negative degree in profile of node " + p.id);
        if (!net.profiles_.emplace(p.id, p).second)
            throw ValidationError("duplicate profile for node " + p.id);
        node_set.insert(p.id);
    }
    for (const auto& e : edges) {
        if (e.src == e.dst) throw ValidationError("self-loop on node " + e.src);
        if (!node_set.count(e.src)) throw ValidationError("unknown endpoint " + e.src);
        if (!node_set.count(e.dst)) throw ValidationError("unknown endpoint " + e.dst);
    }
    for (const auto& [id, texts] : corpora) {
        if (!node_set.count(id)) throw ValidationError("corpus for unknown node " + id);
    }
    net.nodes_.assign(node_set.begin(), node_set.end());
    for (std::size_t i = 0; i < net.nodes_.size(); ++i) net.index_.emplace(net.nodes_[i], i);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    net.edges_ = std::move(edges);
    net.corpora_ = std::move(corpora);
    return net;
}

NetworkData with_profiles(const NetworkData& net, std::vector<NodeProfile> profiles) {
    return build_network(std::move(profiles), net.edges(), net.corpora(), net.nodes());
}

UndirectedView undirected_view(const NetworkData& net) {
    UndirectedView view;
    for (const auto& e : net.edges()) {
        if (net.has_edge(e.dst, e.src)) {
            if (e.src < e.dst) view.reciprocal.emplace_back(e.src, e.dst);
        } else {
            view.one_edge.push_back(e);
        }
    }
    // edges() is sorted by (src, dst) and we only keep src < dst, so the
    // reciprocal list comes out sorted already.
    return view;
}

UndirectedGraph undirected_graph(const NetworkData& net) {
    UndirectedGraph g;
    g.ids = net.nodes();
    g.adj.resize(g.ids.size());
    std::set<std::pair<std::size_t, std::size_t>> pairs;
    for (const auto& e : net.edges()) {
        std::size_t u = net.index_of(e.src), v = net.index_of(e.dst);
        if (u > v) std::swap(u, v);
        pairs.emplace(u, v);
    }
    g.edges.assign(pairs.begin(), pairs.end());
    for (auto [u, v] : g.edges) {
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& a : g.adj) std::sort(a.begin(), a.end());
    return g;
}

void Partition::canonicalize() {
    for (auto& c : communities) std::sort(c.begin(), c.end());
    communities.erase(std::remove_if(communities.begin(), communities.end(),
                                     [](const auto& c) { return c.empty(); }),
                      communities.end());
    std::sort(communities.begin(), communities.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

std::unordered_map<NodeId, std::size_t> Partition::membership() const {
    std::unordered_map<NodeId, std::size_t> m;
    for (std::size_t c = 0; c < communities.size(); ++c)
        for (const auto& v : communities[c]) m.emplace(v, c);
    return m;
}

std::size_t Partition::num_assigned() const {
    std::size_t n = 0;
    for (const auto& c : communities) n += c.size();
    return n;
}

void validate_partition(const Partition& p, const std::vector<NodeId>& nodes) {
    std::unordered_set<NodeId> universe(nodes.begin(), nodes.end());
    std::unordered_set<NodeId> seen;
    for (const auto& c : p.communities) {
        if (c.empty()) throw ValidationError("empty community in partition");
        for (const auto& v : c) {
            if (!universe.count(v)) throw ValidationError("partition member " + v + " not in network");
            if (!seen.insert(v).second) throw ValidationError("node " + v + " in two communities");
        }
    }
}

Partition partition_from_labels(const std::vector<NodeId>& ids,
                                const std::vector<std::size_t>& labels, std::string algorithm,
                                std::map<std::string, std::string> params) {
    std::map<std::size_t, std::vector<NodeId>> groups;
    for (std::size_t i = 0; i < ids.size(); ++i) groups[labels[i]].push_back(ids[i]);
    Partition p;
    p.algorithm = std::move(algorithm);
    p.params = std::move(params);
    for (auto& [label, members] : groups) p.communities.push_back(std::move(members));
    p.canonicalize();
    return p;
}

std::vector<std::size_t> labels_for(const Partition& p, const std::vector<NodeId>& ids) {
    auto m = p.membership();
    std::vector<std::size_t> labels(ids.size());
    std::size_t next = p.communities.size();
    for (std::size_t i = 0; i < ids.size(); ++i) {
        auto it = m.find(ids[i]);
        labels[i] = it == m.end() ? next++ : it->second;
    }
    return labels;
}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

DenseMatrix DenseMatrix::from_eigen(const Eigen::MatrixXd& m) {
    DenseMatrix out(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            out(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = m(i, j);
    return out;
}

Eigen::MatrixXd DenseMatrix::to_eigen() const {
    Eigen::MatrixXd m(static_cast<Eigen::Index>(rows_), static_cast<Eigen::Index>(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = (*this)(i, j);
    return m;
}

bool DenseMatrix::all_finite() const {
    return std::all_of(data_.begin(), data_.end(), [](double x) { return std::isfinite(x); });
}

bool DenseMatrix::is_symmetric(double tol) const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (std::abs((*this)(i, j) - (*this)(j, i)) > tol) return false;
    return true;
}

}  // namespace mct
