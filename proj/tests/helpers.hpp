#pragma once

#include "mct/core.hpp"
#include "mct/ingest.hpp"

#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace testing {

using EdgeList = std::vector<std::pair<std::string, std::string>>;

inline std::vector<mct::Edge> to_edges(const EdgeList& list) {
    std::vector<mct::Edge> out;
    for (const auto& [a, b] : list) out.push_back({a, b});
    return out;
}

// Undirected graph (one directed edge per pair) with degree-derived profiles.
inline mct::NetworkData graph(const EdgeList& list, std::vector<std::string> extra = {}) {
    std::vector<std::string> nodes = std::move(extra);
    for (const auto& [a, b] : list) {
        nodes.push_back(a);
        nodes.push_back(b);
    }
    return mct::network_with_degree_profiles(nodes, to_edges(list));
}

inline mct::NodeProfile profile(const std::string& id, std::int64_t ind, std::int64_t out, bool verified) {
    return {id, ind, out, verified ? mct::Category::verified : mct::Category::unverified};
}

inline mct::Partition partition(std::vector<std::vector<std::string>> communities) {
    mct::Partition p;
    p.communities = std::move(communities);
    p.canonicalize();
    return p;
}

inline mct::NetworkData karate() {
    return mct::read_dataset({std::string(MCT_DATA_DIR) + "/karate/edges.tsv", std::nullopt, std::nullopt});
}

inline mct::Partition karate_truth() {
    return mct::read_partition(std::string(MCT_DATA_DIR) + "/karate/truth.json");
}

// Two triangles a-b-c and d-e-f joined by the bridge c-d.
inline EdgeList bridged_triangles() {
    return {{"a", "b"}, {"a", "c"}, {"b", "c"}, {"c", "d"}, {"d", "e"}, {"d", "f"}, {"e", "f"}};
}

inline EdgeList disjoint_triangles() {
    return {{"a", "b"}, {"a", "c"}, {"b", "c"}, {"d", "e"}, {"d", "f"}, {"e", "f"}};
}

// Nodes n00..n{count-1}; even nodes tweet from one vocabulary, odd nodes from a
// disjoint one. Node i posts tweets + i * extra_per_node tweets.
inline std::map<std::string, std::vector<std::string>> planted_corpora(int count, int tweets, unsigned seed,
                                                                       int extra_per_node = 0) {
    static const std::vector<std::string> fruit{"apple", "banana", "cherry", "grape", "lemon", "mango", "peach", "plum"};
    static const std::vector<std::string> motor{"engine", "piston", "turbo", "gearbox", "clutch", "exhaust", "brake", "axle"};
    std::mt19937 gen(seed);
    std::map<std::string, std::vector<std::string>> out;
    for (int i = 0; i < count; ++i) {
        const auto& vocab = i % 2 == 0 ? fruit : motor;
        std::string id = std::to_string(i);
        auto& list = out["n" + std::string(2 - std::min<std::size_t>(2, id.size()), '0') + id];
        for (int t = 0; t < tweets + i * extra_per_node; ++t) {
            std::string text;
            for (int w = 0; w < 6; ++w) text += vocab[gen() % vocab.size()] + " ";
            list.push_back(text);
        }
    }
    return out;
}

}  // namespace testing
