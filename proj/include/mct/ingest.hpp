#pragma once

#include "mct/core.hpp"

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace mct {

/// Query surface for follow relations: friends(v) are the accounts v follows,
/// followers(v) the accounts following v. Answers must be deterministic.
class NetworkSource {
public:
    virtual ~NetworkSource() = default;
    virtual std::vector<NodeId> friends(const NodeId& v) const = 0;
    virtual std::vector<NodeId> followers(const NodeId& v) const = 0;
    virtual NodeProfile profile(const NodeId& v) const = 0;
    /// All node ids the source can answer for, sorted.
    virtual std::vector<NodeId> nodes() const = 0;
};

/// NetworkSource over a snapshot.json document:
///   {"users": {id: {"friends": [...], "followers": [...], "profile": {...}}}}
/// A missing profile falls back to the list sizes (indegree = followers).
class SnapshotSource : public NetworkSource {
public:
    static SnapshotSource from_file(const std::filesystem::path& path);
    static SnapshotSource from_json_text(const std::string& text);

    std::vector<NodeId> friends(const NodeId& v) const override;
    std::vector<NodeId> followers(const NodeId& v) const override;
    NodeProfile profile(const NodeId& v) const override;
    std::vector<NodeId> nodes() const override;

private:
    struct User {
        std::vector<NodeId> friends;
        std::vector<NodeId> followers;
        NodeProfile profile;
    };
    const User& user(const NodeId& v) const;
    std::map<NodeId, User> users_;
};

struct DyadResult {
    std::set<NodePair> dyads;   // mutual follows
    std::set<Edge> one_edge;    // unreciprocated follows src -> dst
};

/// For every seed v and every friend w of v, records {v, w} as a dyad when w
/// also follows v and (v, w) as a one-way edge otherwise.
DyadResult search_dyads(const NetworkSource& source, const std::vector<NodeId>& seeds);

/// Triads {a, b, c} (sorted) whose three pairs are all dyads.
std::vector<std::array<NodeId, 3>> transitive_triads(const std::set<NodePair>& dyads);

/// Network over every node of the source with edges v -> friend.
NetworkData snapshot_network(const NetworkSource& source);

struct LfrConfig {
    std::size_t n = 1000;
    double gamma = 2.0;               // degree exponent
    double mean_degree = 15.0;
    double community_exponent = 1.0;  // community size exponent
    std::size_t c_min = 30;
    std::size_t c_max = 300;
    double mu = 0.1;                  // mixing: share of a node's edges leaving its community
    std::size_t max_degree = 50;
    std::uint64_t seed = 42;
    int max_attempts = 100;

    void validate() const;
};

struct PpmConfig {
    std::size_t n = 100;
    std::size_t k = 4;
    double p_in = 0.3;
    double p_out = 0.01;
    std::uint64_t seed = 42;

    void validate() const;
};

struct GeneratedNetwork {
    NetworkData net;
    Partition truth;
};

/// LFR benchmark: power-law degrees, power-law community sizes, internal and
/// external stubs matched separately by configuration model with swap repair.
/// Throws ValidationError when no feasible assignment is found.
GeneratedNetwork generate_lfr(const LfrConfig& cfg);

/// Planted partition: node i joins group i mod k; each pair is linked with
/// p_in inside a group and p_out across groups.
GeneratedNetwork generate_ppm(const PpmConfig& cfg);

/// Node ids used by the generators: zero-padded decimal indices.
std::vector<NodeId> generated_ids(std::size_t n);

/// Profiles derived from graph structure alone: indegree = outdegree = degree
/// in the undirected projection; nodes whose degree exceeds the 90th
/// percentile are marked verified.
std::vector<NodeProfile> degree_profiles(const NetworkData& net);

/// Builds a network from undirected edges plus degree_profiles.
NetworkData network_with_degree_profiles(std::vector<NodeId> nodes, std::vector<Edge> edges);

// File formats ---------------------------------------------------------------

/// edges.tsv: `src<TAB>dst` per line, `#` comments and blank lines skipped.
std::vector<Edge> read_edges(const std::filesystem::path& path);
void write_edges(const std::vector<Edge>& edges, const std::filesystem::path& path);

/// profiles.json: [{"id", "indegree", "outdegree", "verified"}]
std::vector<NodeProfile> read_profiles(const std::filesystem::path& path);
void write_profiles(const NetworkData& net, const std::filesystem::path& path);

/// tweets.jsonl: {"node_id", "text"} per line.
std::map<NodeId, std::vector<std::string>> read_tweets(const std::filesystem::path& path);
void write_tweets(const NetworkData& net, const std::filesystem::path& path);

/// partition.json: {"algorithm", "params": {...}, "communities": [[...]]}
Partition read_partition(const std::filesystem::path& path);
void write_partition(const Partition& p, const std::filesystem::path& path);
std::string partition_to_json(const Partition& p);

struct DatasetPaths {
    std::filesystem::path edges;
    std::optional<std::filesystem::path> profiles;
    std::optional<std::filesystem::path> tweets;
};

/// Reads a dataset. Without a profiles file the nodes are the edge endpoints
/// and profiles come from degree_profiles().
NetworkData read_dataset(const DatasetPaths& paths);

/// Writes edges.tsv, profiles.json and (when corpora exist) tweets.jsonl.
void write_dataset(const NetworkData& net, const std::filesystem::path& dir);

}  // namespace mct
