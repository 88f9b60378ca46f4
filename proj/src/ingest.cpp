#include "mct/ingest.hpp"

#include "rng.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

namespace mct {

using json = nlohmann::json;

namespace {

std::string read_text(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write " + path.string());
    out << text;
}

json parse_json(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(what + ": " + e.what());
    }
}

// Ids may be written as strings or integers.
NodeId id_from_json(const json& j, const std::string& what) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    throw ValidationError(what + ": node id must be a string or integer");
}

std::int64_t count_from_json(const json& obj, const char* key, const std::string& what) {
    if (!obj.contains(key)) throw ValidationError(what + ": missing \"" + key + "\"");
    const auto& v = obj.at(key);
    if (!v.is_number_integer()) throw ValidationError(what + ": \"" + key + "\" must be an integer");
    return v.get<std::int64_t>();
}

NodeProfile profile_from_json(const NodeId& id, const json& obj, const std::string& what) {
    if (!obj.is_object()) throw ValidationError(what + ": profile must be an object");
    NodeProfile p;
    p.id = id;
    p.indegree = count_from_json(obj, "indegree", what);
    p.outdegree = count_from_json(obj, "outdegree", what);
    if (p.indegree < 0 || p.outdegree < 0) throw ValidationError(what + ": negative degree");
    if (obj.contains("verified")) {
        if (!obj.at("verified").is_boolean()) throw ValidationError(what + ": \"verified\" must be a boolean");
        p.category = obj.at("verified").get<bool>() ? Category::verified : Category::unverified;
    }
    return p;
}

std::vector<NodeId> id_list(const json& j, const std::string& what) {
    if (!j.is_array()) throw ValidationError(what + " must be an array");
    std::vector<NodeId> out;
    for (const auto& x : j) out.push_back(id_from_json(x, what));
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Snapshot source

SnapshotSource SnapshotSource::from_file(const std::filesystem::path& path) {
    return from_json_text(read_text(path));
}

SnapshotSource SnapshotSource::from_json_text(const std::string& text) {
    const json doc = parse_json(text, "snapshot");
    if (!doc.is_object() || !doc.contains("users") || !doc.at("users").is_object())
        throw ValidationError("snapshot: expected an object with a \"users\" map");
    SnapshotSource s;
    for (const auto& [id, u] : doc.at("users").items()) {
        const std::string what = "snapshot user " + id;
        if (!u.is_object()) throw ValidationError(what + ": entry must be an object");
        User user;
        user.friends = u.contains("friends") ? id_list(u.at("friends"), what + " friends") : std::vector<NodeId>{};
        user.followers =
            u.contains("followers") ? id_list(u.at("followers"), what + " followers") : std::vector<NodeId>{};
        if (u.contains("profile")) {
            user.profile = profile_from_json(id, u.at("profile"), what);
        } else {
            user.profile.id = id;
            user.profile.indegree = static_cast<std::int64_t>(user.followers.size());
            user.profile.outdegree = static_cast<std::int64_t>(user.friends.size());
        }
        s.users_.emplace(id, std::move(user));
    }
    return s;
}

const SnapshotSource::User& SnapshotSource::user(const NodeId& v) const {
    auto it = users_.find(v);
    if (it == users_.end()) throw ValidationError("unknown node " + v);
    return it->second;
}

std::vector<NodeId> SnapshotSource::friends(const NodeId& v) const { return user(v).friends; }
std::vector<NodeId> SnapshotSource::followers(const NodeId& v) const { return user(v).followers; }
NodeProfile SnapshotSource::profile(const NodeId& v) const { return user(v).profile; }

std::vector<NodeId> SnapshotSource::nodes() const {
    std::vector<NodeId> out;
    for (const auto& [id, _] : users_) out.push_back(id);
    return out;
}

// ---------------------------------------------------------------------------
// Dyads and triads

namespace {

std::vector<NodeId> query_friends(const NetworkSource& source, const NodeId& v) {
    try {
        return source.friends(v);
    } catch (const ValidationError&) {
        throw;
    } catch (const std::exception& e) {
        throw std::runtime_error("friends query for " + v + " failed: " + e.what());
    }
}

}  // namespace

DyadResult search_dyads(const NetworkSource& source, const std::vector<NodeId>& seeds) {
    if (seeds.empty()) throw ValidationError("no seed nodes");
    DyadResult r;
    for (const auto& vi : seeds) {
        for (const auto& vj : query_friends(source, vi)) {
            if (vj == vi) continue;
            const auto back = query_friends(source, vj);
            if (std::find(back.begin(), back.end(), vi) != back.end())
                r.dyads.insert(make_pair_sorted(vi, vj));
            else
                r.one_edge.insert(Edge{vi, vj});
        }
    }
    return r;
}

std::vector<std::array<NodeId, 3>> transitive_triads(const std::set<NodePair>& dyads) {
    std::map<NodeId, std::set<NodeId>> nb;
    for (const auto& [a, b] : dyads) {
        nb[a].insert(b);
        nb[b].insert(a);
    }
    std::vector<std::array<NodeId, 3>> out;
    for (const auto& [a, b] : dyads) {
        // a < b; extend with every common neighbour c > b
        const auto& na = nb[a];
        for (auto it = nb[b].upper_bound(b); it != nb[b].end(); ++it)
            if (na.count(*it)) out.push_back({a, b, *it});
    }
    std::sort(out.begin(), out.end());
    return out;
}

NetworkData snapshot_network(const NetworkSource& source) {
    std::vector<NodeProfile> profiles;
    std::vector<Edge> edges;
    for (const auto& v : source.nodes()) {
        profiles.push_back(source.profile(v));
        for (const auto& f : query_friends(source, v))
            if (f != v) edges.push_back({v, f});
    }
    return build_network(std::move(profiles), std::move(edges));
}

// ---------------------------------------------------------------------------
// Generators

void LfrConfig::validate() const {
    if (n < 2) throw ValidationError("LFR needs at least 2 nodes");
    if (!(gamma > 1.0)) throw ValidationError("LFR degree exponent gamma must exceed 1");
    if (!(mu >= 0.0 && mu <= 1.0)) throw ValidationError("LFR mixing mu must lie in [0, 1]");
    if (c_min < 2 || c_min > c_max || c_max > n)
        throw ValidationError("LFR community sizes need 2 <= c_min <= c_max <= n");
    if (max_degree < 1 || max_degree >= n) throw ValidationError("LFR max_degree must lie in [1, n)");
    if (!(mean_degree >= 1.0 && mean_degree <= static_cast<double>(max_degree)))
        throw ValidationError("LFR mean_degree must lie in [1, max_degree]");
    if (max_attempts < 1) throw ValidationError("LFR max_attempts must be at least 1");
}

void PpmConfig::validate() const {
    if (k == 0 || k > n) throw ValidationError("PPM needs 1 <= k <= n");
    if (!(0.0 <= p_out && p_out <= p_in && p_in <= 1.0))
        throw ValidationError("PPM needs 0 <= p_out <= p_in <= 1");
}

std::vector<NodeId> generated_ids(std::size_t n) {
    const std::size_t width = std::to_string(n == 0 ? 0 : n - 1).size();
    std::vector<NodeId> ids;
    ids.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::string s = std::to_string(i);
        ids.push_back(std::string(width - s.size(), '0') + s);
    }
    return ids;
}

std::vector<NodeProfile> degree_profiles(const NetworkData& net) {
    const auto g = undirected_graph(net);
    const std::size_t n = g.num_nodes();
    std::vector<std::size_t> sorted(n);
    for (std::size_t v = 0; v < n; ++v) sorted[v] = g.degree(v);
    std::sort(sorted.begin(), sorted.end());
    // nearest-rank 90th percentile
    const std::size_t rank = n == 0 ? 0 : (9 * n + 9) / 10;
    const std::size_t cut = n == 0 ? 0 : sorted[std::min(n, std::max<std::size_t>(rank, 1)) - 1];
    std::vector<NodeProfile> out;
    out.reserve(n);
    for (std::size_t v = 0; v < n; ++v) {
        NodeProfile p;
        p.id = g.ids[v];
        p.indegree = p.outdegree = static_cast<std::int64_t>(g.degree(v));
        p.category = g.degree(v) > cut ? Category::verified : Category::unverified;
        out.push_back(std::move(p));
    }
    return out;
}

NetworkData network_with_degree_profiles(std::vector<NodeId> nodes, std::vector<Edge> edges) {
    const NetworkData bare = build_network({}, edges, {}, std::move(nodes));
    return with_profiles(bare, degree_profiles(bare));
}

namespace {

// Inverse-CDF draw from x^-exponent on [lo, hi].
double power_law_draw(double exponent, double lo, double hi, Rng& rng) {
    const double u = rng.uniform();
    if (std::abs(exponent - 1.0) < 1e-12) return lo * std::pow(hi / lo, u);
    const double a = std::pow(lo, 1.0 - exponent);
    const double b = std::pow(hi, 1.0 - exponent);
    return std::pow(a + u * (b - a), 1.0 / (1.0 - exponent));
}

double power_law_mean(double exponent, double lo, double hi) {
    auto integral = [](double p, double lo_, double hi_) {
        if (std::abs(p + 1.0) < 1e-12) return std::log(hi_ / lo_);
        return (std::pow(hi_, p + 1.0) - std::pow(lo_, p + 1.0)) / (p + 1.0);
    };
    return integral(1.0 - exponent, lo, hi) / integral(-exponent, lo, hi);
}

// Lower cutoff giving the requested mean under x^-gamma on [lo, hi].
double solve_min_degree(double gamma, double mean, double hi) {
    double lo = 1.0, up = hi;
    if (power_law_mean(gamma, lo, hi) > mean) throw ValidationError("LFR mean_degree too small for gamma");
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + up);
        if (power_law_mean(gamma, mid, hi) < mean) lo = mid;
        else up = mid;
    }
    return 0.5 * (lo + up);
}

std::uint64_t pair_key(std::size_t u, std::size_t v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint64_t>(v);
}

struct EdgePool {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::set<std::uint64_t> keys;

    bool has(std::size_t u, std::size_t v) const { return keys.count(pair_key(u, v)) != 0; }
    void add(std::size_t u, std::size_t v) {
        edges.emplace_back(u, v);
        keys.insert(pair_key(u, v));
    }
    void remove_at(std::size_t i) {
        keys.erase(pair_key(edges[i].first, edges[i].second));
        edges[i] = edges.back();
        edges.pop_back();
    }
};

// Configuration-model matching of `stubs` into `pool`. Pairs that would form
// self-loops, duplicates or disallowed links are repaired by swapping
// endpoints with an accepted edge of this round; hopeless ones are dropped.
template <typename Allowed>
void match_stubs(std::vector<std::size_t> stubs, EdgePool& pool, Rng& rng, Allowed allowed) {
    rng.shuffle(stubs);
    const std::size_t first = pool.edges.size();
    std::vector<std::pair<std::size_t, std::size_t>> bad;
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
        const std::size_t u = stubs[i], v = stubs[i + 1];
        if (u != v && allowed(u, v) && !pool.has(u, v)) pool.add(u, v);
        else bad.emplace_back(u, v);
    }
    auto ok = [&](std::size_t a, std::size_t b) { return a != b && allowed(a, b) && !pool.has(a, b); };
    for (auto [u, v] : bad) {
        for (int attempt = 0; attempt < 100; ++attempt) {
            const std::size_t span = pool.edges.size() - first;
            if (span == 0) break;
            const std::size_t idx = first + rng.below(span);
            auto [x, y] = pool.edges[idx];
            if (rng.bernoulli(0.5)) std::swap(x, y);
            if (!ok(u, x) || !ok(v, y) || pair_key(u, x) == pair_key(v, y)) continue;
            pool.remove_at(idx);
            pool.add(u, x);
            pool.add(v, y);
            break;
        }
    }
}

std::optional<std::vector<std::size_t>> community_sizes(const LfrConfig& cfg, Rng& rng) {
    std::vector<std::size_t> sizes;
    std::size_t total = 0;
    while (total < cfg.n) {
        const double x = power_law_draw(cfg.community_exponent, static_cast<double>(cfg.c_min),
                                        static_cast<double>(cfg.c_max) + 1.0, rng);
        const auto s = std::clamp<std::size_t>(static_cast<std::size_t>(x), cfg.c_min, cfg.c_max);
        sizes.push_back(s);
        total += s;
    }
    std::size_t cursor = 0;
    while (total > cfg.n) {
        bool shrunk = false;
        for (std::size_t step = 0; step < sizes.size() && !shrunk; ++step) {
            auto& s = sizes[(cursor + step) % sizes.size()];
            if (s > cfg.c_min) {
                --s;
                --total;
                shrunk = true;
                cursor = (cursor + step + 1) % sizes.size();
            }
        }
        if (!shrunk) {
            total -= sizes.back();
            sizes.pop_back();
            if (sizes.empty()) return std::nullopt;
        }
    }
    cursor = 0;
    while (total < cfg.n) {
        bool grown = false;
        for (std::size_t step = 0; step < sizes.size() && !grown; ++step) {
            auto& s = sizes[(cursor + step) % sizes.size()];
            if (s < cfg.c_max) {
                ++s;
                ++total;
                grown = true;
                cursor = (cursor + step + 1) % sizes.size();
            }
        }
        if (!grown) return std::nullopt;
    }
    return sizes;
}

std::optional<GeneratedNetwork> lfr_attempt(const LfrConfig& cfg, const std::vector<std::size_t>& degree,
                                            Rng& rng) {
    const std::size_t n = cfg.n;
    auto sizes = community_sizes(cfg, rng);
    if (!sizes) return std::nullopt;
    const std::size_t k = sizes->size();

    std::vector<std::size_t> k_in(n), k_ext(n);
    for (std::size_t v = 0; v < n; ++v) {
        k_in[v] = static_cast<std::size_t>(std::llround((1.0 - cfg.mu) * static_cast<double>(degree[v])));
        k_ext[v] = degree[v] - k_in[v];
    }

    // Place nodes with the largest internal degree first.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return k_in[a] > k_in[b]; });
    std::vector<std::size_t> free_slots = *sizes;
    std::vector<std::size_t> member(n);
    for (std::size_t v : order) {
        std::size_t total = 0;
        for (std::size_t c = 0; c < k; ++c)
            if (free_slots[c] > 0 && (*sizes)[c] - 1 >= k_in[v]) total += free_slots[c];
        if (total == 0) return std::nullopt;
        std::size_t pick = rng.below(total);
        for (std::size_t c = 0; c < k; ++c) {
            if (free_slots[c] == 0 || (*sizes)[c] - 1 < k_in[v]) continue;
            if (pick < free_slots[c]) {
                member[v] = c;
                --free_slots[c];
                break;
            }
            pick -= free_slots[c];
        }
    }

    std::vector<std::vector<std::size_t>> groups(k);
    for (std::size_t v = 0; v < n; ++v) groups[member[v]].push_back(v);

    // Each community needs an even number of internal stubs; an odd one out
    // is dropped.
    for (auto& grp : groups) {
        std::size_t sum = 0;
        for (std::size_t v : grp) sum += k_in[v];
        if (sum % 2 == 1) {
            std::size_t best = grp.front();
            for (std::size_t v : grp)
                if (k_in[v] > k_in[best]) best = v;
            --k_in[best];
        }
    }
    std::size_t ext_sum = 0;
    for (std::size_t v = 0; v < n; ++v) ext_sum += k_ext[v];
    if (ext_sum % 2 == 1) {
        std::size_t best = 0;
        for (std::size_t v = 0; v < n; ++v)
            if (k_ext[v] > k_ext[best]) best = v;
        --k_ext[best];
    }

    EdgePool pool;
    for (const auto& grp : groups) {
        std::vector<std::size_t> stubs;
        for (std::size_t v : grp) stubs.insert(stubs.end(), k_in[v], v);
        match_stubs(std::move(stubs), pool, rng, [](std::size_t, std::size_t) { return true; });
    }
    std::vector<std::size_t> stubs;
    for (std::size_t v = 0; v < n; ++v) stubs.insert(stubs.end(), k_ext[v], v);
    match_stubs(std::move(stubs), pool, rng, [&](std::size_t a, std::size_t b) { return member[a] != member[b]; });

    const auto ids = generated_ids(n);
    std::sort(pool.edges.begin(), pool.edges.end(), [](auto a, auto b) {
        return std::minmax(a.first, a.second) < std::minmax(b.first, b.second);
    });
    std::vector<Edge> edges;
    edges.reserve(pool.edges.size());
    for (auto [u, v] : pool.edges) edges.push_back({ids[std::min(u, v)], ids[std::max(u, v)]});

    GeneratedNetwork out;
    out.net = network_with_degree_profiles(ids, std::move(edges));
    out.truth = partition_from_labels(ids, member, "lfr_truth");
    return out;
}

}  // namespace

GeneratedNetwork generate_lfr(const LfrConfig& cfg) {
    cfg.validate();
    Rng rng(cfg.seed);
    const double hi = static_cast<double>(cfg.max_degree);
    const double lo = solve_min_degree(cfg.gamma, cfg.mean_degree, hi);
    for (int attempt = 0; attempt < cfg.max_attempts; ++attempt) {
        std::vector<std::size_t> degree(cfg.n);
        for (auto& d : degree) {
            const double x = power_law_draw(cfg.gamma, lo, hi, rng);
            d = std::clamp<std::size_t>(static_cast<std::size_t>(std::llround(x)), 1, cfg.max_degree);
        }
        if (auto res = lfr_attempt(cfg, degree, rng)) {
            res->truth.params = {{"n", std::to_string(cfg.n)},
                                 {"mu", std::to_string(cfg.mu)},
                                 {"seed", std::to_string(cfg.seed)}};
            return std::move(*res);
        }
    }
    throw ValidationError("LFR generation failed: no feasible community assignment after " +
                          std::to_string(cfg.max_attempts) + " attempts");
}

GeneratedNetwork generate_ppm(const PpmConfig& cfg) {
    cfg.validate();
    Rng rng(cfg.seed);
    const auto ids = generated_ids(cfg.n);
    std::vector<std::size_t> group(cfg.n);
    for (std::size_t i = 0; i < cfg.n; ++i) group[i] = i % cfg.k;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < cfg.n; ++i)
        for (std::size_t j = i + 1; j < cfg.n; ++j)
            if (rng.bernoulli(group[i] == group[j] ? cfg.p_in : cfg.p_out)) edges.push_back({ids[i], ids[j]});
    GeneratedNetwork out;
    out.net = network_with_degree_profiles(ids, std::move(edges));
    out.truth = partition_from_labels(ids, group, "ppm_truth",
                                      {{"k", std::to_string(cfg.k)}, {"seed", std::to_string(cfg.seed)}});
    return out;
}

// ---------------------------------------------------------------------------
// Files

std::vector<Edge> read_edges(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path.string());
    std::vector<Edge> edges;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto start = line.find_first_not_of(" \t");
        if (start == std::string::npos || line[start] == '#') continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos)
            throw ValidationError(path.string() + " line " + std::to_string(lineno) +
                                  ": expected src<TAB>dst");
        Edge e{line.substr(0, tab), line.substr(tab + 1)};
        if (e.src.empty() || e.dst.empty())
            throw ValidationError(path.string() + " line " + std::to_string(lineno) + ": empty node id");
        edges.push_back(std::move(e));
    }
    return edges;
}

void write_edges(const std::vector<Edge>& edges, const std::filesystem::path& path) {
    std::string text;
    for (const auto& e : edges) text += e.src + "\t" + e.dst + "\n";
    write_text(path, text);
}

std::vector<NodeProfile> read_profiles(const std::filesystem::path& path) {
    const json doc = parse_json(read_text(path), path.string());
    if (!doc.is_array()) throw ValidationError(path.string() + ": expected an array of profiles");
    std::vector<NodeProfile> out;
    std::size_t i = 0;
    for (const auto& obj : doc) {
        const std::string what = path.string() + " entry " + std::to_string(i++);
        if (!obj.is_object() || !obj.contains("id")) throw ValidationError(what + ": missing \"id\"");
        out.push_back(profile_from_json(id_from_json(obj.at("id"), what), obj, what));
    }
    return out;
}

void write_profiles(const NetworkData& net, const std::filesystem::path& path) {
    json doc = json::array();
    for (const auto& [id, p] : net.profiles())
        doc.push_back({{"id", id},
                       {"indegree", p.indegree},
                       {"outdegree", p.outdegree},
                       {"verified", p.category == Category::verified}});
    write_text(path, doc.dump(2) + "\n");
}

std::map<NodeId, std::vector<std::string>> read_tweets(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path.string());
    std::map<NodeId, std::vector<std::string>> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const std::string what = path.string() + " line " + std::to_string(lineno);
        const json obj = parse_json(line, what);
        if (!obj.is_object() || !obj.contains("node_id") || !obj.contains("text") || !obj.at("text").is_string())
            throw ValidationError(what + ": expected {\"node_id\", \"text\"}");
        out[id_from_json(obj.at("node_id"), what)].push_back(obj.at("text").get<std::string>());
    }
    return out;
}

void write_tweets(const NetworkData& net, const std::filesystem::path& path) {
    std::string text;
    for (const auto& [id, tweets] : net.corpora())
        for (const auto& t : tweets) text += json{{"node_id", id}, {"text", t}}.dump() + "\n";
    write_text(path, text);
}

std::string partition_to_json(const Partition& p) {
    json params = json::object();
    for (const auto& [k, v] : p.params) params[k] = v;
    json doc = {{"algorithm", p.algorithm}, {"params", params}, {"communities", p.communities}};
    return doc.dump(2) + "\n";
}

Partition read_partition(const std::filesystem::path& path) {
    const json doc = parse_json(read_text(path), path.string());
    if (!doc.is_object() || !doc.contains("communities") || !doc.at("communities").is_array())
        throw ValidationError(path.string() + ": expected {\"communities\": [[...]]}");
    Partition p;
    if (doc.contains("algorithm") && doc.at("algorithm").is_string()) p.algorithm = doc.at("algorithm");
    if (doc.contains("params") && doc.at("params").is_object())
        for (const auto& [k, v] : doc.at("params").items()) p.params[k] = v.is_string() ? v.get<std::string>() : v.dump();
    for (const auto& c : doc.at("communities")) p.communities.push_back(id_list(c, path.string() + " community"));
    std::vector<NodeId> all;
    for (const auto& c : p.communities) all.insert(all.end(), c.begin(), c.end());
    validate_partition(p, [&] {
        std::sort(all.begin(), all.end());
        all.erase(std::unique(all.begin(), all.end()), all.end());
        return all;
    }());
    p.canonicalize();
    return p;
}

void write_partition(const Partition& p, const std::filesystem::path& path) {
    Partition c = p;
    c.canonicalize();
    write_text(path, partition_to_json(c));
}

NetworkData read_dataset(const DatasetPaths& paths) {
    auto edges = read_edges(paths.edges);
    std::map<NodeId, std::vector<std::string>> corpora;
    if (paths.tweets) corpora = read_tweets(*paths.tweets);
    if (paths.profiles) return build_network(read_profiles(*paths.profiles), std::move(edges), std::move(corpora));

    std::vector<NodeId> nodes;
    for (const auto& e : edges) {
        nodes.push_back(e.src);
        nodes.push_back(e.dst);
    }
    for (const auto& [id, _] : corpora) nodes.push_back(id);
    NetworkData net = network_with_degree_profiles(std::move(nodes), std::move(edges));
    if (corpora.empty()) return net;
    std::vector<NodeProfile> profiles;
    for (const auto& [_, p] : net.profiles()) profiles.push_back(p);
    return build_network(std::move(profiles), net.edges(), std::move(corpora));
}

void write_dataset(const NetworkData& net, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    write_edges(net.edges(), dir / "edges.tsv");
    write_profiles(net, dir / "profiles.json");
    if (net.has_corpora()) write_tweets(net, dir / "tweets.jsonl");
}

}  // namespace mct
