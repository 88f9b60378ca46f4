#include "mct/mct.hpp"

#include "mct/metrics.hpp"
#include "rng.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <set>

namespace mct {

void MctConfig::validate() const {
    if (!(tau > 0.0 && tau < 1.0)) throw ValidationError("tau must lie in (0, 1)");
    if (!(lambda > 0.0 && lambda < 1.0)) throw ValidationError("lambda must lie in (0, 1)");
    for (double l : lambda_grid)
        if (!(l > 0.0 && l < 1.0)) throw ValidationError("lambda grid values must lie in (0, 1)");
    if (max_clusters < 1) throw ValidationError("cluster count M must be at least 1");
    if (max_iters < 1) throw ValidationError("max_iters must be at least 1");
    if (seeds_per_round < 1) throw ValidationError("seeds_per_round must be at least 1");
}

Modalities compute_modalities(const NetworkData& net, const MctConfig& cfg, ReciprocityConfig recip,
                              TextConfig text) {
    cfg.validate();
    recip.tau = cfg.tau;
    text.tau = cfg.tau;
    Modalities mods;
    mods.structural = f_sim(net, recip);
    if (cfg.mode == MctMode::joint) {
        if (!net.has_corpora()) throw ValidationError("corpora required unless --structural-only");
        mods.textual = text_sim(mods.structural.related_nodes(), net, text);
    }
    return mods;
}

double joint_similarity(const NodeId& i, const NodeId& j, const StructuralResult& structural,
                        const TextualResult* textual, double lambda) {
    const bool in_s = std::binary_search(structural.nodes.begin(), structural.nodes.end(), i) &&
                      std::binary_search(structural.nodes.begin(), structural.nodes.end(), j);
    const bool in_t = textual && textual->covers(i) && textual->covers(j);
    if (!in_s && !in_t) throw ValidationError("no similarity known for pair " + i + ", " + j);
    const double s = structural.probability(i, j);
    if (!textual) return s;
    return lambda * s + (1.0 - lambda) * textual->similarity(i, j);
}

namespace {

// Union-find over positions.
struct Dsu {
    std::vector<std::size_t> parent;
    explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

// Greedy clique cover of one component: each unplaced node, in order, opens a
// clique and pulls in later nodes adjacent to every member.
std::vector<std::vector<std::size_t>> clique_cover(const std::vector<std::size_t>& members,
                                                   const std::set<std::pair<std::size_t, std::size_t>>& edges) {
    auto linked = [&](std::size_t a, std::size_t b) { return edges.count({std::min(a, b), std::max(a, b)}) != 0; };
    std::vector<bool> placed(members.size(), false);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (placed[i]) continue;
        std::vector<std::size_t> clique{members[i]};
        placed[i] = true;
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            if (placed[j]) continue;
            if (std::all_of(clique.begin(), clique.end(), [&](std::size_t c) { return linked(c, members[j]); })) {
                clique.push_back(members[j]);
                placed[j] = true;
            }
        }
        out.push_back(std::move(clique));
    }
    return out;
}

std::map<std::string, std::string> base_params(const MctConfig& cfg) {
    return {{"tau", std::to_string(cfg.tau)},
            {"mode", cfg.mode == MctMode::joint ? "joint" : "structural_only"}};
}

}  // namespace

Partition detect_mct(const NetworkData& net, const Modalities& mods, const MctConfig& cfg) {
    cfg.validate();
    const auto& ids = net.nodes();
    const TextualResult* text = cfg.mode == MctMode::joint && mods.textual ? &*mods.textual : nullptr;
    if (cfg.mode == MctMode::joint && !text) throw ValidationError("joint mode needs textual results");

    std::set<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& [a, b] : mods.structural.related) {
        if (mods.structural.probability(a, b) < cfg.tau) continue;
        if (text && text->similarity(a, b) < cfg.tau) continue;
        const std::size_t u = net.index_of(a), v = net.index_of(b);
        edges.emplace(std::min(u, v), std::max(u, v));
    }
    Dsu dsu(ids.size());
    for (auto [u, v] : edges) dsu.unite(u, v);
    std::vector<std::size_t> labels(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) labels[i] = dsu.find(i);

    if (cfg.strict_clique) {
        std::map<std::size_t, std::vector<std::size_t>> comps;
        for (std::size_t i = 0; i < ids.size(); ++i) comps[labels[i]].push_back(i);
        std::size_t next = 0;
        for (const auto& [_, members] : comps)
            for (const auto& clique : clique_cover(members, edges)) {
                for (std::size_t v : clique) labels[v] = next;
                ++next;
            }
    }
    auto params = base_params(cfg);
    if (cfg.strict_clique) params["strict_clique"] = "true";
    return partition_from_labels(ids, labels, "mct", std::move(params));
}

Partition detect_mct(const NetworkData& net, const MctConfig& cfg, const ReciprocityConfig& recip,
                     const TextConfig& text) {
    return detect_mct(net, compute_modalities(net, cfg, recip, text), cfg);
}

std::vector<NodeId> mct2_candidates(const Modalities& mods, const MctConfig& cfg) {
    std::vector<NodeId> out;
    for (const auto& v : mods.structural.related_nodes())
        if (cfg.mode == MctMode::structural_only || (mods.textual && mods.textual->covers(v))) out.push_back(v);
    return out;
}

namespace {

Partition mct2_with_lambda(const NetworkData& net, const Modalities& mods, const MctConfig& cfg, double lambda) {
    const auto cand = mct2_candidates(mods, cfg);
    const std::size_t m = cand.size();
    const std::size_t M = cfg.max_clusters;
    if (M > m)
        throw ValidationError("cluster count M = " + std::to_string(M) + " exceeds the " + std::to_string(m) +
                              " candidate nodes");
    const TextualResult* text = cfg.mode == MctMode::joint ? &*mods.textual : nullptr;

    std::vector<double> psi(m * m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        psi[i * m + i] = 1.0;
        for (std::size_t j = i + 1; j < m; ++j)
            psi[i * m + j] = psi[j * m + i] = joint_similarity(cand[i], cand[j], mods.structural, text, lambda);
    }
    auto at = [&](std::size_t i, std::size_t j) { return psi[i * m + j]; };

    // Seed rounds.
    Rng rng(cfg.seed);
    constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> cluster_of(m, kNone);
    std::vector<std::vector<std::size_t>> clusters;
    std::vector<std::size_t> pool(m);
    std::iota(pool.begin(), pool.end(), 0);
    while (clusters.size() < M) {
        std::vector<std::size_t> seeds;
        for (std::size_t s = 0; s < cfg.seeds_per_round && !pool.empty(); ++s) {
            const std::size_t pick = rng.below(pool.size());
            seeds.push_back(pool[pick]);
            pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
        }
        Dsu dsu(seeds.size());
        for (std::size_t a = 0; a < seeds.size(); ++a)
            for (std::size_t b = a + 1; b < seeds.size(); ++b)
                if (at(seeds[a], seeds[b]) >= cfg.tau) dsu.unite(a, b);
        std::map<std::size_t, std::vector<std::size_t>> groups;
        for (std::size_t a = 0; a < seeds.size(); ++a) groups[dsu.find(a)].push_back(seeds[a]);
        for (auto& [_, g] : groups) {
            if (clusters.size() == M) {
                // Seeds that found no cluster go back to the ordinary pass.
                pool.insert(pool.end(), g.begin(), g.end());
                continue;
            }
            for (std::size_t v : g) cluster_of[v] = clusters.size();
            clusters.push_back(std::move(g));
        }
    }

    // sums[v][c] = sum of psi between v and the members of cluster c
    std::vector<double> sums(m * M, 0.0);
    std::vector<std::size_t> sizes(M, 0);
    auto join = [&](std::size_t v, std::size_t c) {
        for (std::size_t u = 0; u < m; ++u) sums[u * M + c] += at(u, v);
        ++sizes[c];
    };
    auto leave = [&](std::size_t v, std::size_t c) {
        for (std::size_t u = 0; u < m; ++u) sums[u * M + c] -= at(u, v);
        --sizes[c];
    };
    for (std::size_t c = 0; c < M; ++c)
        for (std::size_t v : clusters[c]) join(v, c);

    auto best_cluster = [&](std::size_t v, std::size_t current) {
        std::size_t best = kNone;
        double best_mean = -1.0;
        for (std::size_t c = 0; c < M; ++c) {
            if (sizes[c] == 0) continue;
            const double mean = sums[v * M + c] / static_cast<double>(sizes[c]);
            if (best == kNone || mean > best_mean + 1e-12) {
                best = c;
                best_mean = mean;
            }
        }
        if (current != kNone && sizes[current] > 0 &&
            sums[v * M + current] / static_cast<double>(sizes[current]) >= best_mean - 1e-12)
            return current;
        return best;
    };

    int passes = 0;
    for (int it = 0; it < cfg.max_iters; ++it) {
        ++passes;
        bool changed = false;
        for (std::size_t v = 0; v < m; ++v) {
            const std::size_t current = cluster_of[v];
            if (current != kNone) {
                if (sizes[current] == 1) continue;  // never empty a cluster
                leave(v, current);
            }
            const std::size_t target = best_cluster(v, current);
            join(v, target);
            cluster_of[v] = target;
            if (target != current) changed = true;
        }
        if (!changed) break;
    }

    std::vector<std::size_t> labels(net.size());
    std::vector<bool> is_cand(net.size(), false);
    for (std::size_t v = 0; v < m; ++v) {
        const std::size_t idx = net.index_of(cand[v]);
        labels[idx] = cluster_of[v];
        is_cand[idx] = true;
    }
    std::size_t next = M;
    for (std::size_t i = 0; i < net.size(); ++i)
        if (!is_cand[i]) labels[i] = next++;

    auto params = base_params(cfg);
    params["M"] = std::to_string(M);
    params["seed"] = std::to_string(cfg.seed);
    params["passes"] = std::to_string(passes);
    if (cfg.mode == MctMode::joint) params["lambda"] = std::to_string(lambda);
    return partition_from_labels(net.nodes(), labels, "mct2", std::move(params));
}

double reciprocity_modularity(const UndirectedGraph& g, const Partition& p) {
    if (g.num_edges() == 0) return 0.0;
    return modularity(g, p);
}

}  // namespace

Partition detect_mct2(const NetworkData& net, const Modalities& mods, const MctConfig& cfg) {
    cfg.validate();
    if (cfg.mode == MctMode::joint && !mods.textual) throw ValidationError("joint mode needs textual results");
    return mct2_with_lambda(net, mods, cfg, cfg.lambda);
}

Partition detect_mct2(const NetworkData& net, const MctConfig& cfg, const ReciprocityConfig& recip,
                      const TextConfig& text) {
    return detect_mct2(net, compute_modalities(net, cfg, recip, text), cfg);
}

UndirectedGraph reciprocity_graph(const StructuralResult& structural) {
    UndirectedGraph g;
    g.ids = structural.nodes;
    g.adj.resize(g.ids.size());
    auto index = [&](const NodeId& v) {
        return static_cast<std::size_t>(std::lower_bound(g.ids.begin(), g.ids.end(), v) - g.ids.begin());
    };
    for (const auto& [a, b] : structural.related) {
        const std::size_t u = index(a), v = index(b);
        g.edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(g.edges.begin(), g.edges.end());
    for (auto [u, v] : g.edges) {
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& a : g.adj) std::sort(a.begin(), a.end());
    return g;
}

std::pair<double, Partition> tune_lambda(const NetworkData& net, const Modalities& mods, const MctConfig& cfg) {
    cfg.validate();
    if (cfg.lambda_grid.empty()) throw ValidationError("lambda grid is empty");
    if (cfg.mode == MctMode::joint && !mods.textual) throw ValidationError("joint mode needs textual results");
    std::vector<double> grid = cfg.lambda_grid;
    std::sort(grid.begin(), grid.end());
    const auto g = reciprocity_graph(mods.structural);
    std::optional<std::pair<double, Partition>> best;
    double best_q = -std::numeric_limits<double>::infinity();
    for (double l : grid) {
        auto p = mct2_with_lambda(net, mods, cfg, l);
        const double q = reciprocity_modularity(g, p);
        if (!best || q > best_q + 1e-12) {
            best_q = q;
            p.params["lambda"] = std::to_string(l);
            best = std::make_pair(l, std::move(p));
        }
    }
    return std::move(*best);
}

Partition detect_nmf(const NetworkData& net, const Modalities& mods, const NmfDetectConfig& cfg) {
    if (cfg.lambda_grid.empty()) throw ValidationError("lambda grid is empty");
    const auto& ids = net.nodes();
    const std::size_t n = ids.size();
    NmfProblem problem;
    problem.D = build_size_matrix(net, cfg.bands);
    problem.k = cfg.clusters;

    DenseMatrix affinity(n, n);
    if (mods.textual) {
        const auto& t = *mods.textual;
        for (std::size_t i = 0; i < t.nodes.size(); ++i)
            for (std::size_t j = 0; j < t.nodes.size(); ++j)
                if (i != j) affinity(net.index_of(t.nodes[i]), net.index_of(t.nodes[j])) = t.affinity(i, j);
    } else {
        for (const auto& [a, b] : mods.structural.related) {
            const double p = mods.structural.probability(a, b);
            const std::size_t u = net.index_of(a), v = net.index_of(b);
            affinity(u, v) = affinity(v, u) = p;
        }
    }
    problem.affinity = affinity;

    std::vector<double> grid = cfg.lambda_grid;
    std::sort(grid.begin(), grid.end());
    const auto g = reciprocity_graph(mods.structural);
    std::optional<Partition> best;
    double best_q = -std::numeric_limits<double>::infinity();
    for (double l : grid) {
        problem.lambda_joint = l;
        const auto res = nmf_joint(problem, cfg.options);
        auto p = factors_to_partition(res.P, ids);
        const double q = reciprocity_modularity(g, p);
        if (!best || q > best_q + 1e-12) {
            best_q = q;
            p.params = {{"lambda", std::to_string(l)},
                        {"k", std::to_string(cfg.clusters)},
                        {"bands", std::to_string(cfg.bands)},
                        {"seed", std::to_string(cfg.options.seed)}};
            best = std::move(p);
        }
    }
    return std::move(*best);
}

Partition detect_spectral(const Modalities& mods, const SpectralConfig& cfg) {
    return spectral_cluster(mods.structural, cfg);
}

}  // namespace mct
