#include "mct/baselines.hpp"

#include "mct/kernels.hpp"
#include "mct/metrics.hpp"
#include "rng.hpp"

#include <algorithm>
#include <map>

namespace mct {

void BaselineConfig::validate() const {
    if (lp_max_sweeps < 1) throw ValidationError("lp_max_sweeps must be at least 1");
    if (gn_target == GnTarget::fixed_k && gn_k == 0) throw ValidationError("gn_k must be at least 1");
}

namespace {

std::size_t components(const kernels::EdgeAdjacency& adj, std::vector<std::size_t>& labels) {
    const std::size_t n = adj.size();
    labels.assign(n, n);
    std::size_t count = 0;
    std::vector<std::size_t> stack;
    for (std::size_t s = 0; s < n; ++s) {
        if (labels[s] != n) continue;
        labels[s] = count;
        stack.push_back(s);
        while (!stack.empty()) {
            const std::size_t v = stack.back();
            stack.pop_back();
            for (const auto& [w, e] : adj[v])
                if (labels[w] == n) {
                    labels[w] = count;
                    stack.push_back(w);
                }
        }
        ++count;
    }
    return count;
}

void erase_edge(kernels::EdgeAdjacency& adj, std::size_t v, std::size_t edge) {
    auto& list = adj[v];
    list.erase(std::remove_if(list.begin(), list.end(),
                              [edge](const kernels::AdjEntry& a) { return a.edge == edge; }),
               list.end());
}

}  // namespace

GnTrace girvan_newman_trace(const NetworkData& net, const BaselineConfig& cfg) {
    cfg.validate();
    const auto g = undirected_graph(net);
    const std::size_t m = g.num_edges();
    if (m == 0) throw ValidationError("graph has no edges");

    kernels::EdgeAdjacency adj(g.num_nodes());
    for (std::size_t e = 0; e < m; ++e) {
        const auto [u, v] = g.edges[e];
        adj[u].push_back({v, e});
        adj[v].push_back({u, e});
    }
    std::vector<bool> active(m, true);

    GnTrace trace;
    GnLevel level;
    level.num_components = components(adj, level.labels);
    level.modularity = modularity_labels(g, level.labels);
    trace.levels.push_back(level);

    for (std::size_t removed = 1; removed <= m; ++removed) {
        const auto bc = kernels::parallel::edge_betweenness(adj, m);
        std::size_t pick = m;
        double best = 0.0;
        for (std::size_t e = 0; e < m; ++e) {
            if (!active[e]) continue;
            // Edge ids follow lexicographic order, so the first of a tie wins.
            if (pick == m || bc[e] > best + 1e-9 * std::max(1.0, best)) {
                pick = e;
                best = bc[e];
            }
        }
        active[pick] = false;
        const auto [u, v] = g.edges[pick];
        erase_edge(adj, u, pick);
        erase_edge(adj, v, pick);
        trace.removals.emplace_back(g.ids[u], g.ids[v]);

        GnLevel next;
        next.num_components = components(adj, next.labels);
        if (next.num_components > trace.levels.back().num_components) {
            next.removed = removed;
            next.modularity = modularity_labels(g, next.labels);
            trace.levels.push_back(std::move(next));
            if (cfg.gn_target == GnTarget::fixed_k && trace.levels.back().num_components >= cfg.gn_k)
                break;
        }
    }

    if (cfg.gn_target == GnTarget::modularity_peak) {
        for (std::size_t i = 1; i < trace.levels.size(); ++i)
            if (trace.levels[i].modularity > trace.levels[trace.chosen].modularity + 1e-12) trace.chosen = i;
    } else {
        if (cfg.gn_k > g.num_nodes()) throw ValidationError("gn_k exceeds the node count");
        trace.chosen = trace.levels.size() - 1;
        for (std::size_t i = 0; i < trace.levels.size(); ++i)
            if (trace.levels[i].num_components >= cfg.gn_k) {
                trace.chosen = i;
                break;
            }
    }
    return trace;
}

Partition girvan_newman(const NetworkData& net, const BaselineConfig& cfg) {
    const auto trace = girvan_newman_trace(net, cfg);
    const auto& lvl = trace.levels[trace.chosen];
    std::map<std::string, std::string> params{{"removed", std::to_string(lvl.removed)}};
    if (cfg.gn_target == GnTarget::fixed_k) params["k"] = std::to_string(cfg.gn_k);
    return partition_from_labels(net.nodes(), lvl.labels, "gn", std::move(params));
}

LpRun label_propagation_run(const NetworkData& net, const BaselineConfig& cfg) {
    cfg.validate();
    const auto g = undirected_graph(net);
    const std::size_t n = g.num_nodes();
    if (n == 0) throw ValidationError("graph has no nodes");

    // A label is the index of the node that started with it; ids are sorted,
    // so the smallest id of a group names it.
    std::vector<std::size_t> label(n);
    for (std::size_t v = 0; v < n; ++v) label[v] = v;
    std::vector<std::size_t> order(n);
    for (std::size_t v = 0; v < n; ++v) order[v] = v;

    Rng rng(cfg.seed);
    std::vector<std::size_t> count(n, 0);
    std::vector<std::size_t> seen, top;
    LpRun run;
    for (int sweep = 1; sweep <= cfg.lp_max_sweeps; ++sweep) {
        rng.shuffle(order);
        bool changed = false;
        for (std::size_t v : order) {
            if (g.adj[v].empty()) continue;
            seen.clear();
            for (std::size_t w : g.adj[v]) {
                if (count[label[w]]++ == 0) seen.push_back(label[w]);
            }
            std::size_t best = 0;
            for (std::size_t l : seen) best = std::max(best, count[l]);
            top.clear();
            for (std::size_t l : seen)
                if (count[l] == best) top.push_back(l);
            const bool keep = count[label[v]] == best;
            for (std::size_t l : seen) count[l] = 0;
            if (keep) continue;
            std::sort(top.begin(), top.end());
            label[v] = top[rng.below(top.size())];
            changed = true;
        }
        run.sweeps = sweep;
        if (!changed) {
            run.converged = true;
            break;
        }
    }
    run.partition = partition_from_labels(net.nodes(), label, "lp",
                                          {{"seed", std::to_string(cfg.seed)},
                                           {"sweeps", std::to_string(run.sweeps)}});
    return run;
}

Partition label_propagation(const NetworkData& net, const BaselineConfig& cfg) {
    return label_propagation_run(net, cfg).partition;
}

}  // namespace mct
