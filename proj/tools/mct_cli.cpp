#include "mct/baselines.hpp"
#include "mct/ingest.hpp"
#include "mct/mct.hpp"
#include "mct/metrics.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace mct;

namespace {

enum class Level { error = 0, warn = 1, info = 2, debug = 3 };

Level log_level() {
    const char* env = std::getenv("MCT_LOG");
    if (!env) return Level::warn;
    const std::string v = env;
    if (v == "error") return Level::error;
    if (v == "info") return Level::info;
    if (v == "debug") return Level::debug;
    return Level::warn;
}

void log(Level lvl, const std::string& msg) {
    static const Level current = log_level();
    static const char* names[] = {"error", "warn", "info", "debug"};
    if (lvl <= current) std::cerr << "[" << names[static_cast<int>(lvl)] << "] " << msg << "\n";
}

std::string fmt(double x) {
    std::ostringstream ss;
    ss << std::setprecision(10) << x;
    return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write " + path.string());
    out << text;
}

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.find_first_not_of(" ") == std::string::npos) continue;
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (item.find_first_not_of(" ", used) != std::string::npos) throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            throw ValidationError("not a number in list: " + item);
        }
    }
    return out;
}

std::vector<std::string> parse_names(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

// Options shared by every subcommand that reads a dataset.
struct DatasetArgs {
    std::string edges, profiles, tweets;

    void add(CLI::App* app) {
        app->add_option("--edges", edges, "edges.tsv")->required()->check(CLI::ExistingFile);
        app->add_option("--profiles", profiles, "profiles.json (derived from degrees when absent)")
            ->check(CLI::ExistingFile);
        app->add_option("--tweets", tweets, "tweets.jsonl")->check(CLI::ExistingFile);
    }
    NetworkData load() const {
        DatasetPaths p;
        p.edges = edges;
        if (!profiles.empty()) p.profiles = profiles;
        if (!tweets.empty()) p.tweets = tweets;
        auto net = read_dataset(p);
        log(Level::info, "loaded " + std::to_string(net.size()) + " nodes, " + std::to_string(net.edges().size()) +
                             " edges");
        return net;
    }
};

struct ModelArgs {
    std::uint64_t seed = 42;
    double tau = 0.5;
    double lambda = 0.5;
    std::string lambda_grid;
    int topics = 20;
    std::optional<std::size_t> clusters;  // spectral picks k itself when unset
    bool structural_only = false;
    std::string scope = "all";
    std::string stopwords;
    bool strict_clique = false;
    int gibbs_iters = 1000;
    int burn_in = 200;

    void add(CLI::App* app) {
        app->add_option("--seed", seed, "random seed");
        app->add_option("--tau", tau, "similarity threshold");
        app->add_option("--lambda", lambda, "structural weight in the joint score");
        app->add_option("--lambda-grid", lambda_grid, "comma list of lambdas to tune over (mct2)");
        app->add_option("--topics", topics, "LDA topic count");
        app->add_option("--clusters", clusters, "cluster count (mct2 M, nmf k, spectral k, gn k)");
        app->add_flag("--structural-only", structural_only, "ignore text");
        app->add_option("--scope", scope, "pairs scored by f-sim: all | ties")
            ->check(CLI::IsMember({"all", "ties"}));
        app->add_option("--stopwords", stopwords, "stopword file, one per line")->check(CLI::ExistingFile);
        app->add_flag("--strict-clique", strict_clique, "split microcosms into cliques");
        app->add_option("--gibbs-iters", gibbs_iters, "LDA Gibbs sweeps");
        app->add_option("--burn-in", burn_in, "LDA burn-in sweeps");
    }
    ReciprocityConfig recip() const {
        ReciprocityConfig r;
        r.tau = tau;
        r.scope = scope == "ties" ? PairScope::observed_ties : PairScope::all_pairs;
        return r;
    }
    TextConfig text() const {
        TextConfig t;
        t.topics = topics;
        t.tau = tau;
        t.seed = seed;
        t.gibbs_iters = gibbs_iters;
        t.burn_in = burn_in;
        if (!stopwords.empty()) t.stopwords = read_stopwords(stopwords);
        return t;
    }
    MctConfig mct() const {
        MctConfig c;
        c.tau = tau;
        c.lambda = lambda;
        c.lambda_grid = parse_list(lambda_grid);
        c.max_clusters = clusters.value_or(2);
        c.seed = seed;
        c.mode = structural_only ? MctMode::structural_only : MctMode::joint;
        c.strict_clique = strict_clique;
        return c;
    }
};

std::string params_text(const std::map<std::string, std::string>& params) {
    std::string s;
    for (const auto& [k, v] : params) s += (s.empty() ? "" : ";") + k + "=" + v;
    return s;
}

const char* kMetricsHeader = "dataset,algorithm,params,Q,NMI,Rand,Jaccard,num_communities,avg_degree,runtime_ms\n";

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

std::string metrics_row(const std::string& dataset, const Partition& p, const MetricsReport& r, double runtime_ms) {
    std::string row = csv_field(dataset) + "," + csv_field(p.algorithm) + "," + csv_field(params_text(p.params)) +
                      "," + fmt(r.modularity) + ",";
    if (r.has_truth) row += fmt(r.nmi) + "," + fmt(r.rand) + "," + fmt(r.jaccard);
    else row += ",,";
    row += "," + std::to_string(r.num_communities) + "," + fmt(r.avg_degree.undirected) + "," + fmt(runtime_ms) + "\n";
    return row;
}

Partition run_detector(const std::string& algorithm, const NetworkData& net, const ModelArgs& args) {
    const MctConfig cfg = args.mct();
    cfg.validate();
    if (algorithm == "gn" || algorithm == "lp") {
        BaselineConfig b;
        b.seed = args.seed;
        if (args.clusters) {
            b.gn_target = GnTarget::fixed_k;
            b.gn_k = *args.clusters;
        }
        if (algorithm == "gn") return girvan_newman(net, b);
        return label_propagation(net, b);
    }
    if (cfg.mode == MctMode::joint && !net.has_corpora())
        throw ValidationError("corpora required unless --structural-only");
    const Modalities mods = compute_modalities(net, cfg, args.recip(), args.text());
    log(Level::info, std::to_string(mods.structural.related.size()) + " related pairs");
    if (algorithm == "mct") return detect_mct(net, mods, cfg);
    if (algorithm == "mct2") {
        if (!cfg.lambda_grid.empty()) return tune_lambda(net, mods, cfg).second;
        return detect_mct2(net, mods, cfg);
    }
    if (algorithm == "spectral") {
        SpectralConfig s;
        s.seed = args.seed;
        s.k = args.clusters;
        return detect_spectral(mods, s);
    }
    if (algorithm == "nmf") {
        NmfDetectConfig n;
        n.clusters = args.clusters.value_or(2);
        n.options.seed = args.seed;
        return detect_nmf(net, mods, n);
    }
    throw ValidationError("unknown algorithm " + algorithm);
}

std::optional<Partition> load_truth(const std::string& path) {
    if (path.empty()) return std::nullopt;
    return read_partition(path);
}

// ---------------------------------------------------------------------------

void cmd_ingest(const DatasetArgs& data, const std::string& out) {
    const NetworkData net = data.load();
    const auto view = undirected_view(net);
    if (!out.empty()) write_dataset(net, out);
    json summary = {{"nodes", net.size()},
                    {"directed_edges", net.edges().size()},
                    {"undirected_edges", undirected_graph(net).num_edges()},
                    {"reciprocal_pairs", view.reciprocal.size()},
                    {"one_way_edges", view.one_edge.size()},
                    {"nodes_with_text", net.corpora().size()}};
    std::cout << summary.dump(2) << "\n";
}

void write_generated(const GeneratedNetwork& g, const fs::path& out) {
    write_dataset(g.net, out);
    write_partition(g.truth, out / "truth.json");
    std::cout << json{{"nodes", g.net.size()},
                      {"edges", g.net.edges().size()},
                      {"communities", g.truth.size()}}
                     .dump(2)
              << "\n";
}

void cmd_snapshot(const std::string& snapshot, const std::string& seeds_text, const fs::path& out) {
    const auto source = SnapshotSource::from_file(snapshot);
    std::vector<NodeId> seeds = seeds_text.empty() ? source.nodes() : parse_names(seeds_text);
    const auto res = search_dyads(source, seeds);
    const auto triads = transitive_triads(res.dyads);
    std::string dy, one, tri;
    for (const auto& [a, b] : res.dyads) dy += a + "\t" + b + "\n";
    for (const auto& e : res.one_edge) one += e.src + "\t" + e.dst + "\n";
    for (const auto& t : triads) tri += t[0] + "\t" + t[1] + "\t" + t[2] + "\n";
    write_file(out / "dyads.tsv", dy);
    write_file(out / "one_edge.tsv", one);
    write_file(out / "triads.tsv", tri);
    write_dataset(snapshot_network(source), out);
    std::cout << json{{"dyads", res.dyads.size()}, {"one_edge", res.one_edge.size()}, {"triads", triads.size()}}
                     .dump(2)
              << "\n";
}

std::vector<NodePair> read_pairs(const std::string& path) {
    std::vector<NodePair> out;
    for (const auto& e : read_edges(path)) out.push_back(make_pair_sorted(e.src, e.dst));
    return out;
}

void cmd_fsim(const DatasetArgs& data, const ModelArgs& args, const std::string& truth_pairs, const fs::path& out) {
    const NetworkData net = data.load();
    const auto res = f_sim(net, args.recip());
    std::string csv = "a,b,p,related\n";
    for (const auto& [pair, p] : res.prob)
        csv += csv_field(pair.first) + "," + csv_field(pair.second) + "," + fmt(p) + "," +
               (p >= res.tau ? "1" : "0") + "\n";
    json summary = {{"tau", res.tau}, {"related", res.related.size()}, {"unrelated", res.unrelated.size()}};
    if (!truth_pairs.empty()) {
        const auto acc = prediction_accuracy(res, read_pairs(truth_pairs));
        summary["accuracy"] = acc.accuracy;
        summary["precision"] = acc.precision;
        summary["f1"] = acc.f1;
    }
    if (!out.empty()) write_file(out / "fsim.csv", csv);
    std::cout << summary.dump(2) << "\n";
}

void cmd_detect(const std::string& algorithm, const DatasetArgs& data, const ModelArgs& args,
                const std::string& truth_path, const std::string& dataset, const fs::path& out) {
    const NetworkData net = data.load();
    const auto truth = load_truth(truth_path);
    const auto start = std::chrono::steady_clock::now();
    Partition p = run_detector(algorithm, net, args);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    const auto report = evaluate(net, p, truth ? &*truth : nullptr);
    const std::string name = dataset.empty() ? fs::path(data.edges).stem().string() : dataset;
    const std::string row = metrics_row(name, p, report, ms);
    if (out.empty()) {
        std::cout << partition_to_json(p);
    } else {
        write_partition(p, out / "partition.json");
        write_file(out / "metrics.csv", std::string(kMetricsHeader) + row);
    }
    std::cerr << kMetricsHeader << row;
}

void cmd_evaluate(const DatasetArgs& data, const std::string& partition_path, const std::string& truth_path,
                  const std::string& dataset, const fs::path& out) {
    const NetworkData net = data.load();
    const Partition p = read_partition(partition_path);
    const auto truth = load_truth(truth_path);
    const auto report = evaluate(net, p, truth ? &*truth : nullptr);
    const std::string name = dataset.empty() ? fs::path(data.edges).stem().string() : dataset;
    const std::string text = std::string(kMetricsHeader) + metrics_row(name, p, report, 0.0);
    if (out.empty()) std::cout << text;
    else write_file(out, text);
}

struct SweepArgs {
    std::string kind = "lfr";
    std::string mus = "0.01,0.1,0.2,0.3,0.5,0.7,0.9,1";
    std::string taus = "0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9";
    std::string algorithms = "gn,lp";
    std::string truth_pairs;
    LfrConfig lfr;
};

int cmd_sweep(const SweepArgs& sw, const DatasetArgs& data, const ModelArgs& args, const fs::path& out) {
    if (sw.kind == "tau") {
        const auto taus = parse_list(sw.taus);
        if (taus.empty()) throw ValidationError("empty tau grid");
        if (sw.truth_pairs.empty()) throw ValidationError("--truth-pairs is required for a tau sweep");
        const NetworkData net = data.load();
        const auto truth = read_pairs(sw.truth_pairs);
        std::string csv = "tau,accuracy,precision,f1,related\n";
        for (double t : taus) {
            ModelArgs a = args;
            a.tau = t;
            const auto res = f_sim(net, a.recip());
            const auto acc = prediction_accuracy(res, truth);
            csv += fmt(t) + "," + fmt(acc.accuracy) + "," + fmt(acc.precision) + "," + fmt(acc.f1) + "," +
                   std::to_string(res.related.size()) + "\n";
        }
        if (out.empty()) std::cout << csv;
        else write_file(out, csv);
        return 0;
    }
    if (sw.kind != "lfr") throw ValidationError("unknown sweep kind " + sw.kind);
    const auto mus = parse_list(sw.mus);
    const auto algos = parse_names(sw.algorithms);
    if (mus.empty() || algos.empty()) throw ValidationError("empty sweep grid");
    std::string csv = kMetricsHeader;
    std::size_t ok = 0;
    for (double mu : mus) {
        LfrConfig cfg = sw.lfr;
        cfg.mu = mu;
        cfg.seed = args.seed;
        const std::string name = "lfr_mu=" + fmt(mu);
        std::optional<GeneratedNetwork> g;
        try {
            g = generate_lfr(cfg);
        } catch (const std::exception& e) {
            log(Level::warn, name + ": " + e.what());
            for (const auto& a : algos) csv += csv_field(name) + "," + a + ",error=" + csv_field(e.what()) + ",,,,,,,\n";
            continue;
        }
        for (const auto& a : algos) {
            try {
                const auto start = std::chrono::steady_clock::now();
                Partition p = run_detector(a, g->net, args);
                const double ms =
                    std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
                csv += metrics_row(name, p, evaluate(g->net, p, &g->truth), ms);
                ++ok;
            } catch (const std::exception& e) {
                log(Level::warn, name + " " + a + ": " + e.what());
                csv += csv_field(name) + "," + a + ",error=" + csv_field(e.what()) + ",,,,,,,\n";
            }
        }
    }
    if (out.empty()) std::cout << csv;
    else write_file(out, csv);
    return ok > 0 ? 0 : 1;
}

void cmd_ecdf(const DatasetArgs& data, const fs::path& out) {
    const NetworkData net = data.load();
    if (data.profiles.empty()) throw ValidationError("--profiles is required for ecdf");
    const auto view = undirected_view(net);
    std::map<NodeId, double> recip_ties;
    for (const auto& id : net.nodes()) recip_ties[id] = 0.0;
    for (const auto& [a, b] : view.reciprocal) {
        recip_ties[a] += 1.0;
        recip_ties[b] += 1.0;
    }
    std::map<std::string, std::vector<double>> series;
    for (const auto& id : net.nodes()) {
        const auto& p = net.profile(id);
        const std::string cat = p.category == Category::verified ? "verified" : "unverified";
        const double out_deg = static_cast<double>(p.outdegree);
        const double rate = out_deg > 0 ? recip_ties[id] / out_deg : 0.0;
        series["reciprocal_ties_" + cat].push_back(recip_ties[id]);
        series["reciprocity_rate_" + cat].push_back(rate);
        if (recip_ties[id] > 0) {
            series["indegree_reciprocating_" + cat].push_back(static_cast<double>(p.indegree));
            series["outdegree_reciprocating_" + cat].push_back(out_deg);
        }
    }
    std::string csv = "series,x,ecdf\n";
    for (const auto& [name, values] : series)
        for (const auto& [x, f] : ecdf(values)) csv += name + "," + fmt(x) + "," + fmt(f) + "\n";
    if (out.empty()) std::cout << csv;
    else write_file(out, csv);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multilevel community detection: reciprocity, text and microcosms"};
    app.require_subcommand(1);

    std::string out;
    DatasetArgs data;
    ModelArgs model;

    auto* ingest = app.add_subcommand("ingest", "validate a dataset and write it in canonical form");
    data.add(ingest);
    ingest->add_option("--out", out, "output directory");

    LfrConfig lfr;
    auto* glfr = app.add_subcommand("generate-lfr", "LFR benchmark network with planted communities");
    glfr->add_option("--n", lfr.n, "node count");
    glfr->add_option("--gamma", lfr.gamma, "degree exponent");
    glfr->add_option("--mean-degree", lfr.mean_degree, "mean degree");
    glfr->add_option("--community-exponent", lfr.community_exponent, "community size exponent");
    glfr->add_option("--c-min", lfr.c_min, "smallest community");
    glfr->add_option("--c-max", lfr.c_max, "largest community");
    glfr->add_option("--mu", lfr.mu, "mixing parameter");
    glfr->add_option("--max-degree", lfr.max_degree, "largest degree");
    glfr->add_option("--seed", lfr.seed, "random seed");
    glfr->add_option("--out", out, "output directory")->required();

    PpmConfig ppm;
    auto* gppm = app.add_subcommand("generate-ppm", "planted partition network");
    gppm->add_option("--n", ppm.n, "node count");
    gppm->add_option("--k", ppm.k, "group count");
    gppm->add_option("--p-in", ppm.p_in, "edge probability inside a group");
    gppm->add_option("--p-out", ppm.p_out, "edge probability across groups");
    gppm->add_option("--seed", ppm.seed, "random seed");
    gppm->add_option("--out", out, "output directory")->required();

    std::string snapshot, seeds;
    auto* snap = app.add_subcommand("snapshot-dyads", "replay dyad search over a snapshot file");
    snap->add_option("--snapshot", snapshot, "snapshot.json")->required()->check(CLI::ExistingFile);
    snap->add_option("--seeds", seeds, "comma list of seed ids (default: all users)");
    snap->add_option("--out", out, "output directory")->required();

    std::string truth_pairs;
    auto* fsim = app.add_subcommand("fsim", "reciprocity likelihood for node pairs");
    data.add(fsim);
    fsim->add_option("--tau", model.tau, "similarity threshold");
    fsim->add_option("--scope", model.scope, "pairs scored: all | ties")->check(CLI::IsMember({"all", "ties"}));
    fsim->add_option("--truth-pairs", truth_pairs, "tsv of true reciprocal pairs")->check(CLI::ExistingFile);
    fsim->add_option("--out", out, "output directory");

    std::string algorithm, truth, dataset;
    auto* detect = app.add_subcommand("detect", "run one community detector");
    data.add(detect);
    model.add(detect);
    detect->add_option("--algorithm", algorithm, "mct | mct2 | gn | lp | spectral | nmf")
        ->required()
        ->check(CLI::IsMember({"mct", "mct2", "gn", "lp", "spectral", "nmf"}));
    detect->add_option("--ground-truth", truth, "partition.json with the true communities")
        ->check(CLI::ExistingFile);
    detect->add_option("--dataset", dataset, "dataset name for metrics.csv");
    detect->add_option("--out", out, "output directory");

    SweepArgs sw;
    DatasetArgs sweep_data;
    ModelArgs sweep_model;
    auto* sweep = app.add_subcommand("sweep", "metrics over a parameter grid");
    sweep->add_option("--kind", sw.kind, "lfr | tau")->check(CLI::IsMember({"lfr", "tau"}));
    sweep->add_option("--mu", sw.mus, "comma list of mixing values (lfr)");
    sweep->add_option("--taus", sw.taus, "comma list of thresholds (tau)");
    sweep->add_option("--algorithms", sw.algorithms, "comma list of detectors (lfr)");
    sweep->add_option("--truth-pairs", sw.truth_pairs, "tsv of true reciprocal pairs (tau)")
        ->check(CLI::ExistingFile);
    sweep->add_option("--n", sw.lfr.n, "LFR node count");
    sweep->add_option("--gamma", sw.lfr.gamma, "LFR degree exponent");
    sweep->add_option("--mean-degree", sw.lfr.mean_degree, "LFR mean degree");
    sweep->add_option("--community-exponent", sw.lfr.community_exponent, "LFR community size exponent");
    sweep->add_option("--c-min", sw.lfr.c_min, "LFR smallest community");
    sweep->add_option("--c-max", sw.lfr.c_max, "LFR largest community");
    sweep->add_option("--max-degree", sw.lfr.max_degree, "LFR largest degree");
    sweep->add_option("--edges", sweep_data.edges, "edges.tsv (tau)")->check(CLI::ExistingFile);
    sweep->add_option("--profiles", sweep_data.profiles, "profiles.json (tau)")->check(CLI::ExistingFile);
    sweep_model.add(sweep);
    sweep->add_option("--out", out, "output csv");

    std::string partition;
    auto* eval = app.add_subcommand("evaluate", "score a partition");
    data.add(eval);
    eval->add_option("--partition", partition, "partition.json")->required()->check(CLI::ExistingFile);
    eval->add_option("--ground-truth", truth, "partition.json with the true communities")->check(CLI::ExistingFile);
    eval->add_option("--dataset", dataset, "dataset name for metrics.csv");
    eval->add_option("--out", out, "output csv");

    auto* ecdf_cmd = app.add_subcommand("ecdf", "ECDF tables of reciprocity against degree and category");
    data.add(ecdf_cmd);
    ecdf_cmd->add_option("--out", out, "output csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (ingest->parsed()) cmd_ingest(data, out);
        else if (glfr->parsed()) write_generated(generate_lfr(lfr), out);
        else if (gppm->parsed()) write_generated(generate_ppm(ppm), out);
        else if (snap->parsed()) cmd_snapshot(snapshot, seeds, out);
        else if (fsim->parsed()) cmd_fsim(data, model, truth_pairs, out);
        else if (detect->parsed()) cmd_detect(algorithm, data, model, truth, dataset, out);
        else if (sweep->parsed()) {
            if (sw.kind == "tau" && sweep_data.edges.empty()) throw ValidationError("--edges is required for a tau sweep");
            return cmd_sweep(sw, sweep_data, sweep_model, out);
        } else if (eval->parsed()) cmd_evaluate(data, partition, truth, dataset, out);
        else if (ecdf_cmd->parsed()) cmd_ecdf(data, out);
    } catch (const ValidationError& e) {
        log(Level::error, e.what());
        return 2;
    } catch (const std::exception& e) {
        log(Level::error, std::string("internal error: ") + e.what());
        return 1;
    }
    return 0;
}
