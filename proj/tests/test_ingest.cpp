#include "helpers.hpp"

#include "mct/ingest.hpp"
#include "mct/metrics.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>

using namespace mct;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    auto dir = fs::temp_directory_path() / ("mct_ingest_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

void write(const fs::path& p, const std::string& text) {
    std::ofstream(p) << text;
}

class MapSource : public NetworkSource {
public:
    std::map<NodeId, std::vector<NodeId>> follows;
    std::set<NodeId> broken;

    std::vector<NodeId> friends(const NodeId& v) const override {
        if (broken.count(v)) throw std::runtime_error("timeout");
        auto it = follows.find(v);
        if (it == follows.end()) throw ValidationError("unknown node " + v);
        return it->second;
    }
    std::vector<NodeId> followers(const NodeId& v) const override {
        std::vector<NodeId> out;
        for (const auto& [u, fs] : follows)
            if (std::find(fs.begin(), fs.end(), v) != fs.end()) out.push_back(u);
        return out;
    }
    NodeProfile profile(const NodeId& v) const override {
        return {v, static_cast<std::int64_t>(followers(v).size()), static_cast<std::int64_t>(friends(v).size()),
                Category::unverified};
    }
    std::vector<NodeId> nodes() const override {
        std::vector<NodeId> out;
        for (const auto& [k, _] : follows) out.push_back(k);
        return out;
    }
};

double intra_fraction(const GeneratedNetwork& g) {
    const auto member = g.truth.membership();
    std::size_t intra = 0;
    for (const auto& e : g.net.edges())
        if (member.at(e.src) == member.at(e.dst)) ++intra;
    return static_cast<double>(intra) / static_cast<double>(g.net.edges().size());
}

LfrConfig snd1(double mu, std::uint64_t seed) {
    LfrConfig c;
    c.n = 1000;
    c.gamma = 1.5;
    c.mean_degree = 15;
    c.community_exponent = 0.8;
    c.c_min = 30;
    c.c_max = 300;
    c.mu = mu;
    c.seed = seed;
    return c;
}

}  // namespace

TEST_SUITE("ingest") {

TEST_CASE("dyad search classifies mutual and one-way follows") {
    MapSource mutual;
    mutual.follows = {{"a", {"b"}}, {"b", {"a"}}};
    auto r = search_dyads(mutual, {"a"});
    CHECK(r.dyads == std::set<NodePair>{{"a", "b"}});
    CHECK(r.one_edge.empty());

    MapSource oneway;
    oneway.follows = {{"a", {"b"}}, {"b", {}}};
    r = search_dyads(oneway, {"a"});
    CHECK(r.dyads.empty());
    CHECK(r.one_edge == std::set<Edge>{{"a", "b"}});
}

TEST_CASE("five-node snapshot: two mutual pairs and three one-way edges") {
    const std::string text = R"({"users": {
        "a": {"friends": ["b", "c"], "followers": ["b"], "profile": {"indegree": 1, "outdegree": 2, "verified": false}},
        "b": {"friends": ["a", "d"], "followers": ["a"], "profile": {"indegree": 1, "outdegree": 2, "verified": true}},
        "c": {"friends": ["d"], "followers": ["a", "e"]},
        "d": {"friends": ["c"], "followers": ["b", "c"]},
        "e": {"friends": ["c"], "followers": []}}})";
    const auto src = SnapshotSource::from_json_text(text);
    auto all = src.nodes();
    auto r = search_dyads(src, all);
    // exhaustive check: a pair is mutual iff each lists the other as a friend
    std::set<NodePair> mutual;
    std::set<Edge> oneway;
    for (const auto& u : all)
        for (const auto& v : src.friends(u)) {
            auto back = src.friends(v);
            if (std::find(back.begin(), back.end(), u) != back.end()) mutual.insert(make_pair_sorted(u, v));
            else oneway.insert({u, v});
        }
    CHECK(r.dyads == mutual);
    CHECK(r.one_edge == oneway);
    CHECK(r.dyads.size() == 2);
    CHECK(r.one_edge.size() == 3);

    std::reverse(all.begin(), all.end());
    CHECK(search_dyads(src, all).dyads == r.dyads);

    CHECK(src.profile("c").indegree == 2);
    CHECK(src.profile("b").category == Category::verified);
    auto net = snapshot_network(src);
    CHECK(net.size() == 5);
    CHECK(net.edges().size() == 7);
}

TEST_CASE("dyad search errors name the node and carry query context") {
    MapSource s;
    s.follows = {{"a", {"ghost"}}};
    CHECK_THROWS_WITH_AS(search_dyads(s, {"a"}), "unknown node ghost", ValidationError);
    CHECK_THROWS_AS(search_dyads(s, {}), ValidationError);
    s.follows = {{"a", {"b"}}, {"b", {"a"}}};
    s.broken = {"b"};
    CHECK_THROWS_WITH(search_dyads(s, {"a"}), doctest::Contains("friends query for b failed: timeout"));
}

TEST_CASE("transitive triads need all three mutual pairs") {
    std::set<NodePair> dyads{{"a", "b"}, {"a", "c"}, {"b", "c"}, {"c", "d"}, {"b", "d"}};
    auto t = transitive_triads(dyads);
    REQUIRE(t.size() == 2);
    CHECK(t[0] == std::array<NodeId, 3>{"a", "b", "c"});
    CHECK(t[1] == std::array<NodeId, 3>{"b", "c", "d"});
}

TEST_CASE("LFR with the SND1 parameters") {
    auto g = generate_lfr(snd1(0.1, 1));
    CHECK(g.net.size() == 1000);
    for (const auto& c : g.truth.communities) {
        CHECK(c.size() >= 30);
        CHECK(c.size() <= 300);
    }
    CHECK(g.truth.num_assigned() == 1000);
    const double mean = average_degree(g.net).undirected;
    CHECK(mean == doctest::Approx(15.0).epsilon(0.10));
    CHECK(intra_fraction(g) == doctest::Approx(0.9).epsilon(0.05 / 0.9));
}

TEST_CASE("LFR without mixing keeps every edge inside a community") {
    auto g = generate_lfr(snd1(0.0, 3));
    CHECK(intra_fraction(g) == 1.0);
}

TEST_CASE("LFR community sizes stay in bounds and degrees match the target mean over seeds") {
    for (std::uint64_t seed = 10; seed < 15; ++seed) {
        auto cfg = snd1(0.3, seed);
        auto g = generate_lfr(cfg);
        for (const auto& c : g.truth.communities) {
            CHECK(c.size() >= cfg.c_min);
            CHECK(c.size() <= cfg.c_max);
        }
        CHECK(std::abs(average_degree(g.net).undirected - 15.0) <= 1.5);
    }
}

TEST_CASE("generators are pure functions of config and seed") {
    auto a = generate_lfr(snd1(0.2, 9));
    auto b = generate_lfr(snd1(0.2, 9));
    CHECK(a.net.edges() == b.net.edges());
    CHECK(a.truth.communities == b.truth.communities);
    auto c = generate_lfr(snd1(0.2, 10));
    CHECK(a.net.edges() != c.net.edges());

    PpmConfig p;
    CHECK(generate_ppm(p).net.edges() == generate_ppm(p).net.edges());
}

TEST_CASE("LFR rejects infeasible configurations") {
    LfrConfig c = snd1(0.1, 1);
    c.mu = 1.5;
    CHECK_THROWS_AS(generate_lfr(c), ValidationError);
    c = snd1(0.1, 1);
    c.gamma = 1.0;
    CHECK_THROWS_AS(generate_lfr(c), ValidationError);
    // hubs of degree 60 cannot fit inside communities of at most 20 nodes
    c = snd1(0.0, 1);
    c.n = 200;
    c.c_min = 10;
    c.c_max = 20;
    c.max_degree = 60;
    c.mean_degree = 40;
    c.max_attempts = 5;
    CHECK_THROWS_WITH_AS(generate_lfr(c), doctest::Contains("after 5 attempts"), ValidationError);
}

TEST_CASE("PPM extremes give disjoint cliques") {
    PpmConfig c;
    c.n = 6;
    c.k = 2;
    c.p_in = 1.0;
    c.p_out = 0.0;
    auto g = generate_ppm(c);
    CHECK(g.net.edges().size() == 6);
    CHECK(g.truth.size() == 2);
    auto member = g.truth.membership();
    for (const auto& e : g.net.edges()) CHECK(member.at(e.src) == member.at(e.dst));
    for (const auto& comm : g.truth.communities) CHECK(comm.size() == 3);
}

TEST_CASE("PPM planted partition is modular when p_in >> p_out") {
    PpmConfig c;
    c.n = 100;
    c.k = 4;
    c.p_in = 0.3;
    c.p_out = 0.01;
    c.seed = 5;
    auto g = generate_ppm(c);
    CHECK(modularity(g.net, g.truth) > 0.5);
}

TEST_CASE("PPM with p_in = p_out has planted modularity near zero on average") {
    double total = 0.0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        PpmConfig c;
        c.n = 60;
        c.k = 3;
        c.p_in = c.p_out = 0.15;
        c.seed = seed;
        auto g = generate_ppm(c);
        total += modularity(g.net, g.truth);
    }
    CHECK(std::abs(total / 100.0) < 0.03);
}

TEST_CASE("karate edge file loads as 34 nodes and 78 ties") {
    auto net = testing::karate();
    CHECK(net.size() == 34);
    CHECK(undirected_graph(net).num_edges() == 78);
    CHECK(net.profile("34").indegree == 17);
    CHECK(net.profile("34").category == Category::verified);
    CHECK(net.profile("2").category == Category::unverified);
}

TEST_CASE("empty edge file with three profiles gives isolated nodes") {
    auto dir = scratch("empty");
    write(dir / "edges.tsv", "# nothing here\n\n");
    write(dir / "profiles.json",
          R"([{"id": "a", "indegree": 1, "outdegree": 2, "verified": false},
              {"id": 7, "indegree": 0, "outdegree": 0, "verified": true},
              {"id": "c", "indegree": 3, "outdegree": 3, "verified": false}])");
    auto net = read_dataset({dir / "edges.tsv", dir / "profiles.json", std::nullopt});
    CHECK(net.size() == 3);
    CHECK(net.edges().empty());
    CHECK(net.profile("7").category == Category::verified);
}

TEST_CASE("malformed input reports the line") {
    auto dir = scratch("bad");
    write(dir / "edges.tsv", "a\tb\n# ok\nc d\n");
    CHECK_THROWS_WITH_AS(read_edges(dir / "edges.tsv"), doctest::Contains("line 3"), ValidationError);
    write(dir / "tweets.jsonl", "{\"node_id\": \"a\", \"text\": \"hi\"}\n{oops}\n");
    CHECK_THROWS_WITH_AS(read_tweets(dir / "tweets.jsonl"), doctest::Contains("line 2"), ValidationError);
    write(dir / "edges.tsv", "a\tb\n");
    write(dir / "profiles.json", R"([{"id": "a", "indegree": 1, "outdegree": 0}])");
    CHECK_THROWS_WITH_AS(read_dataset({dir / "edges.tsv", dir / "profiles.json", std::nullopt}),
                         "unknown endpoint b", ValidationError);
}

TEST_CASE("partition and dataset files round-trip") {
    auto dir = scratch("roundtrip");
    auto p = testing::partition({{"a", "b"}, {"c"}, {"d", "e", "f"}});
    p.algorithm = "test";
    p.params = {{"seed", "3"}};
    write_partition(p, dir / "partition.json");
    auto q = read_partition(dir / "partition.json");
    CHECK(q.communities == p.communities);
    CHECK(q.algorithm == "test");
    CHECK(q.params == p.params);

    auto net = build_network({testing::profile("a", 1, 2, true), testing::profile("b", 3, 4, false)},
                             {{"a", "b"}}, {{"a", {"hello world", "second \"quoted\" tweet"}}});
    write_dataset(net, dir / "ds");
    auto back = read_dataset({dir / "ds" / "edges.tsv", dir / "ds" / "profiles.json", dir / "ds" / "tweets.jsonl"});
    CHECK(back.nodes() == net.nodes());
    CHECK(back.edges() == net.edges());
    CHECK(back.profiles() == net.profiles());
    CHECK(back.corpora() == net.corpora());
}

}
