#include "helpers.hpp"

#include <doctest.h>

#include <random>

using namespace mct;
using testing::profile;

TEST_SUITE("core") {

TEST_CASE("minimal network keeps both directions of a mutual pair") {
    auto net = build_network({profile("a", 1, 1, false), profile("b", 1, 1, false), profile("c", 0, 0, false)},
                             {{"a", "b"}, {"b", "a"}});
    CHECK(net.size() == 3);
    CHECK(net.edges().size() == 2);
    CHECK(net.has_edge("a", "b"));
    CHECK(net.has_edge("b", "a"));
    CHECK_FALSE(net.has_edge("a", "c"));
}

TEST_CASE("self-loops and dangling endpoints are rejected with the node named") {
    CHECK_THROWS_WITH_AS(build_network({profile("a", 0, 0, false)}, {{"a", "a"}}), "self-loop on node a",
                         ValidationError);
    CHECK_THROWS_WITH_AS(build_network({profile("a", 0, 0, false)}, {{"a", "z"}}), "unknown endpoint z",
                         ValidationError);
    CHECK_THROWS_AS(build_network({profile("a", 0, 0, false), profile("a", 1, 1, false)}, {}), ValidationError);
    CHECK_THROWS_AS(build_network({profile("a", -1, 0, false)}, {}), ValidationError);
}

TEST_CASE("duplicate directed edges collapse") {
    auto net = build_network({profile("a", 0, 0, false), profile("b", 0, 0, false)}, {{"a", "b"}, {"a", "b"}});
    CHECK(net.edges().size() == 1);
}

TEST_CASE("missing profile lookups name the node") {
    auto net = build_network({}, {{"a", "b"}}, {}, {"a", "b"});
    CHECK_THROWS_WITH_AS(net.profile("a"), "missing profile for node a", ValidationError);
}

TEST_CASE("undirected view splits mutual and one-way ties") {
    auto base = [](std::vector<Edge> e) { return build_network({}, std::move(e), {}, {"a", "b", "c"}); };
    {
        auto v = undirected_view(base({{"a", "b"}, {"b", "a"}}));
        CHECK(v.reciprocal == std::vector<NodePair>{{"a", "b"}});
        CHECK(v.one_edge.empty());
    }
    {
        auto v = undirected_view(base({{"a", "b"}}));
        CHECK(v.reciprocal.empty());
        CHECK(v.one_edge == std::vector<Edge>{{"a", "b"}});
    }
    {
        auto v = undirected_view(base({{"a", "b"}, {"b", "a"}, {"b", "c"}}));
        CHECK(v.reciprocal == std::vector<NodePair>{{"a", "b"}});
        CHECK(v.one_edge == std::vector<Edge>{{"b", "c"}});
    }
}

TEST_CASE("one-way count equals edges minus twice the mutual pairs on random digraphs") {
    std::mt19937 gen(7);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<NodeId> ids;
        for (int i = 0; i < 8; ++i) ids.push_back("n" + std::to_string(i));
        std::vector<Edge> edges;
        for (const auto& a : ids)
            for (const auto& b : ids)
                if (a != b && gen() % 3 == 0) edges.push_back({a, b});
        auto net = build_network({}, edges, {}, ids);
        auto v = undirected_view(net);
        CHECK(2 * v.reciprocal.size() <= net.edges().size());
        CHECK(v.one_edge.size() == net.edges().size() - 2 * v.reciprocal.size());
    }
}

TEST_CASE("undirected projection merges both directions") {
    auto net = build_network({}, {{"a", "b"}, {"b", "a"}, {"c", "b"}}, {}, {"a", "b", "c"});
    auto g = undirected_graph(net);
    CHECK(g.num_edges() == 2);
    CHECK(g.degree(1) == 2);
}

TEST_CASE("partitions canonicalise and validate") {
    Partition p;
    p.communities = {{"c", "b"}, {}, {"a"}};
    p.canonicalize();
    CHECK(p.communities == std::vector<std::vector<NodeId>>{{"a"}, {"b", "c"}});
    CHECK_NOTHROW(validate_partition(p, {"a", "b", "c"}));

    Partition overlap;
    overlap.communities = {{"a", "b"}, {"b"}};
    CHECK_THROWS_AS(validate_partition(overlap, {"a", "b"}), ValidationError);
    Partition stranger;
    stranger.communities = {{"x"}};
    CHECK_THROWS_AS(validate_partition(stranger, {"a"}), ValidationError);
}

TEST_CASE("labels round-trip through partitions; missing nodes become singletons") {
    std::vector<NodeId> ids{"a", "b", "c", "d"};
    auto p = partition_from_labels(ids, {5, 5, 2, 2}, "x");
    CHECK(p.size() == 2);
    auto labels = labels_for(p, ids);
    CHECK(labels[0] == labels[1]);
    CHECK(labels[2] == labels[3]);
    CHECK(labels[0] != labels[2]);

    Partition partial;
    partial.communities = {{"a", "b"}};
    auto l2 = labels_for(partial, ids);
    CHECK(l2[0] == l2[1]);
    CHECK(l2[2] != l2[3]);
    CHECK(l2[2] != l2[0]);
}

TEST_CASE("dense matrix bridges to Eigen and checks symmetry") {
    Eigen::MatrixXd m(2, 3);
    m << 1, 2, 3, 4, 5, 6;
    auto d = DenseMatrix::from_eigen(m);
    CHECK(d.rows() == 2);
    CHECK(d.cols() == 3);
    CHECK(d(1, 2) == 6);
    CHECK(d.to_eigen() == m);
    CHECK(d.all_finite());
    CHECK_FALSE(d.is_symmetric(1e-9));

    DenseMatrix s(2, 2);
    s(0, 1) = 1.0;
    s(1, 0) = 1.0 + 1e-12;
    CHECK(s.is_symmetric(1e-9));
    CHECK_FALSE(s.is_symmetric(1e-15));
    s(0, 0) = std::numeric_limits<double>::quiet_NaN();
    CHECK_FALSE(s.all_finite());
}

}
