#include "helpers.hpp"

#include "mct/spectral.hpp"

#include <doctest.h>

#include <random>

using namespace mct;

namespace {

// Structural result whose Laplacian comes straight from a weight matrix.
StructuralResult from_weights(const Eigen::MatrixXd& w, const std::string& prefix = "v") {
    StructuralResult r;
    const auto n = static_cast<std::size_t>(w.rows());
    for (std::size_t i = 0; i < n; ++i) {
        std::string id = std::to_string(i);
        r.nodes.push_back(prefix + std::string(3 - id.size(), '0') + id);
    }
    Eigen::MatrixXd l = -w;
    l.diagonal() = w.rowwise().sum();
    r.laplacian = DenseMatrix::from_eigen(l);
    return r;
}

Eigen::MatrixXd blocks(const std::vector<int>& sizes, double within, double between) {
    int n = 0;
    for (int s : sizes) n += s;
    Eigen::MatrixXd w = Eigen::MatrixXd::Constant(n, n, between);
    int start = 0;
    for (int s : sizes) {
        w.block(start, start, s, s).setConstant(within);
        start += s;
    }
    w.diagonal().setZero();
    return w;
}

std::vector<std::vector<std::string>> block_partition(const std::vector<int>& sizes, const std::string& prefix = "v") {
    std::vector<std::vector<std::string>> out;
    int next = 0;
    for (int s : sizes) {
        out.emplace_back();
        for (int i = 0; i < s; ++i, ++next) {
            std::string id = std::to_string(next);
            out.back().push_back(prefix + std::string(3 - id.size(), '0') + id);
        }
    }
    return out;
}

}  // namespace

TEST_SUITE("spectral") {

TEST_CASE("closed-form spectra") {
    DenseMatrix edge = DenseMatrix::from_eigen((Eigen::Matrix2d() << 1, -1, -1, 1).finished());
    auto e = laplacian_eigen(edge, 2);
    CHECK(e.values[0] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(e.values[1] == doctest::Approx(2.0));

    DenseMatrix path = DenseMatrix::from_eigen((Eigen::Matrix3d() << 1, -1, 0, -1, 2, -1, 0, -1, 1).finished());
    auto p = laplacian_eigen(path, 3);
    CHECK(std::abs(p.values[0]) < 1e-12);
    CHECK(p.values[1] == doctest::Approx(1.0));
    CHECK(p.values[2] == doctest::Approx(3.0));
    const Eigen::MatrixXd v = p.vectors.to_eigen();
    CHECK((v.transpose() * v - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() < 1e-8);

    auto tri = from_weights(blocks({3, 3}, 1.0, 0.0));
    auto t = laplacian_eigen(tri.laplacian, 3);
    CHECK(std::abs(t.values[0]) < 1e-9);
    CHECK(std::abs(t.values[1]) < 1e-9);
    CHECK(t.values[2] > 1.0);
}

TEST_CASE("eigen input errors") {
    DenseMatrix asym = DenseMatrix::from_eigen((Eigen::Matrix2d() << 1, -1, -0.5, 1).finished());
    CHECK_THROWS_AS(laplacian_eigen(asym, 1), ValidationError);
    DenseMatrix edge = DenseMatrix::from_eigen((Eigen::Matrix2d() << 1, -1, -1, 1).finished());
    CHECK_THROWS_AS(laplacian_eigen(edge, 3), ValidationError);
    SpectralConfig cfg;
    cfg.k = 3;
    CHECK_THROWS_AS(spectral_cluster(from_weights(Eigen::Matrix2d::Zero()), cfg), ValidationError);
}

TEST_CASE("eigengap picks the cluster count") {
    CHECK(eigengap_k({0.0, 0.0, 0.0, 2.5, 2.7, 3.0}) == 3);
    CHECK(eigengap_k({0.0, 4.0, 4.1}) == 1);
}

TEST_CASE("two disjoint cliques split into the cliques") {
    SpectralConfig cfg;
    cfg.k = 2;
    auto got = spectral_cluster(from_weights(blocks({4, 5}, 0.98, 0.0)), cfg);
    CHECK(got.communities == testing::partition(block_partition({4, 5})).communities);
    CHECK(got.algorithm == "spectral");
}

TEST_CASE("complete similarity graph with k = 1 gives one community") {
    SpectralConfig cfg;
    cfg.k = 1;
    auto got = spectral_cluster(from_weights(blocks({6}, 0.99, 0.0)), cfg);
    CHECK(got.size() == 1);
    CHECK(got.communities[0].size() == 6);
}

TEST_CASE("planted three-block graph is recovered, with or without k") {
    const std::vector<int> sizes{5, 7, 6};
    auto r = from_weights(blocks(sizes, 0.9, 0.0));
    const auto truth = testing::partition(block_partition(sizes)).communities;
    SpectralConfig cfg;
    cfg.k = 3;
    CHECK(spectral_cluster(r, cfg).communities == truth);
    cfg.k.reset();
    CHECK(spectral_cluster(r, cfg).communities == truth);
}

TEST_CASE("planted blocks minimise the k-means objective over every 3-labelling of a small embedding") {
    const std::vector<int> sizes{2, 3, 2};
    auto r = from_weights(blocks(sizes, 0.9, 0.0));
    auto eig = laplacian_eigen(r.laplacian, 3);
    const Eigen::MatrixXd x = eig.vectors.to_eigen();
    auto inertia = [&](const std::vector<std::size_t>& labels) {
        double total = 0;
        for (std::size_t c = 0; c < 3; ++c) {
            Eigen::RowVectorXd mean = Eigen::RowVectorXd::Zero(3);
            int count = 0;
            for (std::size_t i = 0; i < labels.size(); ++i)
                if (labels[i] == c) {
                    mean += x.row(static_cast<Eigen::Index>(i));
                    ++count;
                }
            if (count == 0) return std::numeric_limits<double>::infinity();
            mean /= count;
            for (std::size_t i = 0; i < labels.size(); ++i)
                if (labels[i] == c) total += (x.row(static_cast<Eigen::Index>(i)) - mean).squaredNorm();
        }
        return total;
    };
    const std::vector<std::size_t> planted{0, 0, 1, 1, 1, 2, 2};
    const double best_planted = inertia(planted);
    std::vector<std::size_t> labels(7, 0);
    double best = std::numeric_limits<double>::infinity();
    while (true) {
        best = std::min(best, inertia(labels));
        std::size_t i = 0;
        while (i < 7 && ++labels[i] == 3) labels[i++] = 0;
        if (i == 7) break;
    }
    CHECK(best_planted <= best + 1e-12);
    SpectralConfig cfg;
    cfg.k = 3;
    auto km = kmeans(x, 3, cfg);
    CHECK(km.inertia == doctest::Approx(best_planted).epsilon(1e-9));
}

TEST_CASE("fixed seed is bit-identical and relabelling does not change the grouping") {
    std::mt19937 gen(4);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const std::vector<int> sizes{6, 6, 6};
    Eigen::MatrixXd w = blocks(sizes, 0.9, 0.0);
    for (int i = 0; i < 18; ++i)
        for (int j = i + 1; j < 18; ++j)
            if (w(i, j) == 0.0 && u(gen) < 0.05) w(i, j) = w(j, i) = 0.2;
    SpectralConfig cfg;
    cfg.k = 3;
    auto a = spectral_cluster(from_weights(w), cfg);
    auto b = spectral_cluster(from_weights(w), cfg);
    CHECK(a.communities == b.communities);

    // Same graph under ids with a reversed order.
    auto rel = from_weights(w, "v");
    std::vector<NodeId> renamed;
    for (std::size_t i = 0; i < rel.nodes.size(); ++i) renamed.push_back("z" + std::to_string(100 - i));
    rel.nodes = renamed;
    auto c = spectral_cluster(rel, cfg);
    std::map<NodeId, NodeId> back;
    for (std::size_t i = 0; i < renamed.size(); ++i) back[renamed[i]] = from_weights(w).nodes[i];
    Partition mapped;
    for (const auto& comm : c.communities) {
        mapped.communities.emplace_back();
        for (const auto& id : comm) mapped.communities.back().push_back(back[id]);
    }
    mapped.canonicalize();
    CHECK(mapped.communities == a.communities);
}

}
