#include "helpers.hpp"

#include "mct/nmf.hpp"

#include <doctest.h>

#include <random>

using namespace mct;
using testing::profile;

namespace {

DenseMatrix random_matrix(std::mt19937& gen, std::size_t r, std::size_t c) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    DenseMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = u(gen);
    return m;
}

bool non_negative(const DenseMatrix& m) {
    return std::all_of(m.data().begin(), m.data().end(), [](double x) { return x >= 0.0; });
}

NetworkData sized(const std::vector<std::int64_t>& sizes) {
    std::vector<NodeProfile> ps;
    for (std::size_t i = 0; i < sizes.size(); ++i) ps.push_back(profile("n" + std::to_string(i), sizes[i], 0, false));
    return build_network(ps, {});
}

}  // namespace

TEST_SUITE("nmf") {

TEST_CASE("size bands split on rank quantiles") {
    auto m = build_size_matrix(sized({1, 2, 3, 4}), 2);
    CHECK(m.to_eigen() == (Eigen::MatrixXd(4, 2) << 1, 0, 1, 0, 0, 1, 0, 1).finished());
    auto one = build_size_matrix(sized({5, 1, 9}), 1);
    CHECK(one.to_eigen() == Eigen::MatrixXd::Ones(3, 1));
    auto flat = build_size_matrix(sized({3, 3, 3, 3, 3}), 4);
    CHECK(flat.to_eigen().col(0) == Eigen::VectorXd::Ones(5));
    CHECK(flat.to_eigen().rightCols(3).isZero());
    CHECK_THROWS_AS(build_size_matrix(sized({1}), 0), ValidationError);
    CHECK_THROWS_AS(build_size_matrix(build_network({}, {}, {}, {"x"}), 2), ValidationError);
}

TEST_CASE("exact factors are a fixed point") {
    std::mt19937 gen(1);
    auto p0 = random_matrix(gen, 6, 2);
    auto q0 = random_matrix(gen, 5, 2);
    NmfProblem prob;
    prob.D = DenseMatrix::from_eigen(p0.to_eigen() * q0.to_eigen().transpose());
    prob.k = 2;
    NmfOptions opts;
    opts.max_iter = 1;
    opts.initial_p = p0;
    opts.initial_q = q0;
    auto r = nmf_factorize(prob, opts);
    CHECK((r.P.to_eigen() - p0.to_eigen()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((r.Q.to_eigen() - q0.to_eigen()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("rank-one all-ones matrix is reconstructed") {
    NmfProblem prob;
    prob.D = DenseMatrix(2, 2, 1.0);
    prob.k = 1;
    NmfOptions opts;
    opts.tol = 0.0;
    auto r = nmf_factorize(prob, opts);
    CHECK(std::sqrt(nmf_reconstruction_error(prob.D, r.P, r.Q)) < 1e-6);
}

TEST_CASE("objective never rises and factors stay non-negative") {
    std::mt19937 gen(2);
    for (int trial = 0; trial < 5; ++trial) {
        NmfProblem prob;
        prob.D = random_matrix(gen, 50, 20);
        prob.k = 3;
        NmfOptions opts;
        opts.tol = 0.0;
        opts.seed = static_cast<std::uint64_t>(trial);
        auto r = nmf_factorize(prob, opts);
        REQUIRE(r.objective.size() == 501);
        for (std::size_t t = 1; t < r.objective.size(); ++t)
            CHECK(r.objective[t] <= r.objective[t - 1] * (1.0 + 1e-10));
        CHECK(r.objective.back() == doctest::Approx(nmf_reconstruction_error(prob.D, r.P, r.Q)).epsilon(1e-12));
        CHECK(non_negative(r.P));
        CHECK(non_negative(r.Q));
    }
}

TEST_CASE("tolerance stops early") {
    std::mt19937 gen(3);
    NmfProblem prob;
    prob.D = random_matrix(gen, 20, 10);
    prob.k = 2;
    NmfOptions opts;
    opts.tol = 1e-3;
    auto r = nmf_factorize(prob, opts);
    CHECK(r.iterations < 500);
    CHECK(r.objective.size() == static_cast<std::size_t>(r.iterations) + 1);
}

TEST_CASE("scaling the factors leaves the objective unchanged") {
    std::mt19937 gen(4);
    auto d = random_matrix(gen, 7, 5);
    auto p = random_matrix(gen, 7, 2);
    auto q = random_matrix(gen, 5, 2);
    const double base = nmf_reconstruction_error(d, p, q);
    for (double c : {0.5, 3.0, 17.0}) {
        auto pc = DenseMatrix::from_eigen(p.to_eigen() * c);
        auto qc = DenseMatrix::from_eigen(q.to_eigen() / c);
        CHECK(nmf_reconstruction_error(d, pc, qc) == doctest::Approx(base).epsilon(1e-12));
    }
}

TEST_CASE("joint updates with lambda zero reproduce plain NMF") {
    std::mt19937 gen(5);
    NmfProblem prob;
    prob.D = random_matrix(gen, 12, 6);
    prob.k = 2;
    prob.affinity = DenseMatrix::from_eigen(Eigen::MatrixXd::Identity(12, 12));
    prob.lambda_joint = 0.0;
    NmfOptions opts;
    auto a = nmf_factorize(prob, opts);
    auto b = nmf_joint(prob, opts);
    CHECK(a.objective == b.objective);
    CHECK(a.P.data() == b.P.data());
    CHECK(a.Q.data() == b.Q.data());
}

TEST_CASE("joint objective with an identity affinity still decreases") {
    std::mt19937 gen(6);
    NmfProblem prob;
    prob.D = random_matrix(gen, 15, 8);
    prob.k = 3;
    prob.affinity = DenseMatrix::from_eigen(Eigen::MatrixXd::Identity(15, 15));
    prob.lambda_joint = 0.01;
    NmfOptions opts;
    opts.tol = 0.0;
    opts.max_iter = 300;
    auto r = nmf_joint(prob, opts);
    for (std::size_t t = 1; t < r.objective.size(); ++t)
        CHECK(r.objective[t] <= r.objective[t - 1] + 1e-10 * std::abs(r.objective[t - 1]));
    CHECK(r.objective.back() == doctest::Approx(nmf_joint_objective(prob, r.P, r.Q)).epsilon(1e-12));
    CHECK(non_negative(r.P));
}

TEST_CASE("block affinity and block data give block assignments") {
    NmfProblem prob;
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(8, 4);
    d.block(0, 0, 4, 2).setOnes();
    d.block(4, 2, 4, 2).setOnes();
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(8, 8);
    a.block(0, 0, 4, 4).setOnes();
    a.block(4, 4, 4, 4).setOnes();
    prob.D = DenseMatrix::from_eigen(d);
    prob.affinity = DenseMatrix::from_eigen(a);
    prob.k = 2;
    prob.lambda_joint = 0.1;
    std::vector<NodeId> ids;
    for (int i = 0; i < 8; ++i) ids.push_back("v" + std::to_string(i));
    auto r = nmf_joint(prob, {});
    auto part = factors_to_partition(r.P, ids);
    // exhaustive oracle: the block split is the only 2-labelling with zero cross-block affinity
    std::vector<std::vector<NodeId>> best;
    for (unsigned mask = 1; mask < 255; ++mask) {
        double cross = 0;
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j)
                if (((mask >> i) & 1u) != ((mask >> j) & 1u)) cross += a(i, j);
        if (cross == 0) {
            std::vector<std::vector<NodeId>> c(2);
            for (int i = 0; i < 8; ++i) c[(mask >> i) & 1u].push_back(ids[static_cast<std::size_t>(i)]);
            best = testing::partition(c).communities;
        }
    }
    CHECK(part.communities == best);
}

TEST_CASE("argmax extraction and its tie rule") {
    std::vector<NodeId> ids{"a", "b"};
    auto p = DenseMatrix::from_eigen((Eigen::Matrix2d() << 0.9, 0.1, 0.2, 0.8).finished());
    CHECK(factors_to_partition(p, ids).communities == std::vector<std::vector<NodeId>>{{"a"}, {"b"}});
    auto tied = DenseMatrix(3, 2, 0.5);
    CHECK(factors_to_partition(tied, {"a", "b", "c"}).size() == 1);
}

TEST_CASE("invalid problems are rejected") {
    NmfProblem prob;
    prob.D = DenseMatrix(3, 3, 1.0);
    prob.k = 4;
    CHECK_THROWS_AS(nmf_factorize(prob, {}), ValidationError);
    prob.k = 2;
    prob.D(0, 0) = -1.0;
    CHECK_THROWS_AS(nmf_factorize(prob, {}), ValidationError);
    prob.D(0, 0) = 1.0;
    Eigen::Matrix3d a = Eigen::Matrix3d::Identity();
    a(0, 1) = 0.5;
    prob.affinity = DenseMatrix::from_eigen(a);
    prob.lambda_joint = 0.1;
    CHECK_THROWS_AS(nmf_joint(prob, {}), ValidationError);
}

}
