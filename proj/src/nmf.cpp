#include "mct/nmf.hpp"

#include "rng.hpp"

#include <algorithm>
#include <cmath>

namespace mct {

DenseMatrix build_size_matrix(const NetworkData& net, std::size_t bands) {
    if (bands == 0) throw ValidationError("band count must be at least 1");
    const auto& ids = net.nodes();
    const std::size_t n = ids.size();
    std::vector<std::int64_t> sizes;
    sizes.reserve(n);
    for (const auto& id : ids) {
        const auto& p = net.profile(id);
        sizes.push_back(p.indegree + p.outdegree);
    }
    std::vector<std::int64_t> sorted = sizes;
    std::sort(sorted.begin(), sorted.end());
    // Upper edge of band b-1: the last value in the b-th rank slice.
    std::vector<std::int64_t> cuts;
    for (std::size_t b = 1; b < bands && n > 0; ++b) {
        const std::size_t pos = (b * n + bands - 1) / bands;
        cuts.push_back(sorted[pos == 0 ? 0 : pos - 1]);
    }
    DenseMatrix out(n, bands);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t band = 0;
        for (auto c : cuts)
            if (sizes[i] > c) ++band;
        out(i, band) = 1.0;
    }
    out.row_labels = ids;
    return out;
}

double nmf_reconstruction_error(const DenseMatrix& D, const DenseMatrix& P, const DenseMatrix& Q) {
    const Eigen::MatrixXd r = D.to_eigen() - P.to_eigen() * Q.to_eigen().transpose();
    return r.squaredNorm();
}

double nmf_joint_objective(const NmfProblem& problem, const DenseMatrix& P, const DenseMatrix& Q) {
    double obj = nmf_reconstruction_error(problem.D, P, Q);
    if (problem.affinity && problem.lambda_joint != 0.0) {
        const Eigen::MatrixXd p = P.to_eigen();
        obj -= problem.lambda_joint * (p.transpose() * problem.affinity->to_eigen() * p).trace();
    }
    return obj;
}

namespace {

void check_problem(const NmfProblem& problem, bool joint) {
    const auto& D = problem.D;
    if (D.rows() == 0 || D.cols() == 0) throw ValidationError("NMF input matrix is empty");
    if (!D.all_finite()) throw ValidationError("NMF input has non-finite entries");
    for (double x : D.data())
        if (x < 0.0) throw ValidationError("NMF input has a negative entry");
    if (problem.k == 0 || problem.k > std::min(D.rows(), D.cols()))
        throw ValidationError("NMF rank must lie in [1, min(n, p)]");
    if (joint) {
        if (problem.lambda_joint < 0.0) throw ValidationError("joint weight lambda must be >= 0");
        if (problem.affinity) {
            const auto& A = *problem.affinity;
            if (A.rows() != D.rows() || A.cols() != D.rows())
                throw ValidationError("affinity must be n x n");
            if (!A.is_symmetric(1e-12)) throw ValidationError("affinity is not symmetric");
            for (double x : A.data())
                if (x < 0.0) throw ValidationError("affinity has a negative entry");
        }
    }
}

Eigen::MatrixXd random_factor(std::size_t rows, std::size_t cols, Rng& rng) {
    Eigen::MatrixXd m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = rng.uniform_open_closed();
    return m;
}

NmfResult run_updates(const NmfProblem& problem, const NmfOptions& opts, bool joint) {
    check_problem(problem, joint);
    const Eigen::MatrixXd D = problem.D.to_eigen();
    const auto n = static_cast<std::size_t>(D.rows());
    const auto p = static_cast<std::size_t>(D.cols());
    const std::size_t k = problem.k;

    Rng rng(opts.seed);
    Eigen::MatrixXd P = opts.initial_p ? opts.initial_p->to_eigen() : random_factor(n, k, rng);
    Eigen::MatrixXd Q = opts.initial_q ? opts.initial_q->to_eigen() : random_factor(p, k, rng);
    if (static_cast<std::size_t>(P.rows()) != n || static_cast<std::size_t>(P.cols()) != k ||
        static_cast<std::size_t>(Q.rows()) != p || static_cast<std::size_t>(Q.cols()) != k)
        throw ValidationError("initial factors have the wrong shape");

    const bool use_affinity = joint && problem.affinity && problem.lambda_joint != 0.0;
    Eigen::MatrixXd A;
    if (use_affinity) A = problem.affinity->to_eigen();
    const double lambda = problem.lambda_joint;

    auto objective = [&] {
        double obj = (D - P * Q.transpose()).squaredNorm();
        if (use_affinity) obj -= lambda * (P.transpose() * A * P).trace();
        return obj;
    };

    NmfResult res;
    res.objective.push_back(objective());
    for (int it = 0; it < opts.max_iter; ++it) {
        Eigen::MatrixXd numer_p = D * Q;
        if (use_affinity) numer_p += lambda * (A * P);
        const Eigen::MatrixXd denom_p = P * (Q.transpose() * Q);
        P = P.cwiseProduct(numer_p).cwiseQuotient(denom_p +
                                                   Eigen::MatrixXd::Constant(P.rows(), P.cols(), kNmfGuard));
        if (use_affinity) P = P.cwiseMin(1.0);

        const Eigen::MatrixXd numer_q = D.transpose() * P;
        const Eigen::MatrixXd denom_q = Q * (P.transpose() * P);
        Q = Q.cwiseProduct(numer_q).cwiseQuotient(denom_q +
                                                   Eigen::MatrixXd::Constant(Q.rows(), Q.cols(), kNmfGuard));

        const double obj = objective();
        if (!std::isfinite(obj)) throw std::runtime_error("NMF objective became non-finite");
        const double prev = res.objective.back();
        res.objective.push_back(obj);
        res.iterations = it + 1;
        if (opts.tol > 0.0 && std::abs(prev - obj) <= opts.tol * std::max(std::abs(prev), 1e-300)) break;
    }
    res.P = DenseMatrix::from_eigen(P);
    res.Q = DenseMatrix::from_eigen(Q);
    res.P.row_labels = problem.D.row_labels;
    return res;
}

}  // namespace

NmfResult nmf_factorize(const NmfProblem& problem, const NmfOptions& opts) {
    return run_updates(problem, opts, false);
}

NmfResult nmf_joint(const NmfProblem& problem, const NmfOptions& opts) {
    return run_updates(problem, opts, true);
}

Partition factors_to_partition(const DenseMatrix& P, const std::vector<NodeId>& ids) {
    if (ids.size() != P.rows()) throw ValidationError("factor rows do not match node ids");
    std::vector<std::size_t> labels(P.rows(), 0);
    for (std::size_t i = 0; i < P.rows(); ++i) {
        std::size_t arg = 0;
        for (std::size_t s = 1; s < P.cols(); ++s)
            if (P(i, s) > P(i, arg)) arg = s;
        labels[i] = arg;
    }
    return partition_from_labels(ids, labels, "nmf");
}

}  // namespace mct
