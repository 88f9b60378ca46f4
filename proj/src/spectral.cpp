#include "mct/spectral.hpp"

#include "rng.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <limits>

namespace mct {

EigenPairs laplacian_eigen(const DenseMatrix& laplacian, std::size_t k) {
    const std::size_t n = laplacian.rows();
    if (laplacian.cols() != n) throw ValidationError("Laplacian must be square");
    if (!laplacian.is_symmetric(1e-9)) throw ValidationError("Laplacian is not symmetric");
    if (k > n) throw ValidationError("requested more eigenpairs than rows");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(laplacian.to_eigen());
    if (solver.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");

    EigenPairs out;
    const auto& vals = solver.eigenvalues();
    Eigen::MatrixXd vecs = solver.eigenvectors().leftCols(static_cast<Eigen::Index>(k));
    for (Eigen::Index c = 0; c < vecs.cols(); ++c) {
        Eigen::Index arg = 0;
        vecs.col(c).cwiseAbs().maxCoeff(&arg);
        if (vecs(arg, c) < 0) vecs.col(c) *= -1.0;
    }
    for (std::size_t i = 0; i < k; ++i) out.values.push_back(vals(static_cast<Eigen::Index>(i)));
    out.vectors = DenseMatrix::from_eigen(vecs);
    return out;
}

std::size_t eigengap_k(const std::vector<double>& ascending) {
    const std::size_t m = std::min<std::size_t>(ascending.size(), 20);
    if (m < 2) return 1;
    std::size_t best = 0;
    double best_gap = -1.0;
    for (std::size_t i = 0; i + 1 < m; ++i) {
        const double gap = ascending[i + 1] - ascending[i];
        if (gap > best_gap + 1e-12) {
            best_gap = gap;
            best = i;
        }
    }
    return best + 1;
}

namespace {

std::vector<std::size_t> assign(const Eigen::MatrixXd& pts, const Eigen::MatrixXd& centers,
                                double& inertia) {
    std::vector<std::size_t> labels(static_cast<std::size_t>(pts.rows()));
    inertia = 0.0;
    for (Eigen::Index i = 0; i < pts.rows(); ++i) {
        double best = std::numeric_limits<double>::infinity();
        std::size_t arg = 0;
        for (Eigen::Index c = 0; c < centers.rows(); ++c) {
            const double d = (pts.row(i) - centers.row(c)).squaredNorm();
            if (d < best) {
                best = d;
                arg = static_cast<std::size_t>(c);
            }
        }
        labels[static_cast<std::size_t>(i)] = arg;
        inertia += best;
    }
    return labels;
}

Eigen::MatrixXd plus_plus_init(const Eigen::MatrixXd& pts, std::size_t k, Rng& rng) {
    const auto n = static_cast<std::size_t>(pts.rows());
    Eigen::MatrixXd centers(static_cast<Eigen::Index>(k), pts.cols());
    centers.row(0) = pts.row(static_cast<Eigen::Index>(rng.below(n)));
    std::vector<double> d2(n, std::numeric_limits<double>::infinity());
    for (std::size_t c = 1; c < k; ++c) {
        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double d = (pts.row(static_cast<Eigen::Index>(i)) -
                              centers.row(static_cast<Eigen::Index>(c - 1)))
                                 .squaredNorm();
            d2[i] = std::min(d2[i], d);
            total += d2[i];
        }
        std::size_t pick = 0;
        if (total <= 0.0) {
            pick = rng.below(n);
        } else {
            double u = rng.uniform() * total;
            for (pick = 0; pick + 1 < n; ++pick) {
                u -= d2[pick];
                if (u < 0.0) break;
            }
        }
        centers.row(static_cast<Eigen::Index>(c)) = pts.row(static_cast<Eigen::Index>(pick));
    }
    return centers;
}

}  // namespace

KMeansResult kmeans(const Eigen::MatrixXd& points, std::size_t k, const SpectralConfig& cfg) {
    const auto n = static_cast<std::size_t>(points.rows());
    if (k == 0 || k > n) throw ValidationError("k-means needs 1 <= k <= n");
    Rng rng(cfg.seed);
    KMeansResult best;
    best.inertia = std::numeric_limits<double>::infinity();
    for (int r = 0; r < std::max(1, cfg.kmeans_restarts); ++r) {
        Eigen::MatrixXd centers = plus_plus_init(points, k, rng);
        double inertia = 0.0;
        auto labels = assign(points, centers, inertia);
        for (int it = 0; it < cfg.kmeans_max_iter; ++it) {
            Eigen::MatrixXd sums = Eigen::MatrixXd::Zero(centers.rows(), centers.cols());
            std::vector<std::size_t> counts(k, 0);
            for (std::size_t i = 0; i < n; ++i) {
                sums.row(static_cast<Eigen::Index>(labels[i])) += points.row(static_cast<Eigen::Index>(i));
                ++counts[labels[i]];
            }
            for (std::size_t c = 0; c < k; ++c)
                if (counts[c] > 0)
                    centers.row(static_cast<Eigen::Index>(c)) =
                        sums.row(static_cast<Eigen::Index>(c)) / static_cast<double>(counts[c]);
            const double previous = inertia;
            auto next = assign(points, centers, inertia);
            const bool same = next == labels;
            labels = std::move(next);
            if (same || previous - inertia <= cfg.tol * std::max(1.0, previous)) break;
        }
        if (inertia < best.inertia) {
            best.inertia = inertia;
            best.labels = std::move(labels);
        }
    }
    return best;
}

Partition spectral_cluster(const StructuralResult& result, const SpectralConfig& cfg) {
    const std::size_t n = result.nodes.size();
    if (n == 0) throw ValidationError("spectral clustering needs at least one node");
    if (cfg.k && (*cfg.k == 0 || *cfg.k > n)) throw ValidationError("cluster count k must lie in [1, n]");

    std::size_t k = 0;
    EigenPairs eig;
    if (cfg.k) {
        k = *cfg.k;
        eig = laplacian_eigen(result.laplacian, k);
    } else {
        eig = laplacian_eigen(result.laplacian, std::min<std::size_t>(n, 20));
        k = eigengap_k(eig.values);
        Eigen::MatrixXd v = eig.vectors.to_eigen().leftCols(static_cast<Eigen::Index>(k));
        eig.vectors = DenseMatrix::from_eigen(v);
    }
    const auto km = kmeans(eig.vectors.to_eigen(), k, cfg);
    return partition_from_labels(result.nodes, km.labels, "spectral",
                                 {{"k", std::to_string(k)}, {"seed", std::to_string(cfg.seed)}});
}

}  // namespace mct
