#pragma once

#include "mct/core.hpp"
#include "mct/reciprocity.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace mct {

struct SpectralConfig {
    std::optional<std::size_t> k;  // eigengap choice when empty
    int kmeans_restarts = 10;
    int kmeans_max_iter = 300;
    std::uint64_t seed = 42;
    double tol = 1e-9;
};

struct EigenPairs {
    std::vector<double> values;  // ascending
    DenseMatrix vectors;         // n x k, orthonormal columns
};

/// The k smallest eigenpairs of a symmetric matrix. Each eigenvector is signed
/// so that its largest-magnitude entry is positive.
/// Throws ValidationError if asymmetry exceeds 1e-9 or k > n.
EigenPairs laplacian_eigen(const DenseMatrix& laplacian, std::size_t k);

/// Index of the largest gap among the first min(n, 20) ascending eigenvalues,
/// plus one; i.e. the cluster count the spectrum suggests.
std::size_t eigengap_k(const std::vector<double>& ascending);

struct KMeansResult {
    std::vector<std::size_t> labels;
    double inertia = 0.0;  // within-cluster sum of squares
};

/// Seeded k-means++ with restarts; best restart by inertia.
KMeansResult kmeans(const Eigen::MatrixXd& points, std::size_t k, const SpectralConfig& cfg);

/// Clusters the rows of the bottom-k Laplacian eigenvectors.
Partition spectral_cluster(const StructuralResult& result, const SpectralConfig& cfg);

}  // namespace mct
