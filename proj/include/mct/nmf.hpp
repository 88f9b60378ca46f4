#pragma once

#include "mct/core.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace mct {

/// Factorisation D ~ P Q^T with P, Q >= 0, optionally with a joint term
/// -lambda * Tr(P^T A P) rewarding rows of P that agree on an affinity A.
struct NmfProblem {
    DenseMatrix D;          // n x p, non-negative
    std::size_t k = 1;      // inner rank
    double lambda_joint = 0.0;
    std::optional<DenseMatrix> affinity;  // n x n, symmetric, non-negative
};

struct NmfOptions {
    int max_iter = 500;
    double tol = 1e-6;  // relative objective change; 0 runs all iterations
    std::uint64_t seed = 42;
    std::optional<DenseMatrix> initial_p;  // n x k
    std::optional<DenseMatrix> initial_q;  // p x k
};

struct NmfResult {
    DenseMatrix P;
    DenseMatrix Q;
    std::vector<double> objective;  // before the first update, then after each one
    int iterations = 0;
};

/// Denominator guard added to every multiplicative update.
inline constexpr double kNmfGuard = 1e-12;

/// Node x band indicator: band b holds the nodes whose network size
/// (indegree + outdegree) falls in the b-th rank quantile. Nodes tied with a
/// band boundary stay in the lower band.
DenseMatrix build_size_matrix(const NetworkData& net, std::size_t bands = 4);

/// ||D - P Q^T||_F^2
double nmf_reconstruction_error(const DenseMatrix& D, const DenseMatrix& P, const DenseMatrix& Q);

/// ||D - P Q^T||_F^2 - lambda * Tr(P^T A P)
double nmf_joint_objective(const NmfProblem& problem, const DenseMatrix& P, const DenseMatrix& Q);

/// Multiplicative updates
///   P <- P * (D Q) / (P Q^T Q)
///   Q <- Q * (D^T P) / (Q P^T P)
/// from seeded uniform (0, 1] starting values. Ignores the joint term.
NmfResult nmf_factorize(const NmfProblem& problem, const NmfOptions& opts);

/// As nmf_factorize, with the P-update numerator extended by
/// lambda * (A P) and P held in the box [0, 1] (P stands for the node-topic
/// matrix). The clipped step minimises the same separable surrogate over the
/// box, so the joint objective still never rises. With lambda = 0 it
/// reproduces nmf_factorize exactly.
NmfResult nmf_joint(const NmfProblem& problem, const NmfOptions& opts);

/// Row-wise argmax of P (ties to the lowest column); empty columns dropped.
Partition factors_to_partition(const DenseMatrix& P, const std::vector<NodeId>& ids);

}  // namespace mct
