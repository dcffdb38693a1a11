#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

#include "covertime/graph.hpp"

namespace covertime {

inline constexpr std::size_t kDenseCap = 6000;

inline Eigen::MatrixXd adjacency_matrix(const Graph& g) {
    const auto n = static_cast<Eigen::Index>(g.node_count());
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (NodeId u = 0; u < g.node_count(); ++u) {
        for (NodeId v : g.neighbors(u)) a(u, v) = 1.0;
    }
    return a;
}

inline Eigen::MatrixXd laplacian_matrix(const Graph& g) {
    Eigen::MatrixXd l = -adjacency_matrix(g);
    for (NodeId u = 0; u < g.node_count(); ++u) l(u, u) = g.degree(u);
    return l;
}

// Pseudoinverse through the shifted inverse (L + J/N)^{-1} - J/N. Cheaper than
// a full eigendecomposition and numerically independent of it, which the test
// suite uses as a second route.
inline Eigen::MatrixXd pseudoinverse_shifted(const Graph& g) {
    const auto n = static_cast<Eigen::Index>(g.node_count());
    if (n == 0) throw std::domain_error("pseudoinverse: empty graph");
    const double jn = 1.0 / static_cast<double>(n);
    Eigen::MatrixXd shifted = laplacian_matrix(g);
    shifted.array() += jn;
    Eigen::LLT<Eigen::MatrixXd> llt(shifted);
    if (llt.info() != Eigen::Success) {
        throw std::runtime_error("pseudoinverse: Cholesky factorization failed");
    }
    Eigen::MatrixXd inv = llt.solve(Eigen::MatrixXd::Identity(n, n));
    inv.array() -= jn;
    return inv;
}

struct SpectralData {
    Eigen::MatrixXd laplacian;
    Eigen::MatrixXd pseudoinverse;
    Eigen::VectorXd eigenvalues;   // ascending; eigenvalues(0) ~ 0
    Eigen::MatrixXd eigenvectors;  // orthonormal columns, matching order
    double walk_gap = 0.0;         // 1 - sigma_2 of T = D^{-1} A
};

// Full dense spectral analysis: Laplacian eigendecomposition, pseudoinverse
// assembled from the nonzero modes, and the walk-matrix spectral gap via the
// degree-symmetrized form D^{-1/2} A D^{-1/2}.
inline SpectralData spectral(const Graph& g, std::size_t dense_cap = kDenseCap) {
    const std::size_t n = g.node_count();
    if (n == 0) throw std::domain_error("spectral: empty graph");
    if (n > dense_cap) {
        throw std::length_error("spectral: N=" + std::to_string(n) + " exceeds dense cap " +
                                std::to_string(dense_cap) + "; use the solver path");
    }
    if (!is_connected(g)) {
        throw std::domain_error("spectral: disconnected graph (lambda_2 ~ 0)");
    }

    SpectralData s;
    s.laplacian = laplacian_matrix(g);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(s.laplacian);
    if (eig.info() != Eigen::Success) throw std::runtime_error("spectral: eigensolver failed");
    s.eigenvalues = eig.eigenvalues();
    s.eigenvectors = eig.eigenvectors();

    const auto ni = static_cast<Eigen::Index>(n);
    s.pseudoinverse = Eigen::MatrixXd::Zero(ni, ni);
    for (Eigen::Index k = 1; k < ni; ++k) {
        s.pseudoinverse.noalias() +=
            (1.0 / s.eigenvalues(k)) * s.eigenvectors.col(k) * s.eigenvectors.col(k).transpose();
    }

    if (n == 1) {
        s.walk_gap = 1.0;
        return s;
    }
    Eigen::VectorXd dinv_sqrt(ni);
    for (NodeId v = 0; v < n; ++v) {
        const double d = g.degree(v);
        if (d == 0.0) throw std::domain_error("spectral: isolated node " + std::to_string(v));
        dinv_sqrt(v) = 1.0 / std::sqrt(d);
    }
    Eigen::MatrixXd sym = dinv_sqrt.asDiagonal() * adjacency_matrix(g) * dinv_sqrt.asDiagonal();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> walk_eig(sym);
    if (walk_eig.info() != Eigen::Success) throw std::runtime_error("spectral: walk eigensolver failed");
    s.walk_gap = 1.0 - walk_eig.eigenvalues()(ni - 2);
    return s;
}

// Effective resistance from pseudoinverse entries.
inline double resistance_pair(const SpectralData& s, NodeId i, NodeId j) {
    const auto n = static_cast<std::size_t>(s.pseudoinverse.rows());
    if (i >= n || j >= n) throw std::out_of_range("resistance_pair: node out of range");
    if (i == j) return 0.0;
    return s.pseudoinverse(i, i) + s.pseudoinverse(j, j) - 2.0 * s.pseudoinverse(i, j);
}

// Same quantity through the eigenmode sum; used to cross-check resistance_pair.
inline double resistance_pair_spectral(const SpectralData& s, NodeId i, NodeId j) {
    const auto n = static_cast<std::size_t>(s.eigenvectors.rows());
    if (i >= n || j >= n) throw std::out_of_range("resistance_pair_spectral: node out of range");
    if (i == j) return 0.0;
    double sum = 0.0;
    for (Eigen::Index k = 1; k < s.eigenvectors.cols(); ++k) {
        const double diff = s.eigenvectors(i, k) - s.eigenvectors(j, k);
        sum += diff * diff / s.eigenvalues(k);
    }
    return sum;
}

}  // namespace covertime
