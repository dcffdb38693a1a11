#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "covertime/generators.hpp"
#include "covertime/graph.hpp"
#include "covertime/spectral.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace covertime {

enum class ResistanceMethod { dense, solver };

inline constexpr std::uint32_t kApollonianRecursionMaxGeneration = 7;

struct ResistanceTable {
    Eigen::MatrixXd omega;               // symmetric, zero diagonal
    double diameter = 0.0;               // max entry
    std::pair<NodeId, NodeId> argmax_pair{0, 0};
};

namespace detail {

// Max scan with lexicographic tie-break on (i,j), i < j.
inline void finish_table(ResistanceTable& t) {
    const auto n = t.omega.rows();
    t.diameter = 0.0;
    t.argmax_pair = {0, 0};
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            if (t.omega(i, j) > t.diameter) {
                t.diameter = t.omega(i, j);
                t.argmax_pair = {static_cast<NodeId>(i), static_cast<NodeId>(j)};
            }
        }
    }
}

inline ResistanceTable table_from_pinv(const Eigen::MatrixXd& pinv) {
    ResistanceTable t;
    const auto n = pinv.rows();
    const Eigen::VectorXd diag = pinv.diagonal();
    t.omega = diag.replicate(1, n) + diag.transpose().replicate(n, 1) - 2.0 * pinv;
    t.omega.diagonal().setZero();
    finish_table(t);
    return t;
}

// Jacobi-preconditioned CG on the operator x -> L x + mean(x) * 1. The
// operator equals L + J/N, which is SPD for a connected graph, and solving
// (L + J/N) x = e_i - 1/N yields column i of the pseudoinverse directly.
inline Eigen::VectorXd solve_pinv_column(const Graph& g, NodeId column, double rel_tol,
                                         std::size_t max_iters) {
    const auto n = static_cast<Eigen::Index>(g.node_count());
    const double jn = 1.0 / static_cast<double>(n);
    const auto apply = [&](const Eigen::VectorXd& x, Eigen::VectorXd& out) {
        const double mean = x.mean();
        for (NodeId u = 0; u < g.node_count(); ++u) {
            double acc = g.degree(u) * x(u);
            for (NodeId v : g.neighbors(u)) acc -= x(v);
            out(u) = acc + mean;
        }
    };
    Eigen::VectorXd b = Eigen::VectorXd::Constant(n, -jn);
    b(column) += 1.0;
    const double b_norm = b.norm();

    Eigen::VectorXd precond(n);
    for (NodeId u = 0; u < g.node_count(); ++u) precond(u) = 1.0 / (g.degree(u) + jn);

    Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd r = b;
    Eigen::VectorXd z = precond.asDiagonal() * r;
    Eigen::VectorXd p = z;
    Eigen::VectorXd ap(n);
    double rz = r.dot(z);
    for (std::size_t it = 0; it < max_iters; ++it) {
        if (r.norm() <= rel_tol * b_norm) return x;
        apply(p, ap);
        const double alpha = rz / p.dot(ap);
        x += alpha * p;
        r -= alpha * ap;
        z = precond.asDiagonal() * r;
        const double rz_next = r.dot(z);
        p = z + (rz_next / rz) * p;
        rz = rz_next;
    }
    if (r.norm() <= rel_tol * b_norm) return x;
    throw std::runtime_error("solver: CG failed to converge for column " +
                             std::to_string(column) + ", relative residual " +
                             std::to_string(r.norm() / b_norm));
}

}  // namespace detail

// All-pairs effective resistance. The dense path inverts (L + J/N) by
// Cholesky; the solver path runs one matrix-free CG per node and never forms
// the matrix.
inline ResistanceTable resistance_table(const Graph& g,
                                        ResistanceMethod method = ResistanceMethod::dense,
                                        double tol = 1e-10,
                                        std::size_t dense_cap = kDenseCap) {
    const std::size_t n = g.node_count();
    if (n == 0) throw std::domain_error("resistance_table: empty graph");
    if (!is_connected(g)) throw std::domain_error("resistance_table: disconnected graph");
    if (method == ResistanceMethod::dense) {
        if (n > dense_cap) {
            throw std::length_error("resistance_table: N=" + std::to_string(n) +
                                    " exceeds dense cap; use method=solver");
        }
        return detail::table_from_pinv(pseudoinverse_shifted(g));
    }
    const auto ni = static_cast<Eigen::Index>(n);
    Eigen::MatrixXd pinv(ni, ni);
    const std::size_t max_iters = 20 * n + 1000;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::int64_t col = 0; col < static_cast<std::int64_t>(n); ++col) {
        pinv.col(col) = detail::solve_pinv_column(g, static_cast<NodeId>(col), tol, max_iters);
    }
    // symmetrize away the last bits of solver noise
    pinv = 0.5 * (pinv + pinv.transpose()).eval();
    return detail::table_from_pinv(pinv);
}

// Sum-rule residual d_i*Om_ij + sum_{k in N(i)} (Om_ik - Om_jk) - 2; zero in
// exact arithmetic for any connected graph and i != j.
inline double sum_rule_residual(const ResistanceTable& t, const Graph& g, NodeId i, NodeId j) {
    if (i == j) throw std::invalid_argument("sum_rule_residual: i and j must differ");
    double acc = g.degree(i) * t.omega(i, j);
    for (NodeId k : g.neighbors(i)) acc += t.omega(i, k) - t.omega(j, k);
    return acc - 2.0;
}

// Block identity for the Apollonian old/new split: the product of the
// old-new adjacency block with its transpose equals D_g + 2 A_g, exactly, in
// integers. Returns the max-abs integer deviation (expected 0).
inline std::int64_t apollonian_matrix_identity_residual(std::uint32_t g) {
    const ApollonianState next = apollonian(g + 1);
    const auto n_old = static_cast<Eigen::Index>(next.level_sizes[g]);
    const auto n_new = static_cast<Eigen::Index>(next.level_sizes[g + 1]) - n_old;

    using MatI = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
    MatI cross = MatI::Zero(n_old, n_new);
    for (NodeId u = 0; u < static_cast<NodeId>(n_old); ++u) {
        for (NodeId v : next.graph.neighbors(u)) {
            if (v >= static_cast<NodeId>(n_old)) cross(u, v - n_old) = 1;
        }
    }
    MatI expected = MatI::Zero(n_old, n_old);
    for (NodeId u = 0; u < static_cast<NodeId>(n_old); ++u) {
        std::int64_t old_degree = 0;
        for (NodeId v : next.graph.neighbors(u)) {
            if (v < static_cast<NodeId>(n_old)) {
                expected(u, v) += 2;
                ++old_degree;
            }
        }
        expected(u, u) += old_degree;
    }
    const MatI product = cross * cross.transpose();
    return (product - expected).cwiseAbs().maxCoeff();
}

// All-pairs resistance for A_g through the decimation recursions alone; no
// linear algebra anywhere. Level order matters: old-old entries are scaled
// first, new-old entries consume them, and new-new entries consume new-old.
inline ResistanceTable apollonian_resistance_recursive(std::uint32_t g) {
    if (g > kApollonianRecursionMaxGeneration) {
        throw std::length_error("apollonian_resistance_recursive: generation " +
                                std::to_string(g) + " exceeds cap " +
                                std::to_string(kApollonianRecursionMaxGeneration));
    }
    const ApollonianState st = apollonian(g);
    ResistanceTable t;
    t.omega = Eigen::MatrixXd::Constant(4, 4, 0.5);
    t.omega.diagonal().setZero();
    for (std::uint32_t level = 1; level <= g; ++level) {
        const auto n_old = static_cast<Eigen::Index>(st.level_sizes[level - 1]);
        const auto n_new = static_cast<Eigen::Index>(st.level_sizes[level]);
        Eigen::MatrixXd next = Eigen::MatrixXd::Zero(n_new, n_new);
        next.topLeftCorner(n_old, n_old) = 0.6 * t.omega;

        std::vector<double> corner_sum(static_cast<std::size_t>(n_new - n_old));
        for (Eigen::Index i = n_old; i < n_new; ++i) {
            const auto& [p, q, r] = st.corners[static_cast<std::size_t>(i)];
            corner_sum[static_cast<std::size_t>(i - n_old)] =
                next(p, q) + next(q, r) + next(r, p);
        }
        for (Eigen::Index i = n_old; i < n_new; ++i) {
            const auto& [p, q, r] = st.corners[static_cast<std::size_t>(i)];
            const double om_tri = corner_sum[static_cast<std::size_t>(i - n_old)];
            for (Eigen::Index j = 0; j < n_old; ++j) {
                const double om_tri_j = next(p, j) + next(q, j) + next(r, j);
                const double value = (1.0 - om_tri / 3.0 + om_tri_j) / 3.0;
                next(i, j) = value;
                next(j, i) = value;
            }
        }
        for (Eigen::Index i = n_old; i < n_new; ++i) {
            const auto& ci = st.corners[static_cast<std::size_t>(i)];
            const double om_i = corner_sum[static_cast<std::size_t>(i - n_old)];
            for (Eigen::Index j = i + 1; j < n_new; ++j) {
                const auto& cj = st.corners[static_cast<std::size_t>(j)];
                const double om_j = corner_sum[static_cast<std::size_t>(j - n_old)];
                double cross = 0.0;
                for (NodeId a : ci) {
                    for (NodeId b : cj) cross += next(a, b);
                }
                const double value = 2.0 / 3.0 - (om_i + om_j) / 9.0 + cross / 9.0;
                next(i, j) = value;
                next(j, i) = value;
            }
        }
        t.omega = std::move(next);
    }
    detail::finish_table(t);
    return t;
}

enum class Family { apollonian, pseudofractal };

// Paper bounds: 5/3 for Apollonian networks, 3 for pseudofractal webs.
inline bool check_resistance_bound(const ResistanceTable& t, Family family) {
    const double bound = family == Family::apollonian ? 5.0 / 3.0 : 3.0;
    return t.diameter <= bound + 1e-9;
}

// Sum of resistances over the graph's edges; equals N - 1 for any connected
// graph (Foster's theorem), which tests use as a global consistency check.
inline double edge_resistance_sum(const ResistanceTable& t, const Graph& g) {
    double acc = 0.0;
    for (const auto& [u, v] : g.edges()) acc += t.omega(u, v);
    return acc;
}

}  // namespace covertime
