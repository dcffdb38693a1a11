#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "covertime/graph.hpp"
#include "covertime/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace covertime {

inline constexpr std::size_t kExactCoverCap = 16;

// Stream tags keep per-operation RNG families disjoint under one base seed.
namespace walk_tag {
inline constexpr std::uint64_t cover = 1;
inline constexpr std::uint64_t commute = 2;
inline constexpr std::uint64_t start_sample = 3;
}  // namespace walk_tag

struct WalkConfig {
    enum class Starts { all, list, sample };

    std::size_t trials = 1000;
    std::uint64_t seed = 0;
    std::uint64_t max_steps = 0;  // 0: defaults to 1e4 * N * ln N
    Starts starts = Starts::all;
    std::vector<NodeId> start_list;   // Starts::list
    std::size_t sample_count = 1;     // Starts::sample
};

struct WalkStats {
    double mean = 0.0;
    double variance = 0.0;
    std::size_t trials = 0;
    double ci95_halfwidth = 0.0;
};

namespace detail {

inline WalkStats stats_from_samples(const std::vector<std::uint64_t>& samples) {
    WalkStats s;
    s.trials = samples.size();
    if (samples.empty()) return s;
    double sum = 0.0;
    for (auto v : samples) sum += static_cast<double>(v);
    s.mean = sum / static_cast<double>(s.trials);
    if (s.trials > 1) {
        double sq = 0.0;
        for (auto v : samples) {
            const double d = static_cast<double>(v) - s.mean;
            sq += d * d;
        }
        s.variance = sq / static_cast<double>(s.trials - 1);
    }
    s.ci95_halfwidth = 1.96 * std::sqrt(s.variance / static_cast<double>(s.trials));
    return s;
}

inline std::uint64_t default_max_steps(std::size_t n) {
    const double nn = static_cast<double>(std::max<std::size_t>(n, 2));
    return static_cast<std::uint64_t>(1e4 * nn * std::log(nn)) + 1;
}

}  // namespace detail

// One step of the unbiased walk: uniform neighbor of v.
inline NodeId step(const Graph& g, NodeId v, Rng& rng) {
    const auto nb = g.neighbors(v);
    if (nb.empty()) throw std::domain_error("step: node " + std::to_string(v) + " is isolated");
    return nb[rng.bounded(nb.size())];
}

namespace detail {

// Steps until all nodes are visited; deterministic in (seed, start, trial).
inline std::uint64_t cover_trial(const Graph& g, NodeId start, std::uint64_t seed,
                                 std::size_t trial, std::uint64_t max_steps,
                                 std::vector<std::uint8_t>& visited) {
    const std::size_t n = g.node_count();
    Rng rng = Rng::stream(seed, walk_tag::cover, start, trial);
    std::fill(visited.begin(), visited.end(), 0);
    visited[start] = 1;
    std::size_t seen = 1;
    NodeId v = start;
    std::uint64_t steps = 0;
    while (seen < n) {
        v = step(g, v, rng);
        ++steps;
        if (!visited[v]) {
            visited[v] = 1;
            ++seen;
        }
        if (steps > max_steps) {
            throw std::runtime_error("mc_cover: trial " + std::to_string(trial) + " from node " +
                                     std::to_string(start) + " exceeded max_steps " +
                                     std::to_string(max_steps));
        }
    }
    return steps;
}

}  // namespace detail

// Monte Carlo cover time from a fixed start node.
inline WalkStats mc_cover_from(const Graph& g, NodeId u, const WalkConfig& cfg) {
    const std::size_t n = g.node_count();
    if (u >= n) throw std::out_of_range("mc_cover_from: start out of range");
    if (cfg.trials < 1) throw std::invalid_argument("mc_cover_from: trials must be >= 1");
    const std::uint64_t max_steps =
        cfg.max_steps == 0 ? detail::default_max_steps(n) : cfg.max_steps;

    std::vector<std::uint64_t> samples(cfg.trials);
#ifdef _OPENMP
#pragma omp parallel
    {
        std::vector<std::uint8_t> visited(n);
#pragma omp for schedule(static)
        for (std::int64_t t = 0; t < static_cast<std::int64_t>(cfg.trials); ++t) {
            samples[t] = detail::cover_trial(g, u, cfg.seed, static_cast<std::size_t>(t),
                                             max_steps, visited);
        }
    }
#else
    std::vector<std::uint8_t> visited(n);
    for (std::size_t t = 0; t < cfg.trials; ++t) {
        samples[t] = detail::cover_trial(g, u, cfg.seed, t, max_steps, visited);
    }
#endif
    return detail::stats_from_samples(samples);
}

// Distinct start nodes selected by cfg; sample mode draws without
// replacement from a dedicated stream.
inline std::vector<NodeId> resolve_starts(const Graph& g, const WalkConfig& cfg) {
    const std::size_t n = g.node_count();
    switch (cfg.starts) {
        case WalkConfig::Starts::all: {
            std::vector<NodeId> all(n);
            std::iota(all.begin(), all.end(), 0);
            return all;
        }
        case WalkConfig::Starts::list: {
            if (cfg.start_list.empty())
                throw std::invalid_argument("resolve_starts: empty start list");
            for (NodeId v : cfg.start_list) {
                if (v >= n) throw std::out_of_range("resolve_starts: start out of range");
            }
            return cfg.start_list;
        }
        case WalkConfig::Starts::sample: {
            const std::size_t k = std::min(cfg.sample_count, n);
            if (k == 0) throw std::invalid_argument("resolve_starts: sample count must be >= 1");
            std::vector<NodeId> pool(n);
            std::iota(pool.begin(), pool.end(), 0);
            Rng rng = Rng::stream(cfg.seed, walk_tag::start_sample);
            for (std::size_t i = 0; i < k; ++i) {
                const auto j = i + rng.bounded(n - i);
                std::swap(pool[i], pool[j]);
            }
            pool.resize(k);
            std::sort(pool.begin(), pool.end());
            return pool;
        }
    }
    throw std::logic_error("resolve_starts: unreachable");
}

struct GraphCoverResult {
    WalkStats stats;        // of the worst start
    NodeId worst_start = 0;
    std::vector<std::pair<NodeId, WalkStats>> per_start;
};

// Graph cover estimate: max per-start mean; ties go to the smaller node id.
inline GraphCoverResult mc_graph_cover(const Graph& g, const WalkConfig& cfg) {
    if (!is_connected(g)) throw std::domain_error("mc_graph_cover: disconnected graph");
    GraphCoverResult result;
    const auto starts = resolve_starts(g, cfg);
    result.per_start.reserve(starts.size());
    for (NodeId u : starts) result.per_start.emplace_back(u, mc_cover_from(g, u, cfg));
    result.worst_start = result.per_start.front().first;
    result.stats = result.per_start.front().second;
    for (const auto& [u, st] : result.per_start) {
        if (st.mean > result.stats.mean) {
            result.stats = st;
            result.worst_start = u;
        }
    }
    return result;
}

// Exact expected cover time from u by dynamic programming over visited sets.
// Sets are processed in decreasing cardinality; states sharing a visited set
// are coupled and solved together as a small linear system.
inline double exact_cover_from(const Graph& g, NodeId u) {
    const std::size_t n = g.node_count();
    if (n > kExactCoverCap) {
        throw std::length_error("exact_cover_from: N=" + std::to_string(n) + " exceeds cap " +
                                std::to_string(kExactCoverCap));
    }
    if (u >= n) throw std::out_of_range("exact_cover_from: start out of range");
    if (!is_connected(g)) throw std::domain_error("exact_cover_from: disconnected graph");
    if (n == 1) return 0.0;

    const std::uint32_t full = (1u << n) - 1u;
    std::vector<double> value(static_cast<std::size_t>(full + 1) * n, 0.0);

    std::vector<std::vector<std::uint32_t>> by_popcount(n + 1);
    for (std::uint32_t s = 1; s <= full; ++s) {
        by_popcount[static_cast<std::size_t>(__builtin_popcount(s))].push_back(s);
    }

    std::vector<NodeId> members;
    std::vector<int> index(n);
    for (std::size_t k = n - 1; k >= 1; --k) {
        for (std::uint32_t s : by_popcount[k]) {
            members.clear();
            for (NodeId v = 0; v < n; ++v) {
                if (s >> v & 1u) {
                    index[v] = static_cast<int>(members.size());
                    members.push_back(v);
                }
            }
            const auto msize = static_cast<Eigen::Index>(members.size());
            Eigen::MatrixXd a = Eigen::MatrixXd::Identity(msize, msize);
            Eigen::VectorXd b = Eigen::VectorXd::Ones(msize);
            for (NodeId v : members) {
                const double inv_d = 1.0 / static_cast<double>(g.degree(v));
                for (NodeId w : g.neighbors(v)) {
                    if (s >> w & 1u) {
                        a(index[v], index[w]) -= inv_d;
                    } else {
                        b(index[v]) += inv_d * value[static_cast<std::size_t>(s | (1u << w)) * n + w];
                    }
                }
            }
            const Eigen::VectorXd x = a.partialPivLu().solve(b);
            for (NodeId v : members) value[static_cast<std::size_t>(s) * n + v] = x(index[v]);
        }
    }
    return value[static_cast<std::size_t>(1u << u) * n + u];
}

// Exact hitting times H(u,v), one grounded-Laplacian solve per target:
// remove row/column v from L and solve against the degree vector.
inline Eigen::MatrixXd exact_hitting_times(const Graph& g, std::size_t cap = kDenseCap) {
    const std::size_t n = g.node_count();
    if (n == 0) throw std::domain_error("exact_hitting_times: empty graph");
    if (n > cap) throw std::length_error("exact_hitting_times: N exceeds cap");
    if (!is_connected(g)) throw std::domain_error("exact_hitting_times: disconnected graph");

    const auto ni = static_cast<Eigen::Index>(n);
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(ni, ni);
    if (n == 1) return h;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::int64_t target = 0; target < static_cast<std::int64_t>(n); ++target) {
        const auto v = static_cast<NodeId>(target);
        Eigen::MatrixXd grounded(ni - 1, ni - 1);
        Eigen::VectorXd rhs(ni - 1);
        const auto reduced = [v](NodeId w) -> Eigen::Index {
            return static_cast<Eigen::Index>(w < v ? w : w - 1);
        };
        grounded.setZero();
        for (NodeId uu = 0; uu < n; ++uu) {
            if (uu == v) continue;
            grounded(reduced(uu), reduced(uu)) = g.degree(uu);
            for (NodeId w : g.neighbors(uu)) {
                if (w != v) grounded(reduced(uu), reduced(w)) -= 1.0;
            }
            rhs(reduced(uu)) = g.degree(uu);
        }
        const Eigen::VectorXd sol = grounded.llt().solve(rhs);
        for (NodeId uu = 0; uu < n; ++uu) {
            if (uu != v) h(uu, target) = sol(reduced(uu));
        }
    }
    return h;
}

namespace detail {

inline std::uint64_t commute_trial(const Graph& g, NodeId u, NodeId v, std::uint64_t seed,
                                   std::size_t trial, std::uint64_t max_steps) {
    Rng rng = Rng::stream(seed, walk_tag::commute,
                          (static_cast<std::uint64_t>(u) << 32) | v, trial);
    std::uint64_t steps = 0;
    for (NodeId from : {u, v}) {
        const NodeId to = from == u ? v : u;
        NodeId w = from;
        while (w != to) {
            w = step(g, w, rng);
            if (++steps > max_steps) {
                throw std::runtime_error("mc_commute: trial " + std::to_string(trial) +
                                         " exceeded max_steps");
            }
        }
    }
    return steps;
}

}  // namespace detail

// Monte Carlo commute time u -> v -> u.
inline WalkStats mc_commute(const Graph& g, NodeId u, NodeId v, const WalkConfig& cfg) {
    const std::size_t n = g.node_count();
    if (u >= n || v >= n) throw std::out_of_range("mc_commute: node out of range");
    if (u == v) throw std::invalid_argument("mc_commute: u and v must differ");
    if (!is_connected(g)) throw std::domain_error("mc_commute: disconnected graph");
    if (cfg.trials < 1) throw std::invalid_argument("mc_commute: trials must be >= 1");
    const std::uint64_t max_steps =
        cfg.max_steps == 0 ? detail::default_max_steps(n) : cfg.max_steps;

    std::vector<std::uint64_t> samples(cfg.trials);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (std::int64_t t = 0; t < static_cast<std::int64_t>(cfg.trials); ++t) {
        samples[t] = detail::commute_trial(g, u, v, cfg.seed, static_cast<std::size_t>(t),
                                           max_steps);
    }
    return detail::stats_from_samples(samples);
}

}  // namespace covertime
