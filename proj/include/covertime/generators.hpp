#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "covertime/graph.hpp"
#include "covertime/rng.hpp"

namespace covertime {

inline constexpr std::uint32_t kApollonianMaxGeneration = 12;
inline constexpr std::uint32_t kPseudofractalMaxGeneration = 14;

// Apollonian network A_g: start from a tetrahedron, then every triangle
// created at the previous iteration gains an interior node wired to its three
// corners. Nodes are numbered in creation order, so [0, level_sizes[k]) is
// exactly the node set of A_k.
struct ApollonianState {
    Graph graph;
    std::uint32_t generation = 0;
    std::vector<std::array<NodeId, 3>> active_triangles;  // created at `generation`
    std::vector<std::uint32_t> birth_iteration;           // per node
    std::vector<std::array<NodeId, 3>> corners;           // per node; meaningful for id >= 4
    std::vector<std::size_t> level_sizes;                 // N_0..N_generation
};

inline ApollonianState apollonian(std::uint32_t g) {
    if (g > kApollonianMaxGeneration) {
        throw std::length_error("apollonian: generation " + std::to_string(g) +
                                " exceeds cap " + std::to_string(kApollonianMaxGeneration));
    }
    ApollonianState st;
    st.generation = g;
    std::vector<Edge> edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    st.active_triangles = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    st.birth_iteration.assign(4, 0);
    st.corners.assign(4, {0, 0, 0});
    st.level_sizes = {4};
    NodeId next = 4;
    for (std::uint32_t it = 1; it <= g; ++it) {
        std::vector<std::array<NodeId, 3>> created;
        created.reserve(st.active_triangles.size() * 3);
        for (const auto& [p, q, r] : st.active_triangles) {
            const NodeId x = next++;
            edges.push_back({p, x});
            edges.push_back({q, x});
            edges.push_back({r, x});
            st.birth_iteration.push_back(it);
            st.corners.push_back({p, q, r});
            created.push_back({p, q, x});
            created.push_back({p, r, x});
            created.push_back({q, r, x});
        }
        st.active_triangles = std::move(created);
        st.level_sizes.push_back(next);
    }
    st.graph = Graph::from_edges(next, edges);
    return st;
}

// Pseudofractal scale-free web F_g: start from a triangle; every edge of F_g
// spawns one new node joined to both endpoints.
struct PseudofractalState {
    Graph graph;
    std::uint32_t generation = 0;
    std::vector<std::size_t> level_sizes;  // N_0..N_generation
};

inline PseudofractalState pseudofractal(std::uint32_t g) {
    if (g > kPseudofractalMaxGeneration) {
        throw std::length_error("pseudofractal: generation " + std::to_string(g) +
                                " exceeds cap " + std::to_string(kPseudofractalMaxGeneration));
    }
    PseudofractalState st;
    st.generation = g;
    std::vector<Edge> edges = {{0, 1}, {0, 2}, {1, 2}};
    st.level_sizes = {3};
    NodeId next = 3;
    for (std::uint32_t it = 1; it <= g; ++it) {
        const std::size_t old_edge_count = edges.size();
        for (std::size_t e = 0; e < old_edge_count; ++e) {
            const auto [u, v] = edges[e];
            const NodeId x = next++;
            edges.push_back({u, x});
            edges.push_back({v, x});
        }
        st.level_sizes.push_back(next);
    }
    st.graph = Graph::from_edges(next, edges);
    return st;
}

struct BaConfig {
    std::size_t n = 0;       // target node count
    std::uint32_t m = 1;     // edges per new node
    std::uint32_t m0 = 0;    // initial clique size; 0 means m + 1
    std::uint64_t seed = 0;
};

// Barabasi-Albert preferential attachment. The initial graph is a clique on
// m0 nodes; each new node draws m distinct targets from the flat edge-endpoint
// list (exactly degree-proportional), rejecting duplicates within the step.
inline Graph barabasi_albert(const BaConfig& cfg) {
    const std::uint32_t m0 = cfg.m0 == 0 ? cfg.m + 1 : cfg.m0;
    if (cfg.m < 1) throw std::invalid_argument("barabasi_albert: m must be >= 1");
    if (m0 < cfg.m) throw std::invalid_argument("barabasi_albert: m0 must be >= m");
    if (cfg.n < m0) throw std::invalid_argument("barabasi_albert: n must be >= m0");

    std::vector<Edge> edges;
    std::vector<NodeId> endpoints;
    edges.reserve(m0 * (m0 - 1) / 2 + (cfg.n - m0) * cfg.m);
    endpoints.reserve(2 * edges.capacity());
    for (NodeId i = 0; i < m0; ++i) {
        for (NodeId j = i + 1; j < m0; ++j) {
            edges.push_back({i, j});
            endpoints.push_back(i);
            endpoints.push_back(j);
        }
    }
    Rng rng = Rng::stream(cfg.seed, 0xBAu);
    std::vector<NodeId> targets;
    for (NodeId v = m0; v < cfg.n; ++v) {
        targets.clear();
        while (targets.size() < cfg.m) {
            const NodeId t = endpoints[rng.bounded(endpoints.size())];
            if (std::find(targets.begin(), targets.end(), t) == targets.end()) {
                targets.push_back(t);
            }
        }
        for (NodeId t : targets) {
            edges.push_back({t, v});
            endpoints.push_back(t);
            endpoints.push_back(v);
        }
    }
    return Graph::from_edges(cfg.n, edges);
}

inline Graph complete_graph(std::size_t n) {
    if (n < 1) throw std::invalid_argument("complete_graph: n must be >= 1");
    std::vector<Edge> edges;
    edges.reserve(n * (n - 1) / 2);
    for (NodeId i = 0; i < n; ++i) {
        for (NodeId j = i + 1; j < n; ++j) edges.push_back({i, j});
    }
    return Graph::from_edges(n, edges);
}

inline Graph cycle_graph(std::size_t n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: n must be >= 3");
    std::vector<Edge> edges;
    edges.reserve(n);
    for (NodeId i = 0; i < n; ++i) edges.push_back({i, static_cast<NodeId>((i + 1) % n)});
    return Graph::from_edges(n, edges);
}

inline Graph path_graph(std::size_t n) {
    if (n < 1) throw std::invalid_argument("path_graph: n must be >= 1");
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    for (NodeId i = 0; i + 1 < n; ++i) edges.push_back({i, static_cast<NodeId>(i + 1)});
    return Graph::from_edges(n, edges);
}

}  // namespace covertime
