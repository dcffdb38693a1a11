#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace covertime {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

// Immutable simple undirected graph in CSR form. Neighbor lists are sorted
// ascending so iteration order is identical across runs.
class Graph {
  public:
    Graph() = default;

    static Graph from_edges(std::size_t node_count, std::span<const Edge> edges) {
        std::vector<Edge> unique;
        unique.reserve(edges.size());
        for (const auto& [u, v] : edges) {
            if (u == v) {
                throw std::invalid_argument("self-loop (" + std::to_string(u) + "," +
                                            std::to_string(v) + ") is not allowed");
            }
            if (u >= node_count || v >= node_count) {
                throw std::invalid_argument("edge (" + std::to_string(u) + "," +
                                            std::to_string(v) + ") endpoint out of range [0," +
                                            std::to_string(node_count) + ")");
            }
            unique.emplace_back(std::min(u, v), std::max(u, v));
        }
        std::sort(unique.begin(), unique.end());
        unique.erase(std::unique(unique.begin(), unique.end()), unique.end());

        Graph g;
        g.offsets_.assign(node_count + 1, 0);
        for (const auto& [u, v] : unique) {
            ++g.offsets_[u + 1];
            ++g.offsets_[v + 1];
        }
        for (std::size_t i = 0; i < node_count; ++i) g.offsets_[i + 1] += g.offsets_[i];
        g.targets_.resize(2 * unique.size());
        std::vector<std::uint64_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
        for (const auto& [u, v] : unique) {
            g.targets_[fill[u]++] = v;
            g.targets_[fill[v]++] = u;
        }
        for (std::size_t i = 0; i < node_count; ++i) {
            std::sort(g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i]),
                      g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i + 1]));
        }
        g.edge_count_ = unique.size();
        return g;
    }

    std::size_t node_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t edge_count() const { return edge_count_; }

    std::uint32_t degree(NodeId v) const {
        check_node(v);
        return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
    }

    std::span<const NodeId> neighbors(NodeId v) const {
        check_node(v);
        return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
    }

    bool has_edge(NodeId u, NodeId v) const {
        auto nb = neighbors(u);
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    // Unique edges as (min,max) pairs, lexicographically ascending.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(edge_count_);
        for (NodeId u = 0; u < node_count(); ++u) {
            for (NodeId v : neighbors(u)) {
                if (u < v) out.emplace_back(u, v);
            }
        }
        return out;
    }

  private:
    void check_node(NodeId v) const {
        if (v >= node_count()) {
            throw std::out_of_range("node " + std::to_string(v) + " out of range [0," +
                                    std::to_string(node_count()) + ")");
        }
    }

    std::vector<std::uint64_t> offsets_;
    std::vector<NodeId> targets_;
    std::size_t edge_count_ = 0;
};

inline Graph build_graph(std::size_t node_count, const std::vector<Edge>& edges) {
    return Graph::from_edges(node_count, edges);
}

// BFS hop distances from source; -1 marks unreachable nodes.
inline std::vector<std::int64_t> bfs_distances(const Graph& g, NodeId source) {
    std::vector<std::int64_t> dist(g.node_count(), -1);
    std::vector<NodeId> queue;
    queue.reserve(g.node_count());
    dist[source] = 0;
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        NodeId u = queue[head];
        for (NodeId v : g.neighbors(u)) {
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

inline bool is_connected(const Graph& g) {
    if (g.node_count() == 0) return true;
    auto dist = bfs_distances(g, 0);
    return std::find(dist.begin(), dist.end(), -1) == dist.end();
}

struct LccResult {
    Graph graph;
    std::vector<std::int64_t> old_to_new;  // -1 for dropped nodes
    std::vector<NodeId> new_to_old;        // ascending in old ids
};

// Largest connected component, relabeled to dense ids preserving the old
// order. Ties go to the component containing the smallest original node id.
inline LccResult largest_connected_component(const Graph& g) {
    const std::size_t n = g.node_count();
    std::vector<std::int64_t> comp(n, -1);
    std::vector<std::size_t> comp_size;
    std::vector<NodeId> queue;
    for (NodeId s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        const auto id = static_cast<std::int64_t>(comp_size.size());
        comp[s] = id;
        queue.assign(1, s);
        std::size_t size = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            ++size;
            for (NodeId v : g.neighbors(queue[head])) {
                if (comp[v] < 0) {
                    comp[v] = id;
                    queue.push_back(v);
                }
            }
        }
        comp_size.push_back(size);
    }

    LccResult result;
    result.old_to_new.assign(n, -1);
    if (n == 0) return result;

    std::size_t best = 0;
    for (std::size_t c = 1; c < comp_size.size(); ++c) {
        if (comp_size[c] > comp_size[best]) best = c;  // strict: ties keep the earliest
    }
    result.new_to_old.reserve(comp_size[best]);
    for (NodeId v = 0; v < n; ++v) {
        if (comp[v] == static_cast<std::int64_t>(best)) {
            result.old_to_new[v] = static_cast<std::int64_t>(result.new_to_old.size());
            result.new_to_old.push_back(v);
        }
    }
    std::vector<Edge> edges;
    for (NodeId u = 0; u < n; ++u) {
        if (result.old_to_new[u] < 0) continue;
        for (NodeId v : g.neighbors(u)) {
            if (u < v) {
                edges.emplace_back(static_cast<NodeId>(result.old_to_new[u]),
                                   static_cast<NodeId>(result.old_to_new[v]));
            }
        }
    }
    result.graph = Graph::from_edges(result.new_to_old.size(), edges);
    return result;
}

// Maximum BFS distance over all pairs; throws on disconnected input.
inline std::size_t hop_diameter(const Graph& g) {
    const std::size_t n = g.node_count();
    if (n == 0) throw std::domain_error("hop_diameter: empty graph");
    std::int64_t best = 0;
    for (NodeId s = 0; s < n; ++s) {
        auto dist = bfs_distances(g, s);
        for (std::int64_t d : dist) {
            if (d < 0) throw std::domain_error("hop_diameter: unreachable pair (disconnected graph)");
            best = std::max(best, d);
        }
    }
    return static_cast<std::size_t>(best);
}

}  // namespace covertime
