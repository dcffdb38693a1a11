#pragma once

#include <string>

#include "covertime/graph.hpp"

namespace test_util {

inline std::string data_path(const std::string& file) {
    return std::string(COVERTIME_TEST_DATA_DIR) + "/" + file;
}

// Simple-graph invariants every construction must satisfy: adjacency
// symmetry, sorted neighbor lists, no self-loops, degree sum = 2E.
inline void require_simple(const covertime::Graph& g) {
    using covertime::NodeId;
    std::size_t degree_sum = 0;
    for (NodeId u = 0; u < g.node_count(); ++u) {
        NodeId prev = 0;
        bool first = true;
        for (NodeId v : g.neighbors(u)) {
            if (v == u) throw std::logic_error("self-loop at " + std::to_string(u));
            if (!first && v <= prev) throw std::logic_error("unsorted adjacency");
            if (!g.has_edge(v, u)) throw std::logic_error("asymmetric adjacency");
            prev = v;
            first = false;
        }
        degree_sum += g.degree(u);
    }
    if (degree_sum != 2 * g.edge_count()) throw std::logic_error("degree sum != 2E");
}

}  // namespace test_util
