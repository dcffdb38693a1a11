#pragma once

#include <cctype>
#include <cstdint>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "covertime/bounds.hpp"
#include "covertime/graph.hpp"
#include "covertime/resistance.hpp"
#include "covertime/spectral.hpp"
#include "covertime/walks.hpp"

namespace covertime {

class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Edge list as parsed: labels in first-appearance order, edges possibly
// containing self-loops, duplicates and both orientations.
struct RawEdgeList {
    std::vector<std::string> labels;            // dense id -> original label
    std::vector<Edge> edges;
    bool directed_hint = false;                 // from a '% asym' style header
};

struct EdgeListFormat {
    bool integer_labels = false;  // reject non-integer labels when set
};

// One edge per line, columns split on whitespace or commas. Lines starting
// with '#' or '%' are comments; columns past the second (weights etc.) are
// ignored.
inline RawEdgeList parse_edge_list(std::string_view text, const EdgeListFormat& fmt = {}) {
    RawEdgeList raw;
    std::unordered_map<std::string, NodeId> label_ids;
    const auto intern = [&](std::string&& label) -> NodeId {
        auto [it, inserted] = label_ids.try_emplace(std::move(label),
                                                    static_cast<NodeId>(raw.labels.size()));
        if (inserted) raw.labels.push_back(it->first);
        return it->second;
    };

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                               : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        std::size_t i = 0;
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i == line.size()) continue;
        if (line[i] == '#' || line[i] == '%') {
            if (line.find("asym") != std::string_view::npos) raw.directed_hint = true;
            continue;
        }

        std::vector<std::string> tokens;
        std::string current;
        for (; i < line.size(); ++i) {
            const char c = line[i];
            if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
                if (!current.empty()) tokens.push_back(std::move(current)), current.clear();
            } else {
                current.push_back(c);
            }
        }
        if (!current.empty()) tokens.push_back(std::move(current));
        if (tokens.size() < 2) {
            throw ParseError("line " + std::to_string(line_no) + ": expected two columns, got " +
                             std::to_string(tokens.size()));
        }
        if (fmt.integer_labels) {
            for (int t = 0; t < 2; ++t) {
                const std::string& tok = tokens[t];
                const bool ok = !tok.empty() &&
                                tok.find_first_not_of("0123456789") == std::string::npos;
                if (!ok) {
                    throw ParseError("line " + std::to_string(line_no) +
                                     ": non-integer label '" + tok + "'");
                }
            }
        }
        const NodeId u = intern(std::move(tokens[0]));
        const NodeId v = intern(std::move(tokens[1]));
        raw.edges.emplace_back(u, v);
    }
    if (raw.edges.empty()) throw ParseError("edge list is empty");
    return raw;
}

struct NormalizeResult {
    Graph graph;
    std::vector<std::string> labels;   // kept node -> original label
    std::size_t dropped_nodes = 0;     // outside the largest component
    std::size_t dropped_self_loops = 0;
};

// Preprocessing pipeline: drop self-loops, collapse duplicate and reciprocal
// edges, keep the largest connected component, relabel densely.
inline NormalizeResult normalize(const RawEdgeList& raw) {
    std::vector<Edge> cleaned;
    cleaned.reserve(raw.edges.size());
    std::size_t self_loops = 0;
    for (const auto& [u, v] : raw.edges) {
        if (u == v) {
            ++self_loops;
            continue;
        }
        cleaned.emplace_back(u, v);
    }
    if (cleaned.empty()) throw ParseError("no edges left after removing self-loops");
    const Graph full = Graph::from_edges(raw.labels.size(), cleaned);
    LccResult lcc = largest_connected_component(full);

    NormalizeResult result;
    result.dropped_self_loops = self_loops;
    result.dropped_nodes = full.node_count() - lcc.new_to_old.size();
    result.labels.reserve(lcc.new_to_old.size());
    for (NodeId old_id : lcc.new_to_old) result.labels.push_back(raw.labels[old_id]);
    result.graph = std::move(lcc.graph);
    return result;
}

struct DatasetReport {
    std::string name;
    std::size_t n = 0;
    std::size_t e = 0;
    double d_avg = 0.0;
    std::size_t delta = 0;       // hop diameter
    double r = 0.0;              // resistance diameter
    double c_mc = 0.0;           // MC cover estimate (max over starts)
    double ratio = 0.0;          // C / (N ln N)
    double c_ci95 = 0.0;
    NodeId worst_start = 0;
    std::pair<NodeId, NodeId> r_pair{0, 0};
};

// Full per-dataset summary row; delegates to the structural, resistance and
// walk modules.
inline DatasetReport summarize(const Graph& g, const std::string& name, const WalkConfig& walk,
                               ResistanceMethod method = ResistanceMethod::dense) {
    DatasetReport rep;
    rep.name = name;
    rep.n = g.node_count();
    rep.e = g.edge_count();
    if (rep.n == 0) throw std::domain_error("summarize: empty graph");
    rep.d_avg = 2.0 * static_cast<double>(rep.e) / static_cast<double>(rep.n);
    rep.delta = hop_diameter(g);
    const ResistanceTable table = resistance_table(g, method);
    rep.r = table.diameter;
    rep.r_pair = table.argmax_pair;
    const GraphCoverResult cover = mc_graph_cover(g, walk);
    rep.c_mc = cover.stats.mean;
    rep.c_ci95 = cover.stats.ci95_halfwidth;
    rep.worst_start = cover.worst_start;
    rep.ratio = scaling_ratio(rep.c_mc, rep.n);
    return rep;
}

// Normalized edge list writer: '#' header, then one "u v" line per edge with
// u < v, pairs ascending.
inline void write_edge_list(std::ostream& out, const Graph& g,
                            const std::vector<std::string>& header_lines = {}) {
    for (const auto& line : header_lines) out << "# " << line << '\n';
    out << "# nodes: " << g.node_count() << '\n';
    out << "# edges: " << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("read failure on '" + path + "'");
    return buf.str();
}

inline Graph load_graph(const std::string& path, const EdgeListFormat& fmt = {}) {
    return normalize(parse_edge_list(read_text_file(path), fmt)).graph;
}

}  // namespace covertime
