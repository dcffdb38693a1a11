#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "covertime/generators.hpp"
#include "covertime/graph.hpp"
#include "covertime/resistance.hpp"
#include "covertime/walks.hpp"

namespace covertime {

// Partial harmonic sum h_n = 1 + 1/2 + ... + 1/n.
inline double harmonic(std::size_t n) {
    if (n == 0) throw std::invalid_argument("harmonic: n must be >= 1");
    double acc = 0.0;
    for (std::size_t i = 1; i <= n; ++i) acc += 1.0 / static_cast<double>(i);
    return acc;
}

struct MatthewsBounds {
    double lower = 0.0;      // h_{N-1} * H_min
    double upper = 0.0;      // h_{N-1} * H_max
    double h_min = 0.0;      // min off-diagonal hitting time
    double h_max = 0.0;      // max off-diagonal hitting time
    double lower_hn = 0.0;   // h_N variant, reported only
    double upper_hn = 0.0;
};

// Harmonic sandwich of the cover time from the extreme hitting times. The
// tight classical index is h_{N-1} (exact on complete graphs); the h_N
// variant is reported alongside but never asserted.
inline MatthewsBounds matthews_bounds(const Eigen::MatrixXd& hitting) {
    const auto n = hitting.rows();
    if (n < 2) throw std::invalid_argument("matthews_bounds: need at least 2 nodes");
    MatthewsBounds b;
    b.h_min = std::numeric_limits<double>::infinity();
    b.h_max = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            if (i == j) continue;
            b.h_min = std::min(b.h_min, hitting(i, j));
            b.h_max = std::max(b.h_max, hitting(i, j));
        }
    }
    const double h_tight = harmonic(static_cast<std::size_t>(n) - 1);
    const double h_full = harmonic(static_cast<std::size_t>(n));
    b.lower = h_tight * b.h_min;
    b.upper = h_tight * b.h_max;
    b.lower_hn = h_full * b.h_min;
    b.upper_hn = h_full * b.h_max;
    return b;
}

struct ResistanceUpperBound {
    double rigorous = 0.0;    // 2 E R h_{N-1}, from the chain C <= h_{N-1} H_max <= h_{N-1} 2ER
    double log_form = 0.0;    // 2 E R ln N, the looser display form
};

inline ResistanceUpperBound resistance_upper(const Graph& g, double resistance_diameter) {
    const std::size_t n = g.node_count();
    if (n < 2) throw std::invalid_argument("resistance_upper: need at least 2 nodes");
    ResistanceUpperBound b;
    const double twice_er = 2.0 * static_cast<double>(g.edge_count()) * resistance_diameter;
    b.rigorous = twice_er * harmonic(n - 1);
    b.log_form = twice_er * std::log(static_cast<double>(n));
    return b;
}

// C / (N ln N); natural log, pinned by the reference-table ratio column.
inline double scaling_ratio(double cover, std::size_t n) {
    if (n < 2) throw std::invalid_argument("scaling_ratio: n must be >= 2");
    return cover / (static_cast<double>(n) * std::log(static_cast<double>(n)));
}

struct BoundsReport {
    std::size_t n = 0;
    std::size_t e = 0;
    double h = 0.0;                   // h_{N-1}, the asserted index
    double matthews_lower = 0.0;
    double matthews_upper = 0.0;
    double resistance_upper = 0.0;    // 2 E R h_{N-1}
    double nlogn = 0.0;               // scaling reference, not a bound
    double spectral_indicator = 0.0;  // N ln N / (1 - sigma_2), indicative only
    double ratio = 0.0;               // C / (N ln N)
};

inline BoundsReport make_bounds_report(const Graph& g, double resistance_diameter,
                                       const MatthewsBounds& matthews, double cover,
                                       double walk_gap) {
    BoundsReport r;
    r.n = g.node_count();
    r.e = g.edge_count();
    r.h = harmonic(r.n - 1);
    r.matthews_lower = matthews.lower;
    r.matthews_upper = matthews.upper;
    r.resistance_upper = covertime::resistance_upper(g, resistance_diameter).rigorous;
    r.nlogn = static_cast<double>(r.n) * std::log(static_cast<double>(r.n));
    r.spectral_indicator = walk_gap > 0.0 ? r.nlogn / walk_gap : 0.0;
    r.ratio = scaling_ratio(cover, r.n);
    return r;
}

enum class StudyFamily { ba, apollonian, pseudofractal, complete, cycle, path };

inline std::string family_name(StudyFamily f) {
    switch (f) {
        case StudyFamily::ba: return "ba";
        case StudyFamily::apollonian: return "apollonian";
        case StudyFamily::pseudofractal: return "pseudofractal";
        case StudyFamily::complete: return "complete";
        case StudyFamily::cycle: return "cycle";
        case StudyFamily::path: return "path";
    }
    throw std::logic_error("family_name: unreachable");
}

struct StudySpec {
    StudyFamily family = StudyFamily::ba;
    std::vector<std::uint32_t> params;  // m values for ba; ignored otherwise
    std::vector<std::size_t> sizes;     // n for ba/complete/cycle/path, g for iterative
    std::vector<std::uint64_t> seeds;
    WalkConfig walk;                    // starts/trials for the cover estimate
    ResistanceMethod method = ResistanceMethod::dense;
    double tol = 1e-10;
    std::size_t dense_cap = kDenseCap;
};

struct StudyRow {
    std::string family;
    std::uint32_t param = 0;       // m for ba, g for iterative families, 0 otherwise
    std::size_t size_param = 0;    // n for sized families, g for iterative families
    std::size_t n = 0;
    std::size_t e = 0;
    double r = 0.0;
    double c_mc = 0.0;
    double ratio = 0.0;
    std::uint64_t seed = 0;
    bool failed = false;
    std::string error;
};

namespace detail {

inline Graph study_graph(StudyFamily family, std::uint32_t param, std::size_t size,
                         std::uint64_t seed) {
    switch (family) {
        case StudyFamily::ba:
            return barabasi_albert({.n = size, .m = param, .m0 = 0, .seed = seed});
        case StudyFamily::apollonian:
            return apollonian(static_cast<std::uint32_t>(size)).graph;
        case StudyFamily::pseudofractal:
            return pseudofractal(static_cast<std::uint32_t>(size)).graph;
        case StudyFamily::complete: return complete_graph(size);
        case StudyFamily::cycle: return cycle_graph(size);
        case StudyFamily::path: return path_graph(size);
    }
    throw std::logic_error("study_graph: unreachable");
}

}  // namespace detail

// One row per (param, size, seed), emitted in schedule order. Rows that fail
// are marked and the run continues.
inline std::vector<StudyRow> scaling_study(const StudySpec& spec) {
    std::vector<StudyRow> rows;
    std::vector<std::uint32_t> params = spec.params;
    if (params.empty()) params.push_back(0);
    const bool iterative = spec.family == StudyFamily::apollonian ||
                           spec.family == StudyFamily::pseudofractal;
    for (std::uint32_t param : params) {
        for (std::size_t size : spec.sizes) {
            for (std::uint64_t seed : spec.seeds) {
                StudyRow row;
                row.family = family_name(spec.family);
                row.param = iterative ? static_cast<std::uint32_t>(size) : param;
                row.size_param = size;
                row.seed = seed;
                try {
                    const Graph g = detail::study_graph(spec.family, param, size, seed);
                    row.n = g.node_count();
                    row.e = g.edge_count();
                    const ResistanceMethod method =
                        (spec.method == ResistanceMethod::dense && row.n > spec.dense_cap)
                            ? ResistanceMethod::solver
                            : spec.method;
                    row.r = resistance_table(g, method, spec.tol, spec.dense_cap).diameter;
                    WalkConfig walk = spec.walk;
                    walk.seed = seed;
                    row.c_mc = mc_graph_cover(g, walk).stats.mean;
                    row.ratio = scaling_ratio(row.c_mc, row.n);
                } catch (const std::exception& ex) {
                    row.failed = true;
                    row.error = ex.what();
                }
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

}  // namespace covertime
