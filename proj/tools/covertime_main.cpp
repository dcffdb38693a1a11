// covertime: command-line driver for graph generation, dataset analysis,
// verification of the resistance identities, and scaling studies.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "covertime/bounds.hpp"
#include "covertime/generators.hpp"
#include "covertime/graph.hpp"
#include "covertime/ingest.hpp"
#include "covertime/resistance.hpp"
#include "covertime/spectral.hpp"
#include "covertime/walks.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace covertime;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

std::string fmt(const char* format, double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), format, value);
    return buf;
}

std::size_t pow3(std::uint32_t g) {
    std::size_t v = 1;
    for (std::uint32_t i = 0; i < g; ++i) v *= 3;
    return v;
}

void apply_threads(int threads) {
    if (threads == 0) {
        if (const char* env = std::getenv("COVERTIME_THREADS")) threads = std::atoi(env);
    }
#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#else
    (void)threads;
#endif
}

ResistanceMethod parse_method(const std::string& name) {
    if (name == "dense") return ResistanceMethod::dense;
    if (name == "solver") return ResistanceMethod::solver;
    throw CLI::ValidationError("--method", "must be 'dense' or 'solver'");
}

// "all", "sample:K", or a comma list of node ids.
WalkConfig::Starts parse_starts(const std::string& text, WalkConfig& cfg) {
    if (text == "all") return WalkConfig::Starts::all;
    if (text.rfind("sample:", 0) == 0) {
        cfg.sample_count = std::stoull(text.substr(7));
        return WalkConfig::Starts::sample;
    }
    std::stringstream ss(text);
    std::string tok;
    cfg.start_list.clear();
    while (std::getline(ss, tok, ',')) {
        cfg.start_list.push_back(static_cast<NodeId>(std::stoul(tok)));
    }
    return WalkConfig::Starts::list;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    return out;
}

template <typename T>
std::string join(const std::vector<T>& values) {
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(values[i]);
    }
    return s;
}

// ---------------------------------------------------------------------------
// generate

struct GenerateOptions {
    std::string family;
    std::uint32_t g = 0;
    std::size_t n = 0;
    std::uint32_t m = 1;
    std::uint32_t m0 = 0;
    std::uint64_t seed = 0;
    std::string out;
};

int run_generate(const GenerateOptions& opt) {
    Graph graph;
    std::string config = "cmd=generate family=" + opt.family;
    if (opt.family == "apollonian") {
        graph = apollonian(opt.g).graph;
        config += " g=" + std::to_string(opt.g);
    } else if (opt.family == "pseudofractal") {
        graph = pseudofractal(opt.g).graph;
        config += " g=" + std::to_string(opt.g);
    } else if (opt.family == "ba") {
        graph = barabasi_albert({.n = opt.n, .m = opt.m, .m0 = opt.m0, .seed = opt.seed});
        config += " n=" + std::to_string(opt.n) + " m=" + std::to_string(opt.m) +
                  " m0=" + std::to_string(opt.m0 == 0 ? opt.m + 1 : opt.m0) +
                  " seed=" + std::to_string(opt.seed);
    } else if (opt.family == "complete") {
        graph = complete_graph(opt.n);
        config += " n=" + std::to_string(opt.n);
    } else if (opt.family == "cycle") {
        graph = cycle_graph(opt.n);
        config += " n=" + std::to_string(opt.n);
    } else if (opt.family == "path") {
        graph = path_graph(opt.n);
        config += " n=" + std::to_string(opt.n);
    } else {
        throw std::invalid_argument("unknown family '" + opt.family + "'");
    }

    std::ofstream out = open_output(opt.out);
    write_edge_list(out, graph, {"covertime edge list", "config: " + config});
    if (!out) throw IoError("write failure on '" + opt.out + "'");
    std::cout << "N=" << graph.node_count() << " E=" << graph.edge_count() << '\n';
    return kExitOk;
}

// ---------------------------------------------------------------------------
// analyze

struct AnalyzeOptions {
    std::string in;
    std::string name;
    std::string out;
    std::size_t trials = 1000;
    std::uint64_t seed = 0;
    std::string starts = "all";
    std::string method = "dense";
    double tol = 1e-10;
    std::uint64_t max_steps = 0;
    std::size_t hitting_cap = 300;
    std::size_t spectral_cap = 2000;
};

std::string analyze_config_line(const AnalyzeOptions& opt, const std::string& name) {
    return "cmd=analyze in=" + opt.in + " name=" + name + " trials=" +
           std::to_string(opt.trials) + " seed=" + std::to_string(opt.seed) +
           " starts=" + opt.starts + " method=" + opt.method + " tol=" + fmt("%g", opt.tol) +
           " max_steps=" + std::to_string(opt.max_steps);
}

std::string report_row(const DatasetReport& rep) {
    return rep.name + ',' + std::to_string(rep.n) + ',' + std::to_string(rep.e) + ',' +
           fmt("%.2f", rep.d_avg) + ',' + std::to_string(rep.delta) + ',' +
           fmt("%.6f", rep.r) + ',' + fmt("%.3f", rep.c_mc) + ',' + fmt("%.6f", rep.ratio);
}

int run_analyze(const AnalyzeOptions& opt) {
    const std::string name =
        opt.name.empty() ? std::filesystem::path(opt.in).stem().string() : opt.name;

    NormalizeResult norm = normalize(parse_edge_list(read_text_file(opt.in)));
    if (norm.dropped_nodes > 0) {
        std::cerr << "warning: dropped " << norm.dropped_nodes
                  << " nodes outside the largest connected component\n";
    }
    if (norm.dropped_self_loops > 0) {
        std::cerr << "warning: removed " << norm.dropped_self_loops << " self-loops\n";
    }
    const Graph& g = norm.graph;

    WalkConfig walk;
    walk.trials = opt.trials;
    walk.seed = opt.seed;
    walk.max_steps = opt.max_steps;
    walk.starts = parse_starts(opt.starts, walk);

    const DatasetReport rep = summarize(g, name, walk, parse_method(opt.method));
    const std::string row = report_row(rep);
    const std::string config = analyze_config_line(opt, name);

    std::cout << row << '\n';
    std::cout << "record.name = " << rep.name << '\n';
    std::cout << "record.n = " << rep.n << '\n';
    std::cout << "record.e = " << rep.e << '\n';
    std::cout << "record.d_avg = " << fmt("%.6f", rep.d_avg) << '\n';
    std::cout << "record.delta = " << rep.delta << '\n';
    std::cout << "record.r = " << fmt("%.9f", rep.r) << '\n';
    std::cout << "record.r_pair = (" << rep.r_pair.first << ',' << rep.r_pair.second << ")\n";
    std::cout << "record.c_mc = " << fmt("%.3f", rep.c_mc) << '\n';
    std::cout << "record.c_ci95 = " << fmt("%.3f", rep.c_ci95) << '\n';
    std::cout << "record.worst_start = " << rep.worst_start << '\n';
    std::cout << "record.ratio = " << fmt("%.6f", rep.ratio) << '\n';

    const ResistanceUpperBound rub = resistance_upper(g, rep.r);
    std::cout << "record.resistance_upper = " << fmt("%.3f", rub.rigorous) << '\n';
    std::cout << "record.resistance_upper_log_form = " << fmt("%.3f", rub.log_form) << '\n';
    const double nlogn = static_cast<double>(rep.n) * std::log(static_cast<double>(rep.n));
    std::cout << "record.nlogn = " << fmt("%.3f", nlogn) << '\n';
    if (g.node_count() <= opt.spectral_cap) {
        const SpectralData sd = spectral(g);
        std::cout << "record.walk_gap = " << fmt("%.9f", sd.walk_gap) << '\n';
        std::cout << "record.spectral_indicator = " << fmt("%.3f", nlogn / sd.walk_gap) << '\n';
    }
    if (g.node_count() <= opt.hitting_cap) {
        const MatthewsBounds mb = matthews_bounds(exact_hitting_times(g));
        std::cout << "record.matthews_lower = " << fmt("%.3f", mb.lower) << '\n';
        std::cout << "record.matthews_upper = " << fmt("%.3f", mb.upper) << '\n';
    }
    std::cout << "record.config = " << config << '\n';

    if (!opt.out.empty()) {
        std::ofstream out = open_output(opt.out);
        out << "# covertime analyze\n";
        out << "# config: " << config << '\n';
        out << "# columns: name,N,E,d_avg,delta,R,C_mc,ratio\n";
        out << row << '\n';
        if (!out) throw IoError("write failure on '" + opt.out + "'");
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOptions {
    std::string family;
    std::uint32_t g = 2;
    double tol = 1e-9;
    std::size_t pairs = 1000;
    std::uint64_t seed = 0;
    std::string in;  // optional externally supplied graph to check
};

class CheckReporter {
  public:
    void pass(const std::string& name, const std::string& detail = {}) {
        std::cout << "PASS " << name;
        if (!detail.empty()) std::cout << " (" << detail << ")";
        std::cout << '\n';
    }
    void fail(const std::string& name, const std::string& detail) {
        std::cout << "FAIL " << name << " (" << detail << ")\n";
        ++failures_;
    }
    void check(bool ok, const std::string& name, const std::string& detail) {
        ok ? pass(name, detail) : fail(name, detail);
    }
    int failures() const { return failures_; }

  private:
    int failures_ = 0;
};

void verify_sum_rule(CheckReporter& rep, const Graph& g, const ResistanceTable& table,
                     std::size_t pairs, std::uint64_t seed, double tol) {
    Rng rng = Rng::stream(seed, 0x5C);
    double worst = 0.0;
    const std::size_t n = g.node_count();
    for (std::size_t k = 0; k < pairs; ++k) {
        const auto i = static_cast<NodeId>(rng.bounded(n));
        auto j = static_cast<NodeId>(rng.bounded(n));
        if (i == j) j = (j + 1) % n;
        worst = std::max(worst, std::abs(sum_rule_residual(table, g, i, j)));
    }
    rep.check(worst <= tol, "sum-rule", "max residual " + fmt("%.3e", worst) + " over " +
                                            std::to_string(pairs) + " pairs");
}

void verify_eq4_vs_eq5(CheckReporter& rep, const Graph& g, const ResistanceTable& table,
                       std::size_t pairs, std::uint64_t seed, double tol) {
    const SpectralData sd = spectral(g);
    Rng rng = Rng::stream(seed, 0xE9);
    double worst = 0.0;
    const std::size_t n = g.node_count();
    for (std::size_t k = 0; k < pairs; ++k) {
        const auto i = static_cast<NodeId>(rng.bounded(n));
        auto j = static_cast<NodeId>(rng.bounded(n));
        if (i == j) j = (j + 1) % n;
        worst = std::max(worst, std::abs(resistance_pair_spectral(sd, i, j) - table.omega(i, j)));
    }
    rep.check(worst <= tol, "eigenmode-vs-table", "max deviation " + fmt("%.3e", worst));
}

int run_verify(const VerifyOptions& opt) {
    CheckReporter rep;
    const bool is_apollonian = opt.family == "apollonian";
    if (!is_apollonian && opt.family != "pseudofractal") {
        throw std::invalid_argument("verify: family must be apollonian or pseudofractal");
    }

    Graph graph;
    std::size_t expected_n = 0;
    std::size_t expected_e = 0;
    if (is_apollonian) {
        const auto st = apollonian(opt.g);
        graph = st.graph;
        expected_n = 2 * pow3(opt.g) + 2;
        expected_e = 6 * pow3(opt.g);
        // degree law 3 * 2^(g - birth)
        bool degrees_ok = true;
        for (NodeId v = 0; v < graph.node_count(); ++v) {
            const auto expect = 3u * (1u << (opt.g - st.birth_iteration[v]));
            if (graph.degree(v) != expect) degrees_ok = false;
        }
        rep.check(degrees_ok, "degree-law", "3*2^(g-g_i) at g=" + std::to_string(opt.g));
    } else {
        const auto st = pseudofractal(opt.g);
        graph = st.graph;
        expected_n = 3 * (pow3(opt.g) + 1) / 2;
        expected_e = pow3(opt.g + 1);
        bool degrees_ok = true;
        for (NodeId v = 0; v < graph.node_count(); ++v) {
            const std::uint32_t half = graph.degree(v) / 2;
            if (graph.degree(v) % 2 != 0 || half == 0 || (half & (half - 1)) != 0) {
                degrees_ok = false;
            }
        }
        rep.check(degrees_ok, "degree-law", "all degrees 2*2^k");
    }

    if (!opt.in.empty()) {
        const Graph external = load_graph(opt.in);
        rep.check(external.node_count() == expected_n && external.edge_count() == expected_e,
                  "structure", "file has N=" + std::to_string(external.node_count()) + " E=" +
                                   std::to_string(external.edge_count()) + ", expected N=" +
                                   std::to_string(expected_n) + " E=" + std::to_string(expected_e));
        graph = external;
    } else {
        rep.check(graph.node_count() == expected_n && graph.edge_count() == expected_e,
                  "structure", "N=" + std::to_string(graph.node_count()) + " E=" +
                                   std::to_string(graph.edge_count()));
    }

    const ResistanceTable table = resistance_table(graph, ResistanceMethod::dense);
    verify_sum_rule(rep, graph, table, opt.pairs, opt.seed, opt.tol);
    if (graph.node_count() <= 1200) {
        verify_eq4_vs_eq5(rep, graph, table, std::min<std::size_t>(opt.pairs, 200), opt.seed,
                          1e-8);
    }
    const double edge_sum = edge_resistance_sum(table, graph);
    rep.check(std::abs(edge_sum - (static_cast<double>(graph.node_count()) - 1.0)) <= 1e-8,
              "edge-resistance-sum", "sum " + fmt("%.9f", edge_sum) + " vs N-1");

    if (is_apollonian) {
        for (std::uint32_t k = 0; k <= std::min(opt.g, 4u); ++k) {
            const std::int64_t residual = apollonian_matrix_identity_residual(k);
            rep.check(residual == 0, "block-identity",
                      "g=" + std::to_string(k) + " integer residual " + std::to_string(residual));
        }
        if (opt.in.empty() && opt.g <= kApollonianRecursionMaxGeneration) {
            const ResistanceTable recursive = apollonian_resistance_recursive(opt.g);
            const double dev = (recursive.omega - table.omega).cwiseAbs().maxCoeff();
            rep.check(dev <= opt.tol, "recursion-vs-dense", "max deviation " + fmt("%.3e", dev));
        }
        rep.check(check_resistance_bound(table, Family::apollonian), "bound-5/3",
                  "R = " + fmt("%.6f", table.diameter));
    } else {
        rep.check(check_resistance_bound(table, Family::pseudofractal), "bound-3",
                  "R = " + fmt("%.6f", table.diameter));
    }

    if (rep.failures() > 0) {
        std::cout << rep.failures() << " check(s) failed\n";
        return kExitCheckFailed;
    }
    std::cout << "all checks passed\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------
// study

struct StudyOptions {
    std::string family;
    std::vector<std::size_t> sizes;   // --sizes for sized families, --g-list for iterative
    std::vector<std::uint32_t> m_list;
    std::size_t seeds = 1;
    std::uint64_t seed = 0;
    std::size_t trials = 100;
    std::string starts = "sample:4";
    std::string method = "dense";
    double tol = 1e-10;
    std::string out;
};

StudyFamily parse_family(const std::string& name) {
    if (name == "ba") return StudyFamily::ba;
    if (name == "apollonian") return StudyFamily::apollonian;
    if (name == "pseudofractal") return StudyFamily::pseudofractal;
    if (name == "complete") return StudyFamily::complete;
    if (name == "cycle") return StudyFamily::cycle;
    if (name == "path") return StudyFamily::path;
    throw std::invalid_argument("unknown family '" + name + "'");
}

int run_study(const StudyOptions& opt) {
    StudySpec spec;
    spec.family = parse_family(opt.family);
    spec.sizes = opt.sizes;
    spec.params = opt.m_list;
    if (spec.family == StudyFamily::ba && spec.params.empty()) {
        throw std::invalid_argument("study: --m-list is required for family ba");
    }
    for (std::size_t i = 0; i < opt.seeds; ++i) spec.seeds.push_back(opt.seed + i);
    spec.walk.trials = opt.trials;
    spec.walk.starts = parse_starts(opt.starts, spec.walk);
    spec.method = parse_method(opt.method);
    spec.tol = opt.tol;

    const std::string config = "cmd=study family=" + opt.family + " sizes=" + join(opt.sizes) +
                               " m_list=" + join(opt.m_list) + " seeds=" +
                               std::to_string(opt.seeds) + " seed=" + std::to_string(opt.seed) +
                               " trials=" + std::to_string(opt.trials) + " starts=" + opt.starts +
                               " method=" + opt.method + " tol=" + fmt("%g", opt.tol);

    const auto rows = scaling_study(spec);
    std::ostringstream body;
    body << "# covertime study\n";
    body << "# config: " << config << '\n';
    body << "# columns: family,param,size_param,N,E,R,C_mc,ratio,seed\n";
    for (const auto& row : rows) {
        if (row.failed) {
            body << "# failed: family=" << row.family << " param=" << row.param
                 << " size_param=" << row.size_param << " seed=" << row.seed
                 << " error=" << row.error << '\n';
            continue;
        }
        body << row.family << ',' << row.param << ',' << row.size_param << ',' << row.n << ','
             << row.e << ',' << fmt("%.6f", row.r) << ',' << fmt("%.3f", row.c_mc) << ','
             << fmt("%.6f", row.ratio) << ',' << row.seed << '\n';
    }

    if (opt.out.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream out = open_output(opt.out);
        out << body.str();
        if (!out) throw IoError("write failure on '" + opt.out + "'");
        std::cout << rows.size() << " rows written to " << opt.out << '\n';
    }
    const bool any_failed =
        std::any_of(rows.begin(), rows.end(), [](const StudyRow& r) { return r.failed; });
    return any_failed ? kExitCheckFailed : kExitOk;
}

// ---------------------------------------------------------------------------
// resistance

struct ResistanceOptions {
    std::string in;
    std::string method = "dense";
    double tol = 1e-10;
    std::string pair;
    std::string out;
};

int run_resistance(const ResistanceOptions& opt) {
    const Graph g = load_graph(opt.in);
    const ResistanceTable table = resistance_table(g, parse_method(opt.method), opt.tol);
    std::cout << "R=" << fmt("%.6f", table.diameter) << " pair=(" << table.argmax_pair.first
              << ',' << table.argmax_pair.second << ")\n";
    if (!opt.pair.empty()) {
        const auto comma = opt.pair.find(',');
        if (comma == std::string::npos) {
            throw std::invalid_argument("--pair expects 'i,j'");
        }
        const auto i = static_cast<NodeId>(std::stoul(opt.pair.substr(0, comma)));
        const auto j = static_cast<NodeId>(std::stoul(opt.pair.substr(comma + 1)));
        std::cout << "omega(" << i << ',' << j << ")=" << fmt("%.9f", table.omega(i, j)) << '\n';
    }
    if (!opt.out.empty()) {
        std::ofstream out = open_output(opt.out);
        out << "# covertime resistance table\n";
        out << "# config: cmd=resistance in=" << opt.in << " method=" << opt.method
            << " tol=" << fmt("%g", opt.tol) << '\n';
        out << "# columns: i,j,omega\n";
        for (NodeId i = 0; i < g.node_count(); ++i) {
            for (NodeId j = i + 1; j < g.node_count(); ++j) {
                out << i << ',' << j << ',' << fmt("%.9f", table.omega(i, j)) << '\n';
            }
        }
        if (!out) throw IoError("write failure on '" + opt.out + "'");
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// cover

struct CoverOptions {
    std::string in;
    std::string start = "all";
    std::size_t trials = 1000;
    std::uint64_t seed = 0;
    std::uint64_t max_steps = 0;
    bool exact = false;
};

int run_cover(const CoverOptions& opt) {
    const Graph g = load_graph(opt.in);
    if (opt.exact) {
        if (opt.start == "all") {
            double worst = 0.0;
            NodeId worst_start = 0;
            for (NodeId u = 0; u < g.node_count(); ++u) {
                const double c = exact_cover_from(g, u);
                std::cout << "exact_cover(" << u << ")=" << fmt("%.12f", c) << '\n';
                if (c > worst) {
                    worst = c;
                    worst_start = u;
                }
            }
            std::cout << "exact_cover=" << fmt("%.12f", worst) << " worst_start=" << worst_start
                      << '\n';
        } else {
            const auto u = static_cast<NodeId>(std::stoul(opt.start));
            std::cout << "exact_cover(" << u << ")=" << fmt("%.12f", exact_cover_from(g, u))
                      << '\n';
        }
        return kExitOk;
    }

    WalkConfig walk;
    walk.trials = opt.trials;
    walk.seed = opt.seed;
    walk.max_steps = opt.max_steps;
    if (opt.start == "all") {
        walk.starts = WalkConfig::Starts::all;
        const GraphCoverResult result = mc_graph_cover(g, walk);
        std::cout << "cover_mc=" << fmt("%.3f", result.stats.mean)
                  << " ci95=" << fmt("%.3f", result.stats.ci95_halfwidth)
                  << " worst_start=" << result.worst_start << " trials=" << result.stats.trials
                  << '\n';
    } else {
        const auto u = static_cast<NodeId>(std::stoul(opt.start));
        const WalkStats stats = mc_cover_from(g, u, walk);
        std::cout << "cover_mc(" << u << ")=" << fmt("%.3f", stats.mean)
                  << " ci95=" << fmt("%.3f", stats.ci95_halfwidth) << " trials=" << stats.trials
                  << '\n';
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"covertime: cover time and effective resistance toolkit for sparse graphs"};
    app.require_subcommand(1);
    int threads = 0;

    GenerateOptions gen;
    auto* cmd_generate = app.add_subcommand("generate", "write a generated graph as an edge list");
    cmd_generate->add_option("--family", gen.family,
                             "apollonian|pseudofractal|ba|complete|cycle|path")->required();
    cmd_generate->add_option("--g", gen.g, "generation (iterative families)");
    cmd_generate->add_option("--n", gen.n, "node count (ba/complete/cycle/path)");
    cmd_generate->add_option("--m", gen.m, "edges per new node (ba)");
    cmd_generate->add_option("--m0", gen.m0, "initial clique size (ba; 0 = m+1)");
    cmd_generate->add_option("--seed", gen.seed, "RNG seed (ba)");
    cmd_generate->add_option("--out", gen.out, "output edge-list path")->required();
    cmd_generate->add_option("--threads", threads, "worker threads (0 = default)");

    AnalyzeOptions an;
    auto* cmd_analyze = app.add_subcommand("analyze", "summarize a dataset edge list");
    cmd_analyze->add_option("--in", an.in, "input edge-list path")->required();
    cmd_analyze->add_option("--name", an.name, "dataset name (default: file stem)");
    cmd_analyze->add_option("--out", an.out, "also write the table row to this file");
    cmd_analyze->add_option("--trials", an.trials, "Monte Carlo trials per start");
    cmd_analyze->add_option("--seed", an.seed, "base RNG seed");
    cmd_analyze->add_option("--starts", an.starts, "all | sample:K | id list");
    cmd_analyze->add_option("--method", an.method, "dense | solver");
    cmd_analyze->add_option("--tol", an.tol, "solver relative residual");
    cmd_analyze->add_option("--max-steps", an.max_steps, "per-trial step cap (0 = default)");
    cmd_analyze->add_option("--hitting-cap", an.hitting_cap, "max N for exact hitting bounds");
    cmd_analyze->add_option("--spectral-cap", an.spectral_cap, "max N for the spectral gap");
    cmd_analyze->add_option("--threads", threads, "worker threads (0 = default)");

    VerifyOptions ver;
    auto* cmd_verify = app.add_subcommand("verify", "check the resistance identities and bounds");
    cmd_verify->add_option("--family", ver.family, "apollonian | pseudofractal")->required();
    cmd_verify->add_option("--g", ver.g, "generation to verify");
    cmd_verify->add_option("--tol", ver.tol, "residual tolerance");
    cmd_verify->add_option("--pairs", ver.pairs, "random pairs for the sum rule");
    cmd_verify->add_option("--seed", ver.seed, "seed for pair sampling");
    cmd_verify->add_option("--in", ver.in, "check this edge list instead of a generated graph");
    cmd_verify->add_option("--threads", threads, "worker threads (0 = default)");

    StudyOptions st;
    auto* cmd_study = app.add_subcommand("study", "multi-size scaling study");
    cmd_study->add_option("--family", st.family,
                          "ba|apollonian|pseudofractal|complete|cycle|path")->required();
    cmd_study->add_option("--sizes", st.sizes, "target sizes (n), comma separated")
        ->delimiter(',');
    cmd_study->add_option("--g-list", st.sizes, "generations for iterative families")
        ->delimiter(',');
    cmd_study->add_option("--m-list", st.m_list, "m values (ba)")->delimiter(',');
    cmd_study->add_option("--seeds", st.seeds, "number of seeds per configuration");
    cmd_study->add_option("--seed", st.seed, "base seed");
    cmd_study->add_option("--trials", st.trials, "Monte Carlo trials per start");
    cmd_study->add_option("--starts", st.starts, "all | sample:K | id list");
    cmd_study->add_option("--method", st.method, "dense | solver");
    cmd_study->add_option("--tol", st.tol, "solver relative residual");
    cmd_study->add_option("--out", st.out, "output table path (default: stdout)");
    cmd_study->add_option("--threads", threads, "worker threads (0 = default)");

    ResistanceOptions re;
    auto* cmd_resistance = app.add_subcommand("resistance", "resistance diameter of a dataset");
    cmd_resistance->add_option("--in", re.in, "input edge-list path")->required();
    cmd_resistance->add_option("--method", re.method, "dense | solver");
    cmd_resistance->add_option("--tol", re.tol, "solver relative residual");
    cmd_resistance->add_option("--pair", re.pair, "also print omega(i,j) for 'i,j'");
    cmd_resistance->add_option("--out", re.out, "write the full pair table here");
    cmd_resistance->add_option("--threads", threads, "worker threads (0 = default)");

    CoverOptions co;
    auto* cmd_cover = app.add_subcommand("cover", "cover time of a dataset");
    cmd_cover->add_option("--in", co.in, "input edge-list path")->required();
    cmd_cover->add_option("--start", co.start, "start node id or 'all'");
    cmd_cover->add_option("--trials", co.trials, "Monte Carlo trials per start");
    cmd_cover->add_option("--seed", co.seed, "base RNG seed");
    cmd_cover->add_option("--max-steps", co.max_steps, "per-trial step cap (0 = default)");
    cmd_cover->add_flag("--exact", co.exact, "exact expectation by DP (N <= 16)");
    cmd_cover->add_option("--threads", threads, "worker threads (0 = default)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    apply_threads(threads);
    try {
        if (cmd_generate->parsed()) return run_generate(gen);
        if (cmd_analyze->parsed()) return run_analyze(an);
        if (cmd_verify->parsed()) return run_verify(ver);
        if (cmd_study->parsed()) return run_study(st);
        if (cmd_resistance->parsed()) return run_resistance(re);
        if (cmd_cover->parsed()) return run_cover(co);
    } catch (const IoError& ex) {
        std::cerr << "io error: " << ex.what() << '\n';
        return kExitIo;
    } catch (const ParseError& ex) {
        std::cerr << "parse error: " << ex.what() << '\n';
        return kExitIo;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "usage error: " << ex.what() << '\n';
        return kExitUsage;
    } catch (const std::length_error& ex) {
        std::cerr << "usage error: " << ex.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& ex) {
        std::cerr << "usage error: " << ex.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return kExitCheckFailed;
    }
    return kExitUsage;
}
