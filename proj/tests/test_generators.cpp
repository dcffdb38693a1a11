#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

#include "covertime/generators.hpp"
#include "test_util.hpp"

using namespace covertime;

namespace {

std::size_t pow3(std::uint32_t g) {
    std::size_t v = 1;
    for (std::uint32_t i = 0; i < g; ++i) v *= 3;
    return v;
}

}  // namespace

TEST_CASE("apollonian structure", "[generators]") {
    const auto a0 = apollonian(0);
    CHECK(a0.graph.node_count() == 4);
    CHECK(a0.graph.edge_count() == 6);
    for (NodeId v = 0; v < 4; ++v) CHECK(a0.graph.degree(v) == 3);
    CHECK(a0.active_triangles.size() == 4);

    const auto a1 = apollonian(1);
    CHECK(a1.graph.node_count() == 8);
    CHECK(a1.graph.edge_count() == 18);

    const auto a2 = apollonian(2);
    CHECK(a2.graph.node_count() == 20);
    CHECK(a2.graph.edge_count() == 54);
    CHECK(a2.active_triangles.size() == 36);  // 12 nodes added at g=2, 3 triangles each

    CHECK_THROWS_AS(apollonian(kApollonianMaxGeneration + 1), std::length_error);
}

TEST_CASE("apollonian counts and degree law up to g=8", "[generators]") {
    for (std::uint32_t g = 0; g <= 8; ++g) {
        const auto st = apollonian(g);
        CHECK(st.graph.node_count() == 2 * pow3(g) + 2);
        CHECK(st.graph.edge_count() == 6 * pow3(g));
        REQUIRE(st.birth_iteration.size() == st.graph.node_count());
        for (NodeId v = 0; v < st.graph.node_count(); ++v) {
            const std::uint32_t expected = 3u * (1u << (g - st.birth_iteration[v]));
            REQUIRE(st.graph.degree(v) == expected);
        }
    }
}

TEST_CASE("pseudofractal structure", "[generators]") {
    const auto f0 = pseudofractal(0);
    CHECK(f0.graph.node_count() == 3);
    CHECK(f0.graph.edge_count() == 3);

    const auto f1 = pseudofractal(1);
    CHECK(f1.graph.node_count() == 6);
    CHECK(f1.graph.edge_count() == 9);

    const auto f2 = pseudofractal(2);
    CHECK(f2.graph.node_count() == 15);
    CHECK(f2.graph.edge_count() == 27);
    CHECK(2.0 * f2.graph.edge_count() / f2.graph.node_count() == Catch::Approx(3.6));

    for (std::uint32_t g = 0; g <= 10; ++g) {
        const auto st = pseudofractal(g);
        CHECK(st.graph.node_count() == 3 * (pow3(g) + 1) / 2);
        CHECK(st.graph.edge_count() == pow3(g + 1));
        for (NodeId v = 0; v < st.graph.node_count(); ++v) {
            const std::uint32_t half = st.graph.degree(v) / 2;
            REQUIRE(st.graph.degree(v) % 2 == 0);
            REQUIRE((half & (half - 1)) == 0);  // degree = 2 * 2^k
        }
    }
    CHECK_THROWS_AS(pseudofractal(kPseudofractalMaxGeneration + 1), std::length_error);
}

TEST_CASE("barabasi-albert basics", "[generators]") {
    // zero growth steps: just the initial clique
    const Graph clique = barabasi_albert({.n = 5, .m = 3, .m0 = 5, .seed = 1});
    CHECK(clique.node_count() == 5);
    CHECK(clique.edge_count() == 10);

    // edge count arithmetic with m0=3, m=2: C(3,2) + 97*2
    const Graph g = barabasi_albert({.n = 100, .m = 2, .m0 = 3, .seed = 5});
    CHECK(g.edge_count() == 3 + 97 * 2);
    CHECK(is_connected(g));
    // every added node got exactly m distinct targets
    for (NodeId v = 3; v < 100; ++v) CHECK(g.degree(v) >= 2);

    CHECK_THROWS_AS(barabasi_albert({.n = 2, .m = 3, .m0 = 0, .seed = 1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(barabasi_albert({.n = 10, .m = 3, .m0 = 2, .seed = 1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(barabasi_albert({.n = 10, .m = 0, .m0 = 0, .seed = 1}),
                    std::invalid_argument);
}

TEST_CASE("barabasi-albert determinism", "[generators]") {
    const BaConfig cfg{.n = 500, .m = 3, .m0 = 0, .seed = 2024};
    const Graph a = barabasi_albert(cfg);
    const Graph b = barabasi_albert(cfg);
    REQUIRE(a.edges() == b.edges());
    const Graph c = barabasi_albert({.n = 500, .m = 3, .m0 = 0, .seed = 2025});
    CHECK(a.edges() != c.edges());
}

TEST_CASE("barabasi-albert degree tail", "[generators][slow]") {
    // CCDF slope over the fixed decade d in [10,100]; gamma = 1 - slope.
    const Graph g = barabasi_albert({.n = 10000, .m = 3, .m0 = 0, .seed = 3});
    std::vector<std::uint32_t> degrees(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) degrees[v] = g.degree(v);
    std::sort(degrees.begin(), degrees.end());

    const double lo = 10.0;
    const double hi = 100.0;
    const int points = 12;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int used = 0;
    for (int i = 0; i <= points; ++i) {
        const double d = lo * std::pow(hi / lo, static_cast<double>(i) / points);
        const auto it = std::lower_bound(degrees.begin(), degrees.end(), d);
        const auto count = static_cast<double>(degrees.end() - it);
        if (count <= 0) continue;
        const double x = std::log(d);
        const double y = std::log(count / static_cast<double>(degrees.size()));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++used;
    }
    REQUIRE(used >= 8);
    const double slope = (used * sxy - sx * sy) / (used * sxx - sx * sx);
    const double gamma = 1.0 - slope;
    INFO("estimated gamma " << gamma);
    CHECK(gamma > 2.5);
    CHECK(gamma < 3.5);
}

TEST_CASE("baseline families", "[generators]") {
    CHECK(complete_graph(4).edge_count() == 6);
    const Graph c5 = cycle_graph(5);
    CHECK(c5.edge_count() == 5);
    for (NodeId v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);
    CHECK(path_graph(2).edge_count() == 1);
    CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
}
