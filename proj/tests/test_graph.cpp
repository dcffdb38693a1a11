#include <catch2/catch_amalgamated.hpp>

#include "covertime/generators.hpp"
#include "covertime/graph.hpp"
#include "covertime/ingest.hpp"
#include "test_util.hpp"

using namespace covertime;

TEST_CASE("build deduplicates and validates", "[graph]") {
    const Graph triangle = build_graph(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(triangle.node_count() == 3);
    CHECK(triangle.edge_count() == 3);
    test_util::require_simple(triangle);

    const Graph single = build_graph(2, {{0, 1}, {1, 0}});
    CHECK(single.edge_count() == 1);

    CHECK_THROWS_AS(build_graph(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_WITH(build_graph(2, {{0, 0}}), Catch::Matchers::ContainsSubstring("(0,0)"));
    CHECK_THROWS_AS(build_graph(2, {{0, 5}}), std::invalid_argument);
}

TEST_CASE("degree basics", "[graph]") {
    const Graph triangle = build_graph(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(triangle.degree(0) == 2);
    const Graph k4 = complete_graph(4);
    for (NodeId v = 0; v < 4; ++v) CHECK(k4.degree(v) == 3);
    CHECK_THROWS_AS(triangle.degree(7), std::out_of_range);

    // degree doubling: initial tetrahedron nodes have degree 6 in A_1
    const auto a1 = apollonian(1);
    for (NodeId v = 0; v < 4; ++v) CHECK(a1.graph.degree(v) == 6);
}

TEST_CASE("largest connected component", "[graph]") {
    const Graph triangle = build_graph(3, {{0, 1}, {1, 2}, {2, 0}});
    const auto same = largest_connected_component(triangle);
    CHECK(same.graph.node_count() == 3);
    for (NodeId v = 0; v < 3; ++v) CHECK(same.old_to_new[v] == v);

    // triangle plus an isolated edge: triangle wins on size
    const Graph two = build_graph(5, {{0, 1}, {1, 2}, {2, 0}, {3, 4}});
    const auto lcc = largest_connected_component(two);
    CHECK(lcc.graph.node_count() == 3);
    CHECK(lcc.graph.edge_count() == 3);
    CHECK(lcc.old_to_new[3] == -1);
    CHECK(lcc.old_to_new[4] == -1);
    CHECK(is_connected(lcc.graph));

    // equal sizes: keep the component containing the smallest original id
    const Graph tie = build_graph(4, {{0, 1}, {2, 3}});
    const auto kept = largest_connected_component(tie);
    REQUIRE(kept.new_to_old.size() == 2);
    CHECK(kept.new_to_old[0] == 0);
    CHECK(kept.new_to_old[1] == 1);

    const Graph empty;
    CHECK(largest_connected_component(empty).graph.node_count() == 0);
}

TEST_CASE("hop diameter", "[graph]") {
    CHECK(hop_diameter(path_graph(3)) == 2);
    CHECK(hop_diameter(complete_graph(5)) == 1);
    for (std::size_t n = 2; n <= 9; ++n) {
        CHECK(hop_diameter(complete_graph(n)) == 1);
        CHECK(hop_diameter(path_graph(n)) == n - 1);
    }
    CHECK_THROWS_AS(hop_diameter(build_graph(4, {{0, 1}, {2, 3}})), std::domain_error);

    const Graph karate = load_graph(test_util::data_path("karate.txt"));
    CHECK(hop_diameter(karate) == 5);
}

TEST_CASE("generator outputs satisfy the simple-graph invariants", "[graph]") {
    test_util::require_simple(apollonian(3).graph);
    test_util::require_simple(pseudofractal(4).graph);
    test_util::require_simple(barabasi_albert({.n = 200, .m = 3, .m0 = 0, .seed = 11}));
    test_util::require_simple(cycle_graph(9));
    test_util::require_simple(load_graph(test_util::data_path("karate.txt")));
}
