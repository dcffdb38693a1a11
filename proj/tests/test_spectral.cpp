#include <catch2/catch_amalgamated.hpp>

#include <Eigen/Dense>

#include "covertime/generators.hpp"
#include "covertime/ingest.hpp"
#include "covertime/rng.hpp"
#include "covertime/spectral.hpp"
#include "test_util.hpp"

using namespace covertime;

TEST_CASE("single edge closed form", "[spectral]") {
    const SpectralData s = spectral(path_graph(2));
    CHECK(s.eigenvalues(0) == Catch::Approx(0.0).margin(1e-12));
    CHECK(s.eigenvalues(1) == Catch::Approx(2.0).margin(1e-12));
    CHECK(s.pseudoinverse(0, 0) == Catch::Approx(0.25).margin(1e-12));
    CHECK(s.pseudoinverse(0, 1) == Catch::Approx(-0.25).margin(1e-12));
    CHECK(s.pseudoinverse(1, 1) == Catch::Approx(0.25).margin(1e-12));
}

TEST_CASE("complete graph spectrum", "[spectral]") {
    const SpectralData s = spectral(complete_graph(4));
    CHECK(s.eigenvalues(0) == Catch::Approx(0.0).margin(1e-10));
    for (int k = 1; k < 4; ++k) CHECK(s.eigenvalues(k) == Catch::Approx(4.0).margin(1e-10));
}

TEST_CASE("pseudoinverse identities", "[spectral]") {
    for (const Graph& g : {apollonian(2).graph, load_graph(test_util::data_path("karate.txt")),
                           cycle_graph(9)}) {
        const SpectralData s = spectral(g);
        const Eigen::MatrixXd residual = s.laplacian * s.pseudoinverse * s.laplacian - s.laplacian;
        CHECK(residual.cwiseAbs().maxCoeff() < 1e-9);
        CHECK(s.laplacian.rowwise().sum().cwiseAbs().maxCoeff() < 1e-12);
        CHECK(s.pseudoinverse.rowwise().sum().cwiseAbs().maxCoeff() < 1e-9);
        CHECK(s.eigenvalues(1) > 0.0);

        // spectral-form pseudoinverse agrees with the shifted-inverse route
        const Eigen::MatrixXd shifted = pseudoinverse_shifted(g);
        CHECK((s.pseudoinverse - shifted).cwiseAbs().maxCoeff() < 1e-9);
    }
}

TEST_CASE("walk gap", "[spectral]") {
    const Graph karate = load_graph(test_util::data_path("karate.txt"));
    const SpectralData s = spectral(karate);
    CHECK(s.walk_gap > 0.0);
    // P_2: sigma = {1, -1}, gap = 2
    CHECK(spectral(path_graph(2)).walk_gap == Catch::Approx(2.0).margin(1e-10));
    // K_4: sigma_2 = -1/3
    CHECK(spectral(complete_graph(4)).walk_gap == Catch::Approx(4.0 / 3.0).margin(1e-10));
}

TEST_CASE("spectral rejects bad input", "[spectral]") {
    CHECK_THROWS_AS(spectral(build_graph(4, {{0, 1}, {2, 3}})), std::domain_error);
    CHECK_THROWS_AS(spectral(cycle_graph(8), /*dense_cap=*/4), std::length_error);
}

TEST_CASE("resistance pair closed forms", "[spectral]") {
    CHECK(resistance_pair(spectral(path_graph(2)), 0, 1) == Catch::Approx(1.0).margin(1e-12));
    CHECK(resistance_pair(spectral(path_graph(3)), 0, 2) == Catch::Approx(2.0).margin(1e-12));
    const SpectralData tetra = spectral(complete_graph(4));
    for (NodeId i = 0; i < 4; ++i) {
        for (NodeId j = i + 1; j < 4; ++j) {
            CHECK(resistance_pair(tetra, i, j) == Catch::Approx(0.5).margin(1e-12));
        }
    }
    CHECK(resistance_pair(tetra, 2, 2) == 0.0);
}

TEST_CASE("pseudoinverse and eigenmode routes agree", "[spectral]") {
    for (const Graph& g : {load_graph(test_util::data_path("karate.txt")),
                           pseudofractal(3).graph}) {
        const SpectralData s = spectral(g);
        Rng rng = Rng::stream(17);
        for (int k = 0; k < 200; ++k) {
            const auto i = static_cast<NodeId>(rng.bounded(g.node_count()));
            const auto j = static_cast<NodeId>(rng.bounded(g.node_count()));
            const double a = resistance_pair(s, i, j);
            const double b = resistance_pair_spectral(s, i, j);
            REQUIRE(std::abs(a - b) < 1e-9);
        }
    }
}
