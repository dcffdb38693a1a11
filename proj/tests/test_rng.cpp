#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "covertime/rng.hpp"

using covertime::Rng;

TEST_CASE("streams are reproducible and separated", "[rng]") {
    Rng a = Rng::stream(42, 1, 2, 3);
    Rng b = Rng::stream(42, 1, 2, 3);
    for (int i = 0; i < 64; ++i) CHECK(a.next() == b.next());

    Rng c = Rng::stream(42, 1, 2, 4);
    Rng d = Rng::stream(43, 1, 2, 3);
    Rng e = Rng::stream(42, 1, 2, 3);
    bool differs_c = false;
    bool differs_d = false;
    for (int i = 0; i < 16; ++i) {
        const auto base = e.next();
        differs_c |= c.next() != base;
        differs_d |= d.next() != base;
    }
    CHECK(differs_c);
    CHECK(differs_d);
}

TEST_CASE("bounded draws are in range and roughly uniform", "[rng]") {
    Rng rng = Rng::stream(7);
    std::vector<std::size_t> counts(5, 0);
    const std::size_t draws = 200000;
    for (std::size_t i = 0; i < draws; ++i) {
        const auto v = rng.bounded(5);
        REQUIRE(v < 5);
        ++counts[v];
    }
    for (const auto c : counts) {
        CHECK(std::abs(static_cast<double>(c) / draws - 0.2) < 0.01);
    }
}

TEST_CASE("uniform stays in [0,1)", "[rng]") {
    Rng rng = Rng::stream(99);
    double acc = 0.0;
    for (int i = 0; i < 100000; ++i) {
        const double u = rng.uniform();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        acc += u;
    }
    CHECK(std::abs(acc / 100000 - 0.5) < 0.01);
}
