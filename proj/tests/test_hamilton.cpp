#include <doctest.h>

#include <random>

#include "hamcert/families.hpp"
#include "hamcert/hamilton.hpp"
#include "oracles.hpp"

using namespace hamcert;

TEST_CASE("small cases") {
    CHECK_FALSE(hamiltonian_cycle(Graph(0)));
    CHECK_FALSE(hamiltonian_cycle(Graph(2, {{0, 1}})));
    auto c3 = hamiltonian_cycle(cycle_graph(3));
    REQUIRE(c3);
    CHECK(c3->order == std::vector<int>{0, 1, 2});
    CHECK_FALSE(hamiltonian_cycle(complete_bipartite(2, 3)));
    CHECK(hamiltonian_cycle(complete_bipartite(3, 3)));
    auto p0 = hamiltonian_path(Graph(0));
    REQUIRE(p0);
    CHECK(p0->order.empty());
    auto p1 = hamiltonian_path(Graph(1));
    REQUIRE(p1);
    CHECK(p1->order == std::vector<int>{0});
    CHECK_FALSE(hamiltonian_path(generate(kind::Claw{})));
    CHECK_FALSE(hamiltonian_path(generate(kind::Net{})));
    CHECK(hamiltonian_path(path_graph(7)));
}

TEST_CASE("petersen graph is not hamiltonian but has a path") {
    Graph p(10);
    for (int i = 0; i < 5; ++i) {
        p.add_edge(i, (i + 1) % 5);
        p.add_edge(i, i + 5);
        p.add_edge(i + 5, (i + 2) % 5 + 5);
    }
    CHECK_FALSE(hamiltonian_cycle(p));
    auto path = hamiltonian_path(p);
    REQUIRE(path);
    CHECK(validate(p, *path));
}

TEST_CASE("validators reject broken certificates") {
    Graph c = cycle_graph(5);
    CHECK(validate(c, HamCycle{{0, 1, 2, 3, 4}}));
    CHECK_FALSE(validate(c, HamCycle{{0, 2, 1, 3, 4}}));
    CHECK_FALSE(validate(c, HamCycle{{0, 1, 2, 3}}));
    CHECK_FALSE(validate(c, HamCycle{{0, 1, 2, 3, 3}}));
    CHECK(validate(c, HamPath{{1, 2, 3, 4, 0}}));
    CHECK_FALSE(validate(c, HamPath{{1, 3, 2, 4, 0}}));
}

TEST_CASE("decisions agree with the dynamic-programming oracle") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 4000; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 14)(rng);
        Graph g = oracle::random_graph(rng, n, std::uniform_real_distribution<double>(0.15, 0.6)(rng));
        auto c = hamiltonian_cycle(g);
        CHECK(c.has_value() == oracle::hamiltonian(g));
        if (c) CHECK(validate(g, *c));
        auto p = hamiltonian_path(g);
        CHECK(p.has_value() == oracle::hamiltonian_path(g));
        if (p) CHECK(validate(g, *p));
    }
}

TEST_CASE("obstructions are not hamiltonian") {
    CHECK_FALSE(hamiltonian_cycle(generate(kind::Snare{})));
    for (int n = 2; n <= 6; ++n) CHECK_FALSE(hamiltonian_cycle(generate(kind::Nova{n})));
    for (int a = 2; a <= 5; ++a)
        for (int b = a; b <= 5; ++b)
            for (int c = b; a + b + c - 1 <= 12; ++c) {
                CHECK_FALSE(hamiltonian_cycle(generate(kind::Theta{{a, b, c}})));
                CHECK_FALSE(hamiltonian_cycle(generate(kind::ClosedTheta{{a, b, c}})));
            }
    CHECK_FALSE(hamiltonian_cycle(generate(kind::Wheel{6, {0, 2, 4}})));
    CHECK_FALSE(hamiltonian_cycle(generate(kind::Wheel{10, {0, 3, 6}})));
    // Suns are hamiltonian.
    for (int n = 2; n <= 5; ++n) CHECK(hamiltonian_cycle(generate(kind::Sun{n})));
}
