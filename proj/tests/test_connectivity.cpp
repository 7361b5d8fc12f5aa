#include <doctest.h>

#include <random>

#include "hamcert/connectivity.hpp"
#include "hamcert/errors.hpp"
#include "hamcert/families.hpp"
#include "oracles.hpp"

using namespace hamcert;

TEST_CASE("components are sorted by minimum vertex") {
    Graph g(6, {{4, 5}, {0, 2}});
    auto cs = connected_components(g);
    REQUIRE(cs.size() == 4);
    CHECK(cs[0] == VertexSet{0, 2});
    CHECK(cs[1] == VertexSet{1});
    CHECK(cs[3] == VertexSet{4, 5});
    CHECK(connected_components(g, VertexSet{0, 1, 2}).size() == 2);
    CHECK(reachable(g, 4, g.vertices()) == VertexSet{4, 5});
}

TEST_CASE("two-connectivity witnesses") {
    CHECK(is_two_connected(cycle_graph(3)));
    CHECK(is_two_connected(complete_bipartite(2, 3)));
    auto small = two_connectivity_obstacle(path_graph(2));
    REQUIRE(small);
    CHECK(small->kind == CutWitness::Kind::kTooSmall);

    auto cut = two_connectivity_obstacle(path_graph(4));
    REQUIRE(cut);
    CHECK(cut->kind == CutWitness::Kind::kCutVertex);
    CHECK(cut->a == 1);
    CHECK(validate(path_graph(4), *cut));

    Graph split(4, {{0, 1}, {2, 3}});
    auto dis = two_connectivity_obstacle(split);
    REQUIRE(dis);
    CHECK(dis->kind == CutWitness::Kind::kDisconnected);
    CHECK(validate(split, *dis));
    CHECK_FALSE(validate(cycle_graph(4), CutWitness{CutWitness::Kind::kCutVertex, 0, -1}));
    CHECK_FALSE(validate(cycle_graph(4), CutWitness{CutWitness::Kind::kDisconnected, 0, 2}));
}

TEST_CASE("two-connectivity agrees with vertex-deletion oracle") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 3000; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 12)(rng);
        Graph g = oracle::random_graph(rng, n, std::uniform_real_distribution<double>(0.1, 0.7)(rng));
        auto w = two_connectivity_obstacle(g);
        CHECK(!w == oracle::two_connected(g));
        if (w) CHECK(validate(g, *w));
    }
}

TEST_CASE("toughness witnesses for novae") {
    for (int n = 2; n <= 6; ++n) {
        Graph g = generate(kind::Nova{n});
        auto w = toughness_witness(g, g.order());
        REQUIRE(w);
        CHECK(w->x.size() == n);
        CHECK(static_cast<int>(w->components.size()) == n + 1);
        CHECK(validate(g, *w));
    }
    CHECK_FALSE(toughness_witness(cycle_graph(6), 6));
    CHECK_THROWS_AS(toughness_witness(cycle_graph(4), 5), PreconditionError);
    CHECK_THROWS_AS(toughness_witness(cycle_graph(4), -1), PreconditionError);
}

TEST_CASE("toughness witness on K_{2,3}") {
    auto w = toughness_witness(complete_bipartite(2, 3), 2);
    REQUIRE(w);
    CHECK(w->x == VertexSet{0, 1});
    CHECK(w->components.size() == 3);
    ToughnessWitness forged{VertexSet{0}, {VertexSet{1}, VertexSet{2}}};
    CHECK_FALSE(validate(complete_bipartite(2, 3), forged));
}
