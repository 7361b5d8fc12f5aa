#include <doctest.h>

#include <map>
#include <random>

#include "hamcert/errors.hpp"
#include "hamcert/isomorphism.hpp"
#include "hamcert/verifier.hpp"
#include "oracles.hpp"

using namespace hamcert;

namespace {

std::vector<int> random_perm(std::mt19937_64& rng, int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

}  // namespace

TEST_CASE("canonical form is invariant under relabeling") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = std::uniform_int_distribution<int>(0, 12)(rng);
        Graph g = oracle::random_graph(rng, n, std::uniform_real_distribution<double>(0.1, 0.9)(rng));
        Graph h = g.relabeled(random_perm(rng, n));
        CHECK(canonical_form(g) == canonical_form(h));
        auto lab = canonical_labeling(g);
        CHECK(g.relabeled(lab) == h.relabeled(canonical_labeling(h)));
    }
}

TEST_CASE("canonical form agrees with brute force on random pairs") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 3000; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 6)(rng);
        Graph a = oracle::random_graph(rng, n, 0.5);
        Graph b = oracle::random_graph(rng, n, 0.5);
        const bool same = oracle::brute_isomorphic(a, b);
        CHECK(same == (canonical_form(a) == canonical_form(b)));
        CHECK(same == is_isomorphic(a, b));
    }
}

TEST_CASE("regular graphs that refinement cannot split") {
    // C6 and two disjoint triangles are both 2-regular on 6 vertices.
    Graph c6 = cycle_graph(6);
    Graph two_triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK_FALSE(is_isomorphic(c6, two_triangles));
    CHECK(canonical_form(c6) != canonical_form(two_triangles));
    // K33 and the triangular prism are 3-regular on 6 vertices.
    Graph prism(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
    CHECK_FALSE(is_isomorphic(complete_bipartite(3, 3), prism));
}

TEST_CASE("isomorphism maps are verified bijections") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 12)(rng);
        Graph g = oracle::random_graph(rng, n, 0.4);
        auto perm = random_perm(rng, n);
        Graph h = g.relabeled(perm);
        auto f = find_isomorphism(g, h);
        REQUIRE(f);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) CHECK(g.adjacent(u, v) == h.adjacent((*f)[u], (*f)[v]));
    }
}

TEST_CASE("canonical form is limited to 12 vertices") {
    CHECK_THROWS_AS(canonical_form(Graph(13)), PreconditionError);
}

TEST_CASE("builtin enumeration matches brute-force grouping up to 6 vertices") {
    // Independent: every labeled graph on n vertices grouped by brute-force
    // canonical string.
    for (int n = 1; n <= 6; ++n) {
        std::set<std::string> connected, all;
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
        for (std::uint32_t m = 0; m < (1u << pairs.size()); ++m) {
            Graph g(n);
            for (std::size_t i = 0; i < pairs.size(); ++i)
                if ((m >> i) & 1) g.add_edge(pairs[i].first, pairs[i].second);
            const std::string key = oracle::brute_canonical(g);
            all.insert(key);
            if (oracle::connected_within(g, (1ULL << n) - 1)) connected.insert(key);
        }
        CHECK(enumerate_graphs(n, GraphClass::kAll).size() == connected.size());
        CHECK(enumerate_all_graphs(n).size() == all.size());
        std::set<std::string> builtin;
        for (const Graph& g : enumerate_graphs(n, GraphClass::kAll)) builtin.insert(oracle::brute_canonical(g));
        CHECK(builtin == connected);
    }
}
