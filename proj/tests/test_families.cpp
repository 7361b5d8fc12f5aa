#include <doctest.h>

#include <map>
#include <random>
#include <sstream>

#include "families_all.hpp"
#include "hamcert/errors.hpp"
#include "hamcert/families.hpp"
#include "hamcert/isomorphism.hpp"
#include "oracles.hpp"

using namespace hamcert;

TEST_CASE("generator examples") {
    Graph nova2 = generate(kind::Nova{2});
    CHECK(nova2.order() == 5);
    CHECK(nova2.size() == 7);
    CHECK(nova2.degree_sequence() == std::vector<int>{4, 4, 2, 2, 2});
    Graph snare = generate(kind::Snare{});
    CHECK(snare.order() == 7);
    CHECK(snare.size() == 12);
    CHECK(snare.degree_sequence() == std::vector<int>{6, 4, 4, 4, 2, 2, 2});
    CHECK(oracle::brute_isomorphic(generate(kind::Theta{{2, 2, 2}}), complete_bipartite(2, 3)));
    CHECK(generate(kind::Net{}).degree_sequence() == std::vector<int>{3, 3, 3, 1, 1, 1});
    CHECK(generate(kind::Claw{}).degree_sequence() == std::vector<int>{3, 1, 1, 1});
    CHECK(generate(kind::Sun{3}).size() == 9);
}

TEST_CASE("invalid parameters are rejected") {
    CHECK_THROWS_AS(generate(kind::Nova{1}), PreconditionError);
    CHECK_THROWS_AS(generate(kind::Sun{1}), PreconditionError);
    CHECK_THROWS_AS(generate(kind::Theta{{1, 2, 2}}), PreconditionError);
    CHECK_THROWS_AS(generate(kind::Wheel{3, {0, 1, 2}}), PreconditionError);
    CHECK_THROWS_AS(generate(kind::Wheel{6, {0, 2}}), PreconditionError);
    CHECK_THROWS_AS(generate(kind::Wheel{6, {0, 2, 6}}), PreconditionError);
    CHECK_THROWS_AS(parse_kind("theta", {2, 2}), PreconditionError);
    CHECK_THROWS_AS(parse_kind("octopus", {}), PreconditionError);
}

TEST_CASE("recognizer examples") {
    auto k = recognize_obstruction(complete_bipartite(2, 3));
    REQUIRE(k);
    CHECK(*k == ObstructionKind{kind::Theta{{2, 2, 2}}});
    Graph w(7);
    for (int i = 0; i < 6; ++i) w.add_edge(i, (i + 1) % 6);
    for (int i : {1, 3, 5}) w.add_edge(i, 6);
    auto kw = recognize_obstruction(w);
    REQUIRE(kw);
    CHECK(*kw == ObstructionKind{kind::Wheel{6, {0, 2, 4}}});
    Graph petersen(10);
    for (int i = 0; i < 5; ++i) {
        petersen.add_edge(i, (i + 1) % 5);
        petersen.add_edge(i, i + 5);
        petersen.add_edge(i + 5, (i + 2) % 5 + 5);
    }
    CHECK_FALSE(recognize_obstruction(petersen));
    CHECK_FALSE(recognize_obstruction(cycle_graph(6)));
    CHECK(*recognize_obstruction(generate(kind::ClosedTheta{{2, 2, 2}})) == ObstructionKind{kind::Nova{2}});
}

TEST_CASE("round trip for every kind up to 12 vertices") {
    // Kinds that generate the same graph collapse to the first in recognizer
    // priority; collect isomorphism classes to find them.
    std::map<std::string, std::vector<ObstructionKind>> classes;
    for (const auto& k : all_kinds(12)) classes[canonical_form(generate(k))].push_back(k);
    int checked = 0;
    for (const auto& [canon, kinds] : classes) {
        for (const auto& k : kinds) {
            auto r = recognize_obstruction(generate(k));
            REQUIRE(r);
            if (kinds.size() == 1) {
                CHECK_MESSAGE(*r == normalize(k), to_string(k) << " recognized as " << to_string(*r));
            } else {
                CHECK(canonical_form(generate(*r)) == canon);
            }
            ++checked;
        }
    }
    // The only collision is the 2-nova, which is also the closed theta (2,2,2).
    int collisions = 0;
    for (const auto& [canon, kinds] : classes) {
        if (kinds.size() == 1) continue;
        ++collisions;
        CHECK(kinds.size() == 2);
        CHECK(*recognize_obstruction(generate(kinds[0])) == ObstructionKind{kind::Nova{2}});
    }
    CHECK(collisions == 1);
    CHECK(checked > 100);
}

TEST_CASE("recognition is invariant under relabeling") {
    std::mt19937_64 rng(4);
    for (const auto& k : all_kinds(9)) {
        Graph g = generate(k);
        std::vector<int> perm(g.order());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(recognize_obstruction(g) == recognize_obstruction(g.relabeled(perm)));
    }
}

TEST_CASE("triangle-freeness of generated kinds") {
    for (const auto& k : all_kinds(11)) {
        Graph g = generate(k);
        CHECK(is_triangle_free(g) == oracle::triangle_free(g));
        CHECK(is_triangle_free_kind(k) == oracle::triangle_free(g));
        if (auto t = find_triangle(g)) {
            CHECK(g.adjacent((*t)[0], (*t)[1]));
            CHECK(g.adjacent((*t)[1], (*t)[2]));
            CHECK(g.adjacent((*t)[0], (*t)[2]));
        }
        if (std::holds_alternative<kind::Theta>(k)) CHECK(is_triangle_free(g));
        if (auto* c = std::get_if<kind::ClosedTheta>(&k)) CHECK(is_triangle_free(g) == (c->lengths[0] >= 3));
        if (auto* w = std::get_if<kind::Wheel>(&k)) {
            bool adjacent_spokes = false;
            for (std::size_t i = 0; i < w->spokes.size(); ++i) {
                const int a = w->spokes[i], b = w->spokes[(i + 1) % w->spokes.size()];
                if ((b - a + w->cycle) % w->cycle == 1) adjacent_spokes = true;
            }
            CHECK(is_triangle_free(g) == (!adjacent_spokes && w->cycle >= 5));
        }
    }
    auto t = find_triangle(generate(kind::ClosedTheta{{2, 3, 3}}));
    REQUIRE(t);
    CHECK(*t == std::array<int, 3>{0, 1, 2});
    CHECK_FALSE(is_triangle_free(complete_graph(4)));
    CHECK(is_triangle_free(generate(kind::Theta{{3, 3, 3}})));
}

TEST_CASE("text form round trips through the parser") {
    for (const auto& k : all_kinds(9)) {
        const std::string s = to_string(normalize(k));
        const auto space = s.find(' ');
        std::vector<int> params;
        if (space != std::string::npos) {
            std::string rest = s.substr(space + 1);
            for (char& c : rest)
                if (c == ',') c = ' ';
            std::istringstream in(rest);
            int x;
            while (in >> x) params.push_back(x);
        }
        CHECK(normalize(parse_kind(s.substr(0, space), params)) == normalize(k));
    }
    CHECK(to_string(kind::Theta{{2, 3, 3}}) == "theta 2,3,3");
    CHECK(to_string(kind::Wheel{6, {0, 2, 4}}) == "wheel 6 0,2,4");
}
