#include <catch_amalgamated.hpp>

#include "ringtoric/cycle_space.hpp"
#include "ringtoric/primitive_cycles.hpp"
#include "support.hpp"

using namespace ringtoric;

TEST_CASE("enumerate_primitive_cycles on named graphs") {
    for (int n = 3; n <= 9; ++n) CHECK(enumerate_primitive_cycles(cycle_graph(n)).size() == 1);
    const auto k4 = enumerate_primitive_cycles(complete_graph(4));
    CHECK(k4.size() == 4);
    for (const Cycle& c : k4) CHECK(c.length() == 3);
    const auto k23 = enumerate_primitive_cycles(complete_bipartite(2, 3));
    CHECK(k23.size() == 3);
    for (const Cycle& c : k23) CHECK(c.length() == 4);
    CHECK(enumerate_primitive_cycles(path_graph(5)).empty());
}

TEST_CASE("frank") {
    CHECK(frank(path_graph(4)) == 0);
    CHECK(frank(complete_graph(4)) == 4);
    CHECK(frank(complete_bipartite(2, 3)) == 3);
    CHECK(frank(fixtures::c5_chord()) == 2);
}

TEST_CASE("cycle budget is enforced") {
    Budget b;
    b.max_cycles = 5;
    CHECK_THROWS_AS(enumerate_primitive_cycles(complete_graph(6), b), BudgetExceeded);
    CHECK(enumerate_primitive_cycles(complete_graph(4), b).size() == 4);
}

TEST_CASE("pcp") {
    CHECK(pcp(fixtures::two_squares()).holds);
    CHECK(pcp(path_graph(5)).holds);
    const PcpResult k23 = pcp(complete_bipartite(2, 3));
    REQUIRE_FALSE(k23.holds);
    REQUIRE(k23.witness);
    int shared = 0;
    for (int e : k23.witness->first.edges)
        shared += std::count(k23.witness->second.edges.begin(), k23.witness->second.edges.end(), e);
    CHECK(shared == 2);
}

TEST_CASE("k4_subdivision_free") {
    CHECK_FALSE(k4_subdivision_free(complete_graph(4)));
    CHECK_FALSE(k4_subdivision_free(fixtures::k4_subdivided()));
    CHECK(k4_subdivision_free(complete_bipartite(2, 3)));
    CHECK_FALSE(k4_subdivision_free(wheel_graph(4)));
    CHECK(k4_subdivision_free(fixtures::two_squares()));
}

TEST_CASE("primitive cycles agree with the brute-force filter, exhaustive to 6 vertices") {
    fixtures::for_each_connected(6, [](const Graph& g) {
        REQUIRE(frank(g) == oracle_frank(g));
        REQUIRE(k4_subdivision_free(g) != oracle_k4_subdivision(g));
    });
}

TEST_CASE("primitive cycles span the cycle space and rank <= frank") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 400; ++i) {
        const Graph g = random_graph(rng, 1 + i % 10, 0.4);
        std::vector<Gf2Vector> vecs;
        for (const Cycle& c : enumerate_primitive_cycles(g)) vecs.push_back(chain_of(g, c));
        REQUIRE(cycle_rank(g) <= static_cast<int>(vecs.size()));
        REQUIRE(gf2_rank(vecs) == cycle_rank(g));
    }
}
