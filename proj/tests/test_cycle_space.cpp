#include <catch_amalgamated.hpp>

#include "ringtoric/cycle_space.hpp"
#include "ringtoric/primitive_cycles.hpp"
#include "support.hpp"

using namespace ringtoric;

TEST_CASE("boundary") {
    const Graph tri = complete_graph(3);
    Gf2Vector all(3);
    for (std::size_t k = 0; k < 3; ++k) all.set(k);
    CHECK(boundary(tri, all).none());

    Gf2Vector one(3);
    one.set(0);
    CHECK(boundary(tri, one).support() == std::vector<int>{0, 1});

    const Graph bowtie = fixtures::graph("v a\na b\nb v\nv c\nc d\nd v");
    Gf2Vector both(6);
    for (std::size_t k = 0; k < 6; ++k) both.set(k);
    CHECK(boundary(bowtie, both).none());
    CHECK_THROWS_AS(boundary(tri, Gf2Vector(4)), Error);
}

TEST_CASE("cycle_rank") {
    CHECK(cycle_rank(path_graph(6)) == 0);
    CHECK(cycle_rank(Graph::from_edges(4, {{0, 1}, {2, 3}})) == 0);
    CHECK(cycle_rank(complete_graph(4)) == 3);
    CHECK(cycle_rank(complete_bipartite(2, 3)) == 2);
}

TEST_CASE("cycle_rank equals the kernel dimension of the boundary map") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 300; ++i) {
        const Graph g = random_graph(rng, 1 + i % 9, 0.4);
        REQUIRE(cycle_rank(g) == cycle_space_dimension(g));
    }
}

TEST_CASE("fundamental_basis") {
    const Graph c5 = cycle_graph(5);
    const std::vector<int> tree{0, 1, 2, 3};
    const CycleBasis b = fundamental_basis(c5, tree);
    REQUIRE(b.vectors.size() == 1);
    CHECK(b.vectors[0].count() == 5);

    const Graph k4 = complete_graph(4);  // edges 0-1 0-2 0-3 1-2 1-3 2-3
    const std::vector<int> star{0, 1, 2};
    const CycleBasis kb = fundamental_basis(k4, star);
    REQUIRE(kb.vectors.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(boundary(k4, kb.vectors[i]).none());
        CHECK(kb.witness_cycles[i].length() == 3);
        CHECK(kb.witness_cycles[i].vertices[0] == 0);
    }
    CHECK(gf2_rank(kb.vectors) == 3);

    CHECK(fundamental_basis(path_graph(4), std::vector<int>{0, 1, 2}).vectors.empty());
    CHECK_THROWS_AS(fundamental_basis(c5, std::vector<int>{0, 1, 2}), Error);
    CHECK_THROWS_AS(fundamental_basis(complete_graph(3), std::vector<int>{0, 1, 2}), Error);
    CHECK_THROWS_AS(fundamental_basis(c5, std::vector<int>{0, 0, 1, 2}), Error);
}

TEST_CASE("gf2_rank") {
    CHECK(gf2_rank(std::vector<Gf2Vector>{}) == 0);
    Gf2Vector v(5);
    v.set(1);
    v.set(3);
    CHECK(gf2_rank(std::vector<Gf2Vector>{v, v}) == 1);
    const Graph k4 = complete_graph(4);
    std::vector<Gf2Vector> triangles;
    for (const Cycle& c : enumerate_primitive_cycles(k4)) triangles.push_back(chain_of(k4, c));
    REQUIRE(triangles.size() == 4);
    CHECK(gf2_rank(triangles) == 3);
}

TEST_CASE("fundamental basis spans the cycle space") {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 200; ++i) {
        const Graph g = random_graph(rng, 2 + i % 8, 0.45);
        const CycleBasis b = fundamental_basis(g, spanning_forest(g));
        REQUIRE(static_cast<int>(b.vectors.size()) == cycle_rank(g));
        REQUIRE(gf2_rank(b.vectors) == cycle_rank(g));
        for (const auto& vec : b.vectors) REQUIRE(boundary(g, vec).none());
    }
}

TEST_CASE("make_cycle canonicalizes and validates") {
    const Graph c5 = cycle_graph(5);
    const std::vector<int> rotated{3, 2, 1, 0, 4};
    const Cycle c = make_cycle(c5, rotated);
    CHECK(c.vertices == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(c.edges == std::vector<int>{0, 1, 2, 3, 4});
    CHECK_THROWS_AS(make_cycle(c5, std::vector<int>{0, 2, 4}), Error);
    CHECK_THROWS_AS(make_cycle(c5, std::vector<int>{0, 1}), Error);
}
