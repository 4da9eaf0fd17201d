#include <catch_amalgamated.hpp>

#include <set>

#include "ringtoric/cycle_space.hpp"
#include "ringtoric/oracles.hpp"
#include "support.hpp"

using namespace ringtoric;

namespace {

std::string kind_of(std::string_view text) {
    try {
        parse_graph(text);
    } catch (const Error& e) {
        return e.kind() + ":" + std::to_string(e.line());
    }
    return "ok";
}

}  // namespace

TEST_CASE("parse_graph reads labelled edge lists") {
    const Graph g = parse_graph("a b\nb c");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.label(0) == "a");
    CHECK(g.edge(1) == Edge{1, 2});
    CHECK(parse_graph("# comment\n\n x  y # trailing\n").edge_count() == 1);
}

TEST_CASE("parse_graph rejects loops, repeats and junk with line numbers") {
    CHECK(kind_of("a a") == "loop:1");
    CHECK(kind_of("a b\na b") == "multi-edge:2");
    CHECK(kind_of("a b\nb a") == "multi-edge:2");
    CHECK(kind_of("a b\n\nc") == "parse:3");
    CHECK(kind_of("a b c") == "parse:1");
}

TEST_CASE("from_edges validates") {
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 2}}), Error);
    CHECK_THROWS_AS(Graph::from_edges(2, {{1, 1}}), Error);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), Error);
}

TEST_CASE("components") {
    CHECK(components(fixtures::graph("a b\nb c")).size() == 1);
    CHECK(components(fixtures::graph("a b\nc d")).size() == 2);
    CHECK(components(Graph::from_edges(0, {})).empty());
    CHECK(component_count(Graph::from_edges(3, {})) == 3);
}

TEST_CASE("blocks of small graphs") {
    const BlockDecomposition pendant = blocks(fixtures::graph("a b\nb c\nc a\nc d"));
    CHECK(pendant.blocks.size() == 2);
    CHECK(pendant.cutvertices == std::vector<int>{2});
    CHECK(pendant.bridges == std::vector<int>{3});

    const BlockDecomposition bowtie = blocks(fixtures::graph("v a\na b\nb v\nv c\nc d\nd v"));
    CHECK(bowtie.blocks.size() == 2);
    CHECK(bowtie.cutvertices == std::vector<int>{0});

    const BlockDecomposition k4 = blocks(complete_graph(4));
    CHECK(k4.blocks.size() == 1);
    CHECK(k4.cutvertices.empty());

    const BlockDecomposition isolated = blocks(Graph::from_edges(3, {{0, 1}}));
    CHECK(isolated.blocks.size() == 2);
    CHECK(isolated.blocks[1].edges.empty());
    CHECK(isolated.blocks[1].vertices == std::vector<int>{2});
}

TEST_CASE("block decomposition invariants on all graphs up to 6 vertices") {
    for (int n = 1; n <= 6; ++n) {
        auto it = GraphIterator::exhaustive(n, false);
        while (auto g = it.next()) {
            const BlockDecomposition bd = blocks(*g);
            std::vector<int> owner(static_cast<std::size_t>(g->edge_count()), -1);
            std::size_t total = 0;
            for (std::size_t b = 0; b < bd.blocks.size(); ++b) {
                total += bd.blocks[b].edges.size();
                for (int e : bd.blocks[b].edges) {
                    REQUIRE(owner[static_cast<std::size_t>(e)] == -1);
                    owner[static_cast<std::size_t>(e)] = static_cast<int>(b);
                }
            }
            REQUIRE(total == static_cast<std::size_t>(g->edge_count()));
            const std::set<int> cuts(bd.cutvertices.begin(), bd.cutvertices.end());
            for (std::size_t a = 0; a < bd.blocks.size(); ++a)
                for (std::size_t b = a + 1; b < bd.blocks.size(); ++b) {
                    std::vector<int> common;
                    std::set_intersection(bd.blocks[a].vertices.begin(), bd.blocks[a].vertices.end(),
                                          bd.blocks[b].vertices.begin(), bd.blocks[b].vertices.end(),
                                          std::back_inserter(common));
                    REQUIRE(common.size() <= 1);
                    if (!common.empty()) REQUIRE(cuts.count(common.front()) == 1);
                }
        }
    }
}

TEST_CASE("spanning_forest has n - r edges") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        const Graph g = random_graph(rng, 1 + i % 10, 0.25);
        const auto forest = spanning_forest(g);
        REQUIRE(static_cast<int>(forest.size()) == g.vertex_count() - component_count(g));
        REQUIRE(component_count(Graph::from_edges(g.vertex_count(), [&] {
                    std::vector<Edge> es;
                    for (int e : forest) es.push_back(g.edge(e));
                    return es;
                }())) == component_count(g));
    }
    CHECK(spanning_forest(cycle_graph(4)).size() == 3);
    CHECK(spanning_forest(path_graph(5)) == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("bipartition") {
    const auto c6 = bipartition(cycle_graph(6));
    REQUIRE(c6);
    CHECK(c6->first == std::vector<int>{0, 2, 4});
    CHECK_FALSE(bipartition(cycle_graph(5)));
    const auto k23 = bipartition(complete_bipartite(2, 3));
    REQUIRE(k23);
    CHECK(k23->first.size() == 2);
    CHECK(k23->second.size() == 3);
}

TEST_CASE("bipartite iff no odd cycle") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 300; ++i) {
        const Graph g = random_graph(rng, 2 + i % 7, 0.35);
        bool odd = false;
        for (const Cycle& c : oracle_all_cycles(g)) odd = odd || c.length() % 2 == 1;
        REQUIRE(bipartition(g).has_value() == !odd);
    }
}

TEST_CASE("induced_subgraph") {
    const Graph k4 = complete_graph(4);
    const std::vector<int> three{0, 1, 3};
    CHECK(induced_subgraph(k4, three) == complete_graph(3));
    const std::vector<int> all{0, 1, 2, 3};
    CHECK(induced_subgraph(k4, all) == k4);
    const std::vector<int> arc{1, 2, 3};
    CHECK(induced_subgraph(cycle_graph(5), arc) == path_graph(3));
    const std::vector<int> bad{7};
    CHECK_THROWS_AS(induced_subgraph(k4, bad), Error);
}
