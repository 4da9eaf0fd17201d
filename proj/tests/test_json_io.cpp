#include <catch_amalgamated.hpp>

#include "ringtoric/json_io.hpp"
#include "support.hpp"

using namespace ringtoric;

TEST_CASE("graphs round-trip") {
    const Graph labelled = fixtures::two_squares();
    CHECK(graph_from_json(graph_to_json(labelled)) == labelled);
    const Graph plain = complete_graph(4);
    CHECK(graph_from_json(graph_to_json(plain)) == plain);
    CHECK(graph_from_json(Json::parse(graph_to_json(labelled).dump())) == labelled);
    CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"vertices":["a"]})")), Error);
}

TEST_CASE("binomials round-trip with multiplicities") {
    const Binomial b{Exponents{2, 0, 1}, Exponents{0, 1, 0}};
    const Json j = binomial_to_json(b);
    CHECK(j["plus"] == Json::array({0, 0, 2}));
    CHECK(j["minus"] == Json::array({1}));
    CHECK(binomial_from_json(j, 3) == b);
    CHECK_THROWS_AS(binomial_from_json(j, 2), Error);
}

TEST_CASE("certificates and tree sequences round-trip") {
    const Graph g = fixtures::two_squares();
    const RingCertificate cert = *certify_ring(g);
    CHECK(certificate_from_json(g, Json::parse(certificate_to_json(cert).dump())) == cert);

    std::mt19937_64 rng(9);
    for (int i = 0; i < 50; ++i) {
        const Graph h = random_graph(rng, 2 + i % 7, 0.5);
        if (!is_connected(h)) continue;
        const TreeSequence seq = build_tree_sequence(h);
        REQUIRE(tree_sequence_from_json(Json::parse(tree_sequence_to_json(seq).dump())) == seq);
        if (auto c = certify_ring(h)) REQUIRE(certificate_from_json(h, certificate_to_json(*c)) == *c);
    }
}

TEST_CASE("errors serialize with kind and line") {
    try {
        parse_graph("a b\nq");
    } catch (const Error& e) {
        const Json j = error_to_json(e);
        CHECK(j["error"] == "parse");
        CHECK(j["line"] == 2);
    }
    const Json no_line = error_to_json(Error("precondition", "x"));
    CHECK_FALSE(no_line.contains("line"));
}
