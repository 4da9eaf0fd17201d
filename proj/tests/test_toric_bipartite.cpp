#include <catch_amalgamated.hpp>

#include "ringtoric/cycle_space.hpp"
#include "ringtoric/ring.hpp"
#include "ringtoric/toric_bipartite.hpp"
#include "support.hpp"

using namespace ringtoric;

namespace {

Binomial unit_binomial(std::size_t q, std::vector<int> plus, std::vector<int> minus) {
    return {unit_exponents(q, plus), unit_exponents(q, minus)};
}

bool in_kernel(const IntMatrix& m, const Binomial& b) {
    std::vector<std::int64_t> diff;
    for (std::size_t k = 0; k < b.plus.size(); ++k) diff.push_back(std::int64_t{b.plus[k]} - std::int64_t{b.minus[k]});
    for (auto v : m.apply(diff))
        if (v != 0) return false;
    return true;
}

}  // namespace

TEST_CASE("even_cycle_binomial alternates along the cycle") {
    const Graph c4 = cycle_graph(4);
    const Cycle c = make_cycle(c4, std::vector<int>{0, 1, 2, 3});
    CHECK(even_cycle_binomial(c4, c) == unit_binomial(4, {0, 2}, {1, 3}));
    const Graph c6 = cycle_graph(6);
    CHECK(even_cycle_binomial(c6, make_cycle(c6, std::vector<int>{0, 1, 2, 3, 4, 5})) ==
          unit_binomial(6, {0, 2, 4}, {1, 3, 5}));
    const Graph tri = complete_graph(3);
    CHECK_THROWS_AS(even_cycle_binomial(tri, make_cycle(tri, std::vector<int>{0, 1, 2})), Error);
}

TEST_CASE("toric_generators_bipartite") {
    CHECK(toric_generators_bipartite(cycle_graph(4)).size() == 1);
    CHECK(toric_generators_bipartite(complete_bipartite(2, 3)).size() == 3);
    CHECK(toric_generators_bipartite(path_graph(5)).empty());
    CHECK_THROWS_AS(toric_generators_bipartite(complete_graph(3)), Error);
}

TEST_CASE("height_toric") {
    CHECK(height_toric(cycle_graph(6)).value == 1);
    CHECK(height_toric(complete_graph(4)).value == 2);
    CHECK(height_toric(complete_bipartite(2, 3)).value == 2);
    const Height split = height_toric(fixtures::graph("a b\nb c\nc d\nd a\nx y\ny z\nz x"));
    CHECK(split.value == 1 + 0);
    CHECK(split.summed_over_components);
}

TEST_CASE("is_complete_intersection_bipartite") {
    CHECK(is_complete_intersection_bipartite(cycle_graph(6)));
    CHECK_FALSE(is_complete_intersection_bipartite(complete_bipartite(2, 3)));
    CHECK(is_complete_intersection_bipartite(fixtures::two_squares()));
    CHECK_THROWS_AS(is_complete_intersection_bipartite(cycle_graph(5)), Error);
}

TEST_CASE("build_foliation") {
    const auto c4 = build_foliation(cycle_graph(4));
    REQUIRE(c4);
    CHECK(c4->members.size() == 1);
    CHECK(validate_foliation(*c4).valid);

    const auto squares = build_foliation(fixtures::two_squares());
    REQUIRE(squares);
    REQUIRE(squares->members.size() == 2);
    CHECK(validate_foliation(*squares).valid);

    CHECK_FALSE(build_foliation(complete_bipartite(2, 3)));
    CHECK_THROWS_AS(build_foliation(path_graph(4)), Error);
    CHECK_THROWS_AS(build_foliation(cycle_graph(5)), Error);
    CHECK_THROWS_AS(build_foliation(fixtures::graph("a b\nb c\nc d\nd a\nd e\ne f\nf g\ng d")), Error);
}

TEST_CASE("validate_foliation flags each condition") {
    Foliation square_free{{Binomial{Exponents{2, 0}, Exponents{0, 1}}}, {}};
    CHECK(validate_foliation(square_free).violated == "a");

    Foliation overlapping{{Binomial{Exponents{1, 1}, Exponents{1, 0}}}, {}};
    CHECK(validate_foliation(overlapping).violated == "b");

    // t0 t2 - t1 t3 and t0 t4 - t1 t5 meet in two variables.
    Foliation chain{{unit_binomial(6, {0, 2}, {1, 3}), unit_binomial(6, {0, 4}, {1, 5})}, {}};
    const FoliationCheck c = validate_foliation(chain);
    CHECK(c.violated == "c");
    CHECK(c.member == 1);

    // Single shared variable, but lex leads t0 t2 and t0 t4 share t0.
    Foliation leads{{unit_binomial(5, {0, 1}, {2, 3}), unit_binomial(5, {0, 4}, {2, 3})}, {}};
    CHECK_FALSE(validate_foliation(leads).valid);
    Foliation shared{{unit_binomial(7, {0, 2}, {1, 3}), unit_binomial(7, {0, 4}, {5, 6})}, {}};
    CHECK(validate_foliation(shared).violated == "coprime");
    shared.variable_order = {4, 5, 6, 1, 0, 2, 3};
    CHECK(validate_foliation(shared).valid);
}

TEST_CASE("bipartite generators are kernel members and ring graphs count right") {
    for (int n = 2; n <= 7; ++n)
        for_each_connected_bipartite(n, [](const Graph& g) {
            const IntMatrix m = unoriented_incidence(g);
            const auto gens = toric_generators_bipartite(g);
            for (const Binomial& b : gens) REQUIRE(in_kernel(m, b));
            const bool ring = is_complete_intersection_bipartite(g);
            REQUIRE((static_cast<int>(gens.size()) == height_toric(g).value) == ring);
            if (ring) REQUIRE(static_cast<int>(gens.size()) == cycle_rank(g));
        });
}
