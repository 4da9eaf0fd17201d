#include <catch_amalgamated.hpp>

#include <map>
#include <numeric>
#include <random>

#include "ringtoric/binomial.hpp"
#include "ringtoric/orientation_builder.hpp"
#include "ringtoric/oriented.hpp"
#include "support.hpp"

using namespace ringtoric;

namespace {

Exponents mono(std::initializer_list<std::uint32_t> e) { return Exponents(e.begin(), e.end()); }

Binomial bin(std::initializer_list<std::uint32_t> plus, std::initializer_list<std::uint32_t> minus) {
    return {mono(plus), mono(minus)};
}

// A polynomial as a map from exponent vectors to integer coefficients.
using Poly = std::map<std::vector<std::uint32_t>, long>;

Poly poly_of(const Binomial& b, long scale = 1) {
    Poly p;
    p[{b.plus.begin(), b.plus.end()}] += scale;
    p[{b.minus.begin(), b.minus.end()}] -= scale;
    return p;
}

Poly times(const Poly& p, const std::vector<std::uint32_t>& m) {
    Poly out;
    for (const auto& [e, c] : p) {
        auto shifted = e;
        for (std::size_t k = 0; k < m.size(); ++k) shifted[k] += m[k];
        out[shifted] += c;
    }
    return out;
}

Poly minus(Poly a, const Poly& b) {
    for (const auto& [e, c] : b) a[e] -= c;
    std::erase_if(a, [](const auto& kv) { return kv.second == 0; });
    return a;
}

MonomialOrder random_order(std::mt19937_64& rng, std::size_t q) {
    std::vector<int> vars(q);
    std::iota(vars.begin(), vars.end(), 0);
    std::shuffle(vars.begin(), vars.end(), rng);
    std::vector<std::uint64_t> weights(q);
    for (auto& w : weights) w = std::uniform_int_distribution<std::uint64_t>(1, 4)(rng);
    switch (rng() % 3) {
        case 0: return MonomialOrder::lex(q, vars);
        case 1: return MonomialOrder(MonomialOrder::Kind::graded_lex, q, vars, weights);
        default: return MonomialOrder::grevlex(q, vars, weights);
    }
}

Exponents random_monomial(std::mt19937_64& rng, std::size_t q) {
    Exponents e(q, 0);
    for (auto& x : e) x = static_cast<std::uint32_t>(rng() % 3);
    return e;
}

}  // namespace

TEST_CASE("compare basics") {
    const auto lex = MonomialOrder::lex(2);
    CHECK(compare(lex, mono({1, 0}), mono({0, 1})) == std::strong_ordering::greater);
    CHECK(compare(lex, mono({2, 1}), mono({2, 1})) == std::strong_ordering::equal);
    const auto glex = MonomialOrder(MonomialOrder::Kind::graded_lex, 2);
    CHECK(compare(glex, mono({1, 0}), mono({0, 2})) == std::strong_ordering::less);
    const auto grevlex = MonomialOrder::grevlex(3);
    // Same degree: the one with the smaller power of the last variable wins.
    CHECK(compare(grevlex, mono({0, 2, 0}), mono({1, 0, 1})) == std::strong_ordering::greater);
    const auto rev = MonomialOrder::lex(2, {1, 0});
    CHECK(compare(rev, mono({1, 0}), mono({0, 1})) == std::strong_ordering::less);
    CHECK_THROWS_AS(compare(lex, mono({1}), mono({0, 1})), Error);
    CHECK_THROWS_AS(MonomialOrder::lex(2, {0, 0}), Error);
}

TEST_CASE("monomial orders are total, multiplicative and well founded on samples") {
    std::mt19937_64 rng(17);
    for (int round = 0; round < 200; ++round) {
        const std::size_t q = 1 + rng() % 6;
        const MonomialOrder order = random_order(rng, q);
        const Exponents a = random_monomial(rng, q), b = random_monomial(rng, q), c = random_monomial(rng, q);
        const auto ab = order.compare(a, b);
        REQUIRE(order.compare(b, a) == (ab == std::strong_ordering::less      ? std::strong_ordering::greater
                                        : ab == std::strong_ordering::greater ? std::strong_ordering::less
                                                                              : std::strong_ordering::equal));
        REQUIRE((ab == std::strong_ordering::equal) == (a == b));
        REQUIRE(order.compare(add(a, c), add(b, c)) == ab);
        if (order.compare(a, b) != std::strong_ordering::less && order.compare(b, c) != std::strong_ordering::less)
            REQUIRE(order.compare(a, c) != std::strong_ordering::less);
        REQUIRE(order.compare(a, Exponents(q, 0)) != std::strong_ordering::less);
    }
}

TEST_CASE("s_binomial matches explicit polynomial arithmetic") {
    const Binomial f = bin({1, 0, 1, 0, 0, 0}, {0, 1, 0, 1, 0, 0});  // t1 t3 - t2 t4
    const Binomial g = bin({0, 0, 1, 0, 1, 0}, {0, 0, 0, 1, 0, 1});  // t3 t5 - t4 t6
    const auto lex = MonomialOrder::lex(6);
    const auto s = s_binomial(f, g, lex);
    REQUIRE(s);
    CHECK(same_up_to_sign(*s, bin({0, 1, 0, 1, 1, 0}, {1, 0, 0, 1, 0, 1})));

    // (lcm / lt f) f - (lcm / lt g) g over explicit polynomials.
    const Poly expected = minus(times(poly_of(f), {0, 0, 0, 0, 1, 0}), times(poly_of(g), {1, 0, 0, 0, 0, 0}));
    const Poly got = poly_of(*s);
    CHECK((got == expected || got == minus({}, expected)));
}

TEST_CASE("s_binomial shortcuts") {
    const auto lex = MonomialOrder::lex(4);
    CHECK_FALSE(s_binomial(bin({1, 0, 0, 0}, {0, 1, 0, 0}), bin({0, 0, 1, 0}, {0, 0, 0, 1}), lex));
    const Binomial f = bin({1, 0, 1, 0}, {0, 1, 0, 1});
    CHECK_FALSE(s_binomial(f, f, lex));
}

TEST_CASE("normal_form") {
    const auto lex = MonomialOrder::lex(4);
    const Binomial f = bin({1, 0, 1, 0}, {0, 1, 0, 1});
    const std::vector<Binomial> basis{f};
    CHECK_FALSE(normal_form(f, basis, lex));
    const Binomial g = bin({0, 0, 0, 2}, {0, 1, 0, 0});
    const auto r = normal_form(g, basis, lex);
    REQUIRE(r);
    CHECK(same_up_to_sign(*r, g));
    Budget tight;
    tight.max_steps = 1;
    const std::vector<Binomial> chain{bin({2, 0, 0, 0}, {0, 1, 0, 0}), bin({0, 1, 0, 0}, {0, 0, 1, 0}),
                                      bin({0, 0, 1, 0}, {0, 0, 0, 1})};
    CHECK_THROWS_AS(normal_form(bin({2, 0, 0, 0}, {0, 0, 0, 0}), chain, lex, tight), BudgetExceeded);
    const auto r2 = normal_form(bin({2, 0, 0, 0}, {0, 0, 0, 1}), chain, lex);
    CHECK_FALSE(r2);
}

TEST_CASE("buchberger with coprime leading terms returns its input") {
    const auto lex = MonomialOrder::lex(6);
    const std::vector<Binomial> gens{bin({1, 0, 0, 1, 0, 0}, {0, 1, 0, 0, 1, 0}), bin({0, 0, 1, 0, 0, 1}, {0, 1, 0, 0, 0, 1})};
    const GroebnerBasis gb = buchberger(gens, lex);
    REQUIRE(gb.elements.size() == 2);
    for (std::size_t i = 0; i < 2; ++i) CHECK(gb.elements[i] == oriented(gens[i], lex));
    const std::vector<Binomial> one{gens[0]};
    CHECK(buchberger(one, lex).elements == std::vector<Binomial>{oriented(gens[0], lex)});
}

TEST_CASE("buchberger budget") {
    const Graph k4 = complete_graph(4);
    std::vector<Binomial> gens;
    for (const auto& cb : toric_generators_oriented(OrientedGraph::by_rank(k4, std::vector<int>{0, 1, 2, 3})))
        gens.push_back(cb.binomial);
    BuchbergerOptions opts;
    opts.budget.max_pairs = 1;
    CHECK_THROWS_AS(buchberger(gens, MonomialOrder::grevlex(6), opts), BudgetExceeded);
}

TEST_CASE("buchberger output is a Groebner basis of the same ideal under different orders") {
    std::mt19937_64 rng(2);
    for (int i = 0; i < 40; ++i) {
        const Graph g = random_graph(rng, 4 + i % 3, 0.6);
        std::vector<int> rank(static_cast<std::size_t>(g.vertex_count()));
        std::iota(rank.begin(), rank.end(), 0);
        std::shuffle(rank.begin(), rank.end(), rng);
        const OrientedGraph d = OrientedGraph::by_rank(g, rank);
        std::vector<Binomial> gens;
        for (const auto& cb : toric_generators_oriented(d)) gens.push_back(cb.binomial);
        if (gens.empty()) continue;
        const auto q = static_cast<std::size_t>(g.edge_count());
        const MonomialOrder o1 = random_order(rng, q), o2 = random_order(rng, q);
        BuchbergerOptions reduce;
        reduce.reduce = true;
        const GroebnerBasis a = buchberger(gens, o1), b = buchberger(gens, o2, reduce);
        REQUIRE(is_groebner_basis(a.elements, o1));
        REQUIRE(is_groebner_basis(b.elements, o2));
        for (const Binomial& x : a.elements) REQUIRE_FALSE(normal_form(x, b));
        for (const Binomial& x : b.elements) REQUIRE_FALSE(normal_form(x, a));
        for (const auto& cb : universal_groebner_basis(d)) REQUIRE_FALSE(normal_form(cb.binomial, a));
    }
}

TEST_CASE("fundamental generators of C5 plus a chord reduce every cycle binomial") {
    const OrientationCertificate cert = ci_generators(fixtures::c5_chord());
    std::vector<Binomial> gens;
    for (const auto& g : cert.generators) gens.push_back(g.binomial);
    const auto q = static_cast<std::size_t>(cert.oriented.base().edge_count());
    const GroebnerBasis gb = buchberger(gens, MonomialOrder::grevlex(q));
    for (const auto& cb : universal_groebner_basis(cert.oriented)) CHECK_FALSE(normal_form(cb.binomial, gb));
}

TEST_CASE("kernel_member") {
    const Graph tri = complete_graph(3);  // edges 0-1 0-2 1-2
    const OrientedGraph cyclic(tri, {{0, 1}, {2, 0}, {1, 2}});
    const IncidenceMatrix a = incidence(cyclic);
    CHECK(kernel_member(a, bin({0, 0, 0}, {1, 1, 1})));
    CHECK_FALSE(kernel_member(a, bin({1, 0, 0}, {0, 1, 0})));
    const OrientedGraph up = OrientedGraph::by_rank(tri, std::vector<int>{0, 1, 2});
    for (const auto& cb : universal_groebner_basis(up)) CHECK(kernel_member(incidence(up), cb.binomial));
    CHECK_THROWS_AS(kernel_member(a, bin({1, 0}, {0, 1})), Error);
}

TEST_CASE("exponent arithmetic overflow is an error") {
    const Exponents big = mono({0xFFFFFFFFu});
    CHECK_THROWS_AS(add(big, mono({1})), Error);
    CHECK_THROWS_AS(subtract(mono({0}), mono({1})), Error);
}
