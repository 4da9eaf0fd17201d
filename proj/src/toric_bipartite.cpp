#include "ringtoric/toric_bipartite.hpp"

#include <algorithm>
#include <stdexcept>

#include "ringtoric/cycle_space.hpp"
#include "ringtoric/ring.hpp"

namespace ringtoric {

Binomial even_cycle_binomial(const Graph& g, const Cycle& c) {
    if (c.length() % 2 != 0) throw Error("odd cycle", "odd cycle has no bipartite binomial");
    const auto q = static_cast<std::size_t>(g.edge_count());
    Binomial b{Exponents(q, 0), Exponents(q, 0)};
    for (std::size_t i = 0; i < c.edges.size(); ++i) (i % 2 == 0 ? b.plus : b.minus)[static_cast<std::size_t>(c.edges[i])] = 1;
    return b;
}

std::vector<Binomial> toric_generators_bipartite(const Graph& g, const Budget& budget) {
    if (!bipartition(g)) throw Error("not bipartite", "graph is not bipartite");
    std::vector<Binomial> out;
    for (const Cycle& c : enumerate_primitive_cycles(g, budget)) out.push_back(even_cycle_binomial(g, c));
    return out;
}

IntMatrix unoriented_incidence(const Graph& g) {
    IntMatrix m(g.vertex_count(), g.edge_count());
    for (int k = 0; k < g.edge_count(); ++k) {
        m.at(g.edge(k).u, k) = 1;
        m.at(g.edge(k).v, k) = 1;
    }
    return m;
}

Height height_toric(const Graph& g) {
    const auto comps = components(g);
    Height h;
    h.summed_over_components = comps.size() > 1;
    for (const auto& comp : comps) {
        const Graph piece = induced_subgraph(g, comp);
        const int nq = piece.edge_count(), nn = piece.vertex_count();
        h.value += bipartition(piece) ? nq - nn + 1 : nq - nn;
    }
    if (h.value != g.edge_count() - integer_rank(unoriented_incidence(g)))
        throw std::logic_error("height formula disagrees with the incidence rank");
    return h;
}

bool is_complete_intersection_bipartite(const Graph& g) {
    if (!bipartition(g)) throw Error("not bipartite", "graph is not bipartite");
    return is_ring_by_rank(g);
}

std::optional<Foliation> build_foliation(const Graph& g) {
    if (g.vertex_count() < 4) throw Error("precondition", "foliations need at least four vertices");
    if (!bipartition(g)) throw Error("precondition", "graph is not bipartite");
    const auto decomposition = blocks(g);
    if (decomposition.blocks.size() != 1 || static_cast<int>(decomposition.blocks.front().edges.size()) != g.edge_count() ||
        g.edge_count() < 2)
        throw Error("precondition", "graph is not 2-connected");

    const auto cert = certify_ring(g);
    if (!cert) return std::nullopt;
    const BlockCertificate& bc = cert->blocks.front();

    Foliation f;
    f.members.push_back(even_cycle_binomial(g, bc.base_cycle));
    // Each attachment contributes variables ranked above everything older; its
    // first edge (not adjacent to the closing edge's side) goes on top.
    std::vector<std::vector<int>> layers;
    layers.push_back(bc.base_cycle.edges);
    for (const auto& path : bc.attachments) {
        f.members.push_back(even_cycle_binomial(g, make_cycle(g, path)));
        std::vector<int> layer;
        for (std::size_t i = 0; i + 1 < path.size(); ++i) layer.push_back(g.edge_index(path[i], path[i + 1]));
        layers.push_back(std::move(layer));
    }
    for (auto it = layers.rbegin(); it != layers.rend(); ++it) f.variable_order.insert(f.variable_order.end(), it->begin(), it->end());
    return f;
}

FoliationCheck validate_foliation(const Foliation& f) {
    auto fail = [](std::string why, int member) { return FoliationCheck{false, std::move(why), member}; };
    std::vector<std::vector<char>> supports;
    for (std::size_t i = 0; i < f.members.size(); ++i) {
        const Binomial& b = f.members[i];
        const int idx = static_cast<int>(i);
        for (std::size_t k = 0; k < b.plus.size(); ++k)
            if (b.plus[k] > 1 || b.minus[k] > 1) return fail("a", idx);
        if (!b.has_disjoint_supports()) return fail("b", idx);
        std::vector<char> support(b.plus.size(), 0);
        for (std::size_t k = 0; k < b.plus.size(); ++k) support[k] = b.plus[k] > 0 || b.minus[k] > 0;
        supports.push_back(std::move(support));
    }
    if (!f.members.empty()) {
        std::vector<char> seen = supports.front();
        for (std::size_t j = 1; j < supports.size(); ++j) {
            int overlap = 0;
            for (std::size_t k = 0; k < seen.size(); ++k) overlap += seen[k] && supports[j][k];
            if (overlap != 1) return fail("c", static_cast<int>(j));
            for (std::size_t k = 0; k < seen.size(); ++k) seen[k] = seen[k] || supports[j][k];
        }
    }
    for (std::size_t i = 0; i < f.members.size(); ++i) {
        const auto dp = total_degree(f.members[i].plus), dm = total_degree(f.members[i].minus);
        if (dp != dm || dp < 2) return fail("homogeneous", static_cast<int>(i));
    }
    if (f.members.empty()) return {};
    const MonomialOrder order = MonomialOrder::lex(f.members.front().variable_count(), f.variable_order);
    std::vector<Exponents> leads;
    for (const Binomial& b : f.members) leads.push_back(oriented(b, order).plus);
    for (std::size_t i = 0; i < leads.size(); ++i)
        for (std::size_t j = i + 1; j < leads.size(); ++j)
            if (!coprime(leads[i], leads[j])) return fail("coprime", static_cast<int>(j));
    return {};
}

}  // namespace ringtoric
