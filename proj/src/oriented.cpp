#include "ringtoric/oriented.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "ringtoric/oracles.hpp"
#include "ringtoric/primitive_cycles.hpp"

namespace ringtoric {

OrientedGraph::OrientedGraph(Graph base, std::vector<Arc> arcs) : base_(std::move(base)), arcs_(std::move(arcs)) {
    if (static_cast<int>(arcs_.size()) != base_.edge_count())
        throw Error("orientation", "orientation must cover every edge exactly once");
    for (int k = 0; k < base_.edge_count(); ++k) {
        const Edge& e = base_.edge(k);
        const Arc& a = arcs_[static_cast<std::size_t>(k)];
        if (!((a.tail == e.u && a.head == e.v) || (a.tail == e.v && a.head == e.u)))
            throw Error("orientation", "arc " + std::to_string(k) + " does not orient edge " + std::to_string(k));
    }
}

OrientedGraph OrientedGraph::by_rank(Graph base, std::span<const int> rank) {
    const int n = base.vertex_count();
    if (static_cast<int>(rank.size()) != n) throw Error("labeling", "labeling does not cover every vertex");
    std::vector<char> used(n, 0);
    for (int r : rank) {
        if (r < 0 || r >= n || used[r]) throw Error("labeling", "labeling is not a bijection onto 0..n-1");
        used[r] = 1;
    }
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<std::size_t>(base.edge_count()));
    for (const Edge& e : base.edges())
        arcs.push_back(rank[e.u] < rank[e.v] ? Arc{e.u, e.v} : Arc{e.v, e.u});
    return OrientedGraph(std::move(base), std::move(arcs));
}

OrientedGraph parse_orientation(Graph base, std::string_view text) {
    const Graph pairs = parse_graph(text);
    std::vector<Arc> arcs(static_cast<std::size_t>(base.edge_count()), Arc{-1, -1});
    int line = 0;
    std::size_t pos = 0;
    // Recover line numbers by scanning the raw text alongside parsed arcs.
    std::vector<int> arc_lines;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(pos, end - pos);
        pos = end + 1;
        ++line;
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        if (raw.find_first_not_of(" \t\r") != std::string_view::npos) arc_lines.push_back(line);
    }
    for (int k = 0; k < pairs.edge_count(); ++k) {
        const int where = arc_lines[static_cast<std::size_t>(k)];
        const auto tail = base.find_vertex(pairs.label(pairs.edge(k).u));
        const auto head = base.find_vertex(pairs.label(pairs.edge(k).v));
        if (!tail || !head) throw Error("orientation", "line " + std::to_string(where) + ": unknown vertex", where);
        const int e = base.edge_index(*tail, *head);
        if (e < 0) throw Error("orientation", "line " + std::to_string(where) + ": not an edge of the graph", where);
        arcs[static_cast<std::size_t>(e)] = Arc{*tail, *head};
    }
    for (const Arc& a : arcs)
        if (a.tail < 0) throw Error("orientation", "orientation leaves an edge undirected");
    return OrientedGraph(std::move(base), std::move(arcs));
}

IncidenceMatrix incidence(const OrientedGraph& d) {
    const Graph& g = d.base();
    IncidenceMatrix a(g.vertex_count(), g.edge_count());
    for (int k = 0; k < g.edge_count(); ++k) {
        a.at(d.arc(k).tail, k) = -1;
        a.at(d.arc(k).head, k) = 1;
    }
    if (integer_rank(a) != g.vertex_count() - component_count(g))
        throw std::logic_error("incidence matrix rank differs from n - r");
    return a;
}

bool kernel_member(const IncidenceMatrix& a, const Binomial& b) {
    if (static_cast<int>(b.plus.size()) != a.cols || static_cast<int>(b.minus.size()) != a.cols)
        throw Error("length", "binomial length does not match the incidence matrix");
    std::vector<std::int64_t> diff(static_cast<std::size_t>(a.cols));
    for (std::size_t k = 0; k < diff.size(); ++k)
        diff[k] = static_cast<std::int64_t>(b.plus[k]) - static_cast<std::int64_t>(b.minus[k]);
    for (std::int64_t v : a.apply(diff))
        if (v != 0) return false;
    return true;
}

OrientedCycleBinomial cycle_binomial(const OrientedGraph& d, const Cycle& cycle) {
    OrientedCycleBinomial out;
    out.cycle = cycle;
    const std::size_t k = cycle.length();
    for (std::size_t i = 0; i < k; ++i) {
        const int e = cycle.edges[i];
        (d.arc(e).tail == cycle.vertices[i] ? out.plus_edges : out.minus_edges).push_back(e);
    }
    std::sort(out.plus_edges.begin(), out.plus_edges.end());
    std::sort(out.minus_edges.begin(), out.minus_edges.end());
    const auto q = static_cast<std::size_t>(d.base().edge_count());
    out.binomial = Binomial{unit_exponents(q, out.plus_edges), unit_exponents(q, out.minus_edges)};
    return out;
}

OrientedCycleBinomial cycle_binomial(const OrientedGraph& d, std::span<const int> cycle_vertices) {
    return cycle_binomial(d, make_cycle(d.base(), cycle_vertices));
}

std::vector<OrientedCycleBinomial> universal_groebner_basis(const OrientedGraph& d, const Budget& budget) {
    std::vector<OrientedCycleBinomial> out;
    for (const Cycle& c : oracle_all_cycles(d.base(), budget)) out.push_back(cycle_binomial(d, c));
    return out;
}

std::vector<OrientedCycleBinomial> toric_generators_oriented(const OrientedGraph& d, const Budget& budget) {
    std::vector<OrientedCycleBinomial> out;
    for (const Cycle& c : enumerate_primitive_cycles(d.base(), budget)) out.push_back(cycle_binomial(d, c));
    return out;
}

ChordSplit split_on_chord(const OrientedGraph& d, std::span<const int> cycle_vertices, int chord) {
    const Graph& g = d.base();
    const Cycle c = make_cycle(g, cycle_vertices);
    if (chord < 0 || chord >= g.edge_count()) throw Error("chord", "edge index out of range");
    const auto& xs = c.vertices;
    const int r = static_cast<int>(xs.size());
    auto pos_of = [&](int v) {
        const auto it = std::find(xs.begin(), xs.end(), v);
        return it == xs.end() ? -1 : static_cast<int>(it - xs.begin());
    };
    int i = pos_of(g.edge(chord).u), j = pos_of(g.edge(chord).v);
    if (i < 0 || j < 0) throw Error("chord", "chord endpoints are not on the cycle");
    if (i > j) std::swap(i, j);
    if (j - i < 2 || (i == 0 && j == r - 1)) throw Error("chord", "edge joins consecutive cycle vertices");

    std::vector<int> c1(xs.begin(), xs.begin() + i + 1);
    c1.insert(c1.end(), xs.begin() + j, xs.end());
    const std::vector<int> c2(xs.begin() + i, xs.begin() + j + 1);

    ChordSplit out;
    out.chord = chord;
    out.first = cycle_binomial(d, c1);
    out.second = cycle_binomial(d, c2);

    const auto k = static_cast<std::size_t>(chord);
    out.first_signed = out.first.binomial.plus[k] ? out.first.binomial : out.first.binomial.negated();
    out.second_signed = out.second.binomial.plus[k] ? out.second.binomial : out.second.binomial.negated();
    const Binomial& alpha = out.first_signed;
    const Binomial& beta = out.second_signed;

    const Exponents ek = unit_exponents(static_cast<std::size_t>(g.edge_count()), std::span<const int>(&chord, 1));
    out.first_cofactor = subtract(beta.plus, ek);
    out.second_cofactor = subtract(alpha.plus, ek);

    // (b+/t_k)(t^{a+} - t^{a-}) - (a+/t_k)(t^{b+} - t^{b-}); the t^{a+ + b+}/t_k terms cancel.
    const Exponents cancel_left = add(out.first_cofactor, alpha.plus);
    const Exponents cancel_right = add(out.second_cofactor, beta.plus);
    const Binomial combined{add(out.second_cofactor, beta.minus), add(out.first_cofactor, alpha.minus)};
    const OrientedCycleBinomial whole = cycle_binomial(d, c);
    out.identity_holds = cancel_left == cancel_right && same_up_to_sign(combined, whole.binomial);
    return out;
}

Acyclicity is_acyclic(const OrientedGraph& d) {
    const Graph& g = d.base();
    const int n = g.vertex_count();
    std::vector<int> indegree(n, 0);
    std::vector<std::vector<int>> out_arcs(n);
    for (int k = 0; k < g.edge_count(); ++k) {
        ++indegree[d.arc(k).head];
        out_arcs[d.arc(k).tail].push_back(d.arc(k).head);
    }
    std::priority_queue<int, std::vector<int>, std::greater<>> ready;
    for (int v = 0; v < n; ++v)
        if (indegree[v] == 0) ready.push(v);
    std::vector<int> order;
    while (!ready.empty()) {
        const int v = ready.top();
        ready.pop();
        order.push_back(v);
        for (int w : out_arcs[v])
            if (--indegree[w] == 0) ready.push(w);
    }
    Acyclicity result;
    if (static_cast<int>(order.size()) == n) {
        result.order = std::move(order);
        return result;
    }
    // Every leftover vertex has an in-arc from another leftover vertex; walk
    // backwards until a vertex repeats.
    std::vector<int> in_from(n, -1);
    for (int k = 0; k < g.edge_count(); ++k)
        if (indegree[d.arc(k).head] > 0 && indegree[d.arc(k).tail] > 0) in_from[d.arc(k).head] = d.arc(k).tail;
    int v = 0;
    while (indegree[v] == 0) ++v;
    std::vector<int> seen_at(n, -1);
    std::vector<int> walk;
    while (seen_at[v] < 0) {
        seen_at[v] = static_cast<int>(walk.size());
        walk.push_back(v);
        v = in_from[v];
    }
    std::vector<int> cyc(walk.begin() + seen_at[v], walk.end());
    std::reverse(cyc.begin(), cyc.end());
    result.witness = make_cycle(g, cyc);
    return result;
}

std::vector<std::uint64_t> grading_degrees(const OrientedGraph& d, std::span<const int> order) {
    const Graph& g = d.base();
    const int n = g.vertex_count();
    if (static_cast<int>(order.size()) != n) throw Error("order", "ordering does not list every vertex");
    std::vector<int> position(n, -1);
    for (int i = 0; i < n; ++i) {
        const int v = order[static_cast<std::size_t>(i)];
        if (v < 0 || v >= n || position[v] >= 0) throw Error("order", "ordering is not a permutation");
        position[v] = i;
    }
    std::vector<std::uint64_t> degrees;
    degrees.reserve(static_cast<std::size_t>(g.edge_count()));
    for (const Arc& a : d.arcs()) {
        if (position[a.head] <= position[a.tail]) throw Error("order", "ordering is not topological");
        degrees.push_back(static_cast<std::uint64_t>(position[a.head] - position[a.tail]));
    }
    return degrees;
}

bool is_homogeneous(const Binomial& b, std::span<const std::uint64_t> degrees) {
    std::uint64_t lhs = 0, rhs = 0;
    for (std::size_t k = 0; k < degrees.size(); ++k) {
        lhs += degrees[k] * b.plus[k];
        rhs += degrees[k] * b.minus[k];
    }
    return lhs == rhs;
}

}  // namespace ringtoric
