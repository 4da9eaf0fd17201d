#include "ringtoric/orientation_builder.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "ringtoric/primitive_cycles.hpp"

namespace ringtoric {

namespace {

std::vector<int> sorted(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

// Smallest neighbour of v not yet marked, or -1.
int first_free_neighbor(const Graph& g, int v, const std::vector<char>& marked) {
    for (const Neighbor& nb : g.neighbors(v))
        if (!marked[nb.vertex]) return nb.vertex;
    return -1;
}

std::vector<int> maximal_path(const Graph& g, std::vector<char>& in_tree, std::vector<int>& edges) {
    int start = 0;
    std::vector<int> path{start};
    in_tree[start] = 1;
    for (int next; (next = first_free_neighbor(g, path.back(), in_tree)) >= 0;) {
        edges.push_back(g.edge_index(path.back(), next));
        in_tree[next] = 1;
        path.push_back(next);
    }
    std::vector<int> front;
    for (int at = start, next; (next = first_free_neighbor(g, at, in_tree)) >= 0; at = next) {
        edges.push_back(g.edge_index(at, next));
        in_tree[next] = 1;
        front.push_back(next);
    }
    std::reverse(front.begin(), front.end());
    front.insert(front.end(), path.begin(), path.end());
    return front;
}

TreeSequence sequence_of_connected(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<char> in_tree(n, 0);
    std::vector<int> tree;
    std::vector<int> labeling = maximal_path(g, in_tree, tree);

    TreeSequence seq;
    for (;;) {
        TreeStage stage;
        stage.tree_edges = sorted(tree);
        stage.labeling = labeling;
        int u = 0;
        while (u < static_cast<int>(labeling.size()) && first_free_neighbor(g, labeling[u], in_tree) < 0) ++u;
        stage.closed_prefix = u;
        if (u == static_cast<int>(labeling.size())) {
            seq.stages.push_back(std::move(stage));
            break;
        }
        const int attach = labeling[u];
        std::vector<int> grown{attach};
        for (int next; (next = first_free_neighbor(g, grown.back(), in_tree)) >= 0;) {
            tree.push_back(g.edge_index(grown.back(), next));
            in_tree[next] = 1;
            grown.push_back(next);
        }
        std::reverse(grown.begin(), grown.end());
        stage.attach_vertex = attach;
        stage.attached_path = grown;

        std::vector<int> relabeled(labeling.begin(), labeling.begin() + u);
        relabeled.insert(relabeled.end(), grown.begin(), grown.end());
        relabeled.insert(relabeled.end(), labeling.begin() + u + 1, labeling.end());
        labeling = std::move(relabeled);
        seq.stages.push_back(std::move(stage));
    }
    if (static_cast<int>(labeling.size()) != n) throw std::logic_error("tree sequence stopped before spanning");
    seq.final_tree = sorted(tree);
    seq.final_labeling = labeling;
    return seq;
}

}  // namespace

std::vector<int> neighbor_set(const Graph& g, std::span<const int> s) {
    std::vector<char> hit(g.vertex_count(), 0);
    for (int v : s) {
        if (v < 0 || v >= g.vertex_count()) throw Error("vertex", "unknown vertex " + std::to_string(v));
        for (const Neighbor& nb : g.neighbors(v)) hit[nb.vertex] = 1;
    }
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (hit[v]) out.push_back(v);
    return out;
}

TreeSequence build_tree_sequence(const Graph& g) {
    if (g.vertex_count() == 0 || !is_connected(g)) throw Error("disconnected", "tree sequence needs a connected graph");
    return sequence_of_connected(g);
}

OrientedGraph orient_by_labeling(const Graph& g, std::span<const int> labeling) {
    const int n = g.vertex_count();
    if (static_cast<int>(labeling.size()) != n) throw Error("labeling", "labeling does not cover every vertex");
    std::vector<int> rank(n, -1);
    for (int i = 0; i < n; ++i) {
        const int v = labeling[static_cast<std::size_t>(i)];
        if (v < 0 || v >= n || rank[v] >= 0) throw Error("labeling", "labeling is not a permutation of the vertices");
        rank[v] = i;
    }
    return OrientedGraph::by_rank(g, rank);
}

std::vector<FundamentalGenerator> fundamental_generators(const OrientedGraph& d, std::span<const int> tree_edges) {
    const Graph& g = d.base();
    std::vector<char> in_tree(static_cast<std::size_t>(g.edge_count()), 0);
    for (int e : tree_edges) in_tree[static_cast<std::size_t>(e)] = 1;
    std::vector<FundamentalGenerator> out;
    for (int f = 0; f < g.edge_count(); ++f) {
        if (in_tree[static_cast<std::size_t>(f)]) continue;
        const std::vector<int> path = forest_path(g, tree_edges, g.edge(f).u, g.edge(f).v);
        if (path.size() < 2) throw Error("tree", "tree edges do not span the endpoints of edge " + std::to_string(f));
        OrientedCycleBinomial cb = cycle_binomial(d, path);
        FundamentalGenerator gen;
        gen.non_tree_edge = f;
        gen.cycle = std::move(cb.cycle);
        gen.binomial = cb.binomial.plus[static_cast<std::size_t>(f)] ? cb.binomial : cb.binomial.negated();
        gen.singleton_side = total_degree(gen.binomial.plus) == 1;
        out.push_back(std::move(gen));
    }
    return out;
}

OrientationCertificate ci_generators(const Graph& g, bool with_primitive) {
    if (g.vertex_count() == 0) throw Error("empty", "graph has no vertices");
    OrientationCertificate cert;
    const auto comps = components(g);
    cert.disconnected = comps.size() > 1;
    for (const auto& comp : comps) {
        // induced_subgraph keeps increasing order, so local i is comp[i].
        const Graph piece = induced_subgraph(g, comp);
        TreeSequence local = sequence_of_connected(piece);
        auto lift_vertices = [&](std::vector<int>& vs) {
            for (int& v : vs) v = comp[static_cast<std::size_t>(v)];
        };
        auto lift_edges = [&](std::vector<int>& es) {
            for (int& e : es) e = g.edge_index(comp[static_cast<std::size_t>(piece.edge(e).u)], comp[static_cast<std::size_t>(piece.edge(e).v)]);
            std::sort(es.begin(), es.end());
        };
        for (TreeStage& st : local.stages) {
            lift_edges(st.tree_edges);
            lift_vertices(st.labeling);
            lift_vertices(st.attached_path);
            if (st.attach_vertex >= 0) st.attach_vertex = comp[static_cast<std::size_t>(st.attach_vertex)];
        }
        lift_edges(local.final_tree);
        lift_vertices(local.final_labeling);
        cert.labeling.insert(cert.labeling.end(), local.final_labeling.begin(), local.final_labeling.end());
        cert.tree_edges.insert(cert.tree_edges.end(), local.final_tree.begin(), local.final_tree.end());
        cert.sequences.push_back(std::move(local));
    }
    std::sort(cert.tree_edges.begin(), cert.tree_edges.end());
    cert.oriented = orient_by_labeling(g, cert.labeling);
    cert.generators = fundamental_generators(cert.oriented, cert.tree_edges);
    for (const FundamentalGenerator& gen : cert.generators)
        if (!gen.singleton_side)
            throw std::logic_error("fundamental generator for edge " + std::to_string(gen.non_tree_edge) + " has no single-variable side");
    if (with_primitive) cert.primitive_generators = toric_generators_oriented(cert.oriented);
    return cert;
}

std::optional<std::vector<int>> spanning_oriented_path(const OrientedGraph& d) {
    const Acyclicity acyc = is_acyclic(d);
    if (!acyc.order) return std::nullopt;
    const auto& order = *acyc.order;
    std::vector<int> edges;
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
        const int e = d.base().edge_index(order[i], order[i + 1]);
        if (e < 0) return std::nullopt;
        edges.push_back(e);
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

MonomialOrder non_tree_first_lex(const Graph& g, std::span<const int> tree_edges) {
    std::vector<char> in_tree(static_cast<std::size_t>(g.edge_count()), 0);
    for (int e : tree_edges) in_tree[static_cast<std::size_t>(e)] = 1;
    std::vector<int> variables;
    for (int pass = 0; pass < 2; ++pass)
        for (int e = 0; e < g.edge_count(); ++e)
            if (in_tree[static_cast<std::size_t>(e)] == pass) variables.push_back(e);
    return MonomialOrder::lex(static_cast<std::size_t>(g.edge_count()), std::move(variables));
}

namespace {

bool generates(std::span<const Binomial> subset, std::span<const Binomial> all, const MonomialOrder& order,
               const Budget& budget) {
    BuchbergerOptions opts;
    opts.budget = budget;
    const GroebnerBasis gb = buchberger(subset, order, opts);
    for (const Binomial& b : all)
        if (normal_form(b, gb, budget)) return false;
    return true;
}

// Calls visit on each k-subset of 0..n-1 in lexicographic order until it returns true.
bool any_subset(int n, int k, const std::function<bool(const std::vector<int>&)>& visit) {
    if (k > n) return false;
    std::vector<int> pick(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
    for (;;) {
        if (visit(pick)) return true;
        int i = k - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return false;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
}

}  // namespace

OrientationSurvey survey_orientations(const Graph& g, const Budget& budget) {
    const int q = g.edge_count();
    if (q > 12) throw BudgetExceeded("orientation survey is limited to 12 edges");
    const int height = q - g.vertex_count() + component_count(g);
    const auto cycles = enumerate_primitive_cycles(g, budget);
    OrientationSurvey survey;
    for (std::uint32_t mask = 0; mask < (1U << q); ++mask) {
        std::vector<Arc> arcs;
        for (int k = 0; k < q; ++k) {
            const Edge& e = g.edge(k);
            arcs.push_back(mask >> k & 1U ? Arc{e.v, e.u} : Arc{e.u, e.v});
        }
        const OrientedGraph d(g, std::move(arcs));
        const Acyclicity acyc = is_acyclic(d);
        if (!acyc.order) {
            survey.verdicts.push_back(OrientationVerdict::undecided);
            ++survey.undecided;
            continue;
        }
        std::vector<Binomial> prim;
        for (const Cycle& c : cycles) prim.push_back(cycle_binomial(d, c).binomial);
        const auto degrees = grading_degrees(d, *acyc.order);
        const MonomialOrder order(MonomialOrder::Kind::graded_revlex, static_cast<std::size_t>(q), {}, degrees);
        const bool ci = height == 0 || any_subset(static_cast<int>(prim.size()), height, [&](const std::vector<int>& pick) {
            std::vector<Binomial> subset;
            for (int i : pick) subset.push_back(prim[static_cast<std::size_t>(i)]);
            return generates(subset, prim, order, budget);
        });
        survey.verdicts.push_back(ci ? OrientationVerdict::complete_intersection : OrientationVerdict::not_complete_intersection);
        ++(ci ? survey.complete_intersection : survey.not_complete_intersection);
    }
    return survey;
}

std::string to_dot(const OrientedGraph& d, std::span<const int> tree_edges) {
    const Graph& g = d.base();
    std::vector<char> in_tree(static_cast<std::size_t>(g.edge_count()), 0);
    for (int e : tree_edges) in_tree[static_cast<std::size_t>(e)] = 1;
    std::ostringstream out;
    out << "digraph oriented {\n";
    for (int v = 0; v < g.vertex_count(); ++v) out << "  v" << v << " [label=\"" << g.label(v) << "\"];\n";
    for (int k = 0; k < g.edge_count(); ++k) {
        out << "  v" << d.arc(k).tail << " -> v" << d.arc(k).head << " [label=\"t" << k << "\"";
        if (in_tree[static_cast<std::size_t>(k)]) out << ", style=bold";
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace ringtoric
