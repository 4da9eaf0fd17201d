#include "ringtoric/cycle_space.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "ringtoric/error.hpp"

namespace ringtoric {

std::vector<int> canonical_rotation(std::span<const int> vertices) {
    const std::size_t k = vertices.size();
    const auto start = static_cast<std::size_t>(std::min_element(vertices.begin(), vertices.end()) - vertices.begin());
    const int next = vertices[(start + 1) % k];
    const int prev = vertices[(start + k - 1) % k];
    std::vector<int> out(k);
    for (std::size_t i = 0; i < k; ++i)
        out[i] = next < prev ? vertices[(start + i) % k] : vertices[(start + k - i) % k];
    return out;
}

Cycle make_cycle(const Graph& g, std::span<const int> vertices) {
    const std::size_t k = vertices.size();
    if (k < 3) throw Error("cycle", "a cycle needs at least three vertices");
    std::vector<int> sorted(vertices.begin(), vertices.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw Error("cycle", "repeated vertex in cycle");
    for (int v : sorted)
        if (v < 0 || v >= g.vertex_count()) throw Error("cycle", "unknown vertex in cycle");

    Cycle c;
    c.vertices = canonical_rotation(vertices);
    c.edges.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
        const int e = g.edge_index(c.vertices[i], c.vertices[(i + 1) % k]);
        if (e < 0) throw Error("cycle", "consecutive cycle vertices are not adjacent");
        c.edges[i] = e;
    }
    return c;
}

ChainVector chain_of_edges(const Graph& g, std::span<const int> edges) {
    ChainVector out(static_cast<std::size_t>(g.edge_count()));
    for (int e : edges) out.flip(static_cast<std::size_t>(e));
    return out;
}

ChainVector chain_of(const Graph& g, const Cycle& c) { return chain_of_edges(g, c.edges); }

std::vector<int> forest_path(const Graph& g, std::span<const int> forest_edges, int from, int to) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<std::vector<Neighbor>> adj(n);
    for (int e : forest_edges) {
        const Edge& ed = g.edge(e);
        adj[static_cast<std::size_t>(ed.u)].push_back({ed.v, e});
        adj[static_cast<std::size_t>(ed.v)].push_back({ed.u, e});
    }
    std::vector<int> parent(n, -2);
    parent[static_cast<std::size_t>(from)] = -1;
    std::vector<int> queue{from};
    for (std::size_t head = 0; head < queue.size() && parent[static_cast<std::size_t>(to)] == -2; ++head) {
        for (const Neighbor& nb : adj[static_cast<std::size_t>(queue[head])]) {
            if (parent[static_cast<std::size_t>(nb.vertex)] != -2) continue;
            parent[static_cast<std::size_t>(nb.vertex)] = queue[head];
            queue.push_back(nb.vertex);
        }
    }
    if (parent[static_cast<std::size_t>(to)] == -2) return {};
    std::vector<int> path;
    for (int v = to; v != -1; v = parent[static_cast<std::size_t>(v)]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

Gf2Vector boundary(const Graph& g, const ChainVector& chain) {
    if (chain.size() != static_cast<std::size_t>(g.edge_count()))
        throw Error("length", "chain length does not match edge count");
    Gf2Vector out(static_cast<std::size_t>(g.vertex_count()));
    for (int e : chain.support()) {
        out.flip(static_cast<std::size_t>(g.edge(e).u));
        out.flip(static_cast<std::size_t>(g.edge(e).v));
    }
    return out;
}

int gf2_rank(std::span<const Gf2Vector> vectors) {
    if (vectors.empty()) return 0;
    const std::size_t len = vectors.front().size();
    for (const auto& v : vectors)
        if (v.size() != len) throw Error("length", "gf2_rank: vectors of different lengths");

    // Echelon rows keyed by pivot coordinate.
    std::vector<Gf2Vector> pivot_row(len);
    std::vector<bool> has_pivot(len, false);
    int rank = 0;
    for (Gf2Vector v : vectors) {
        while (true) {
            const std::size_t p = v.first();
            if (p == len) break;
            if (!has_pivot[p]) {
                has_pivot[p] = true;
                pivot_row[p] = std::move(v);
                ++rank;
                break;
            }
            v ^= pivot_row[p];
        }
    }
    return rank;
}

int cycle_space_dimension(const Graph& g) {
    std::vector<Gf2Vector> columns;
    columns.reserve(static_cast<std::size_t>(g.edge_count()));
    for (int e = 0; e < g.edge_count(); ++e) {
        ChainVector unit(static_cast<std::size_t>(g.edge_count()));
        unit.set(static_cast<std::size_t>(e));
        columns.push_back(boundary(g, unit));
    }
    return g.edge_count() - gf2_rank(columns);
}

int cycle_rank(const Graph& g) {
    const int rank = g.edge_count() - g.vertex_count() + component_count(g);
    assert(rank == cycle_space_dimension(g));
    return rank;
}

CycleBasis fundamental_basis(const Graph& g, std::span<const int> forest) {
    const int q = g.edge_count();
    std::vector<bool> in_tree(static_cast<std::size_t>(q), false);
    for (int e : forest) {
        if (e < 0 || e >= q) throw Error("forest", "forest edge index out of range");
        if (in_tree[static_cast<std::size_t>(e)]) throw Error("forest", "repeated forest edge");
        in_tree[static_cast<std::size_t>(e)] = true;
    }
    // Acyclic with n - r edges <=> spanning forest.
    std::vector<int> dsu(static_cast<std::size_t>(g.vertex_count()));
    std::iota(dsu.begin(), dsu.end(), 0);
    auto find = [&](int x) {
        auto at = [&](int i) -> int& { return dsu[static_cast<std::size_t>(i)]; };
        while (at(x) != x) {
            at(x) = at(at(x));
            x = at(x);
        }
        return x;
    };
    for (int e : forest) {
        const int a = find(g.edge(e).u), b = find(g.edge(e).v);
        if (a == b) throw Error("forest", "edge set contains a cycle");
        dsu[static_cast<std::size_t>(a)] = b;
    }
    if (static_cast<int>(forest.size()) != g.vertex_count() - component_count(g))
        throw Error("forest", "edge set does not span every component");

    CycleBasis basis;
    for (int e = 0; e < q; ++e) {
        if (in_tree[static_cast<std::size_t>(e)]) continue;
        const std::vector<int> path = forest_path(g, forest, g.edge(e).u, g.edge(e).v);
        Cycle c = make_cycle(g, path);
        basis.vectors.push_back(chain_of(g, c));
        basis.witness_cycles.push_back(std::move(c));
    }
    return basis;
}

}  // namespace ringtoric
