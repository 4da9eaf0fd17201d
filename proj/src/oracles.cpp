#include "ringtoric/oracles.hpp"

#include <algorithm>
#include <array>

namespace ringtoric {

namespace {

void all_cycles_from(const Graph& g, int start, std::vector<int>& path, std::vector<char>& on_path,
                     std::vector<Cycle>& out, const Budget& budget) {
    const int end = path.back();
    for (const Neighbor& nb : g.neighbors(end)) {
        const int v = nb.vertex;
        if (v == start && path.size() >= 3 && path[1] < end) {
            if (budget.max_cycles != 0 && out.size() >= budget.max_cycles) throw BudgetExceeded("cycles");
            out.push_back(make_cycle(g, path));
            continue;
        }
        if (v <= start || on_path[v]) continue;
        on_path[v] = 1;
        path.push_back(v);
        all_cycles_from(g, start, path, on_path, out, budget);
        path.pop_back();
        on_path[v] = 0;
    }
}

bool chordless(const Graph& g, const Cycle& c) {
    const std::size_t k = c.length();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 2; j < k; ++j) {
            if (i == 0 && j == k - 1) continue;
            if (g.adjacent(c.vertices[i], c.vertices[j])) return false;
        }
    return true;
}

// Bitmask search for the six branch paths of a K4 subdivision.
class K4Search {
public:
    explicit K4Search(const Graph& g) : n_(g.vertex_count()), adj_(static_cast<std::size_t>(n_), 0) {
        for (const Edge& e : g.edges()) {
            adj_[e.u] |= 1U << e.v;
            adj_[e.v] |= 1U << e.u;
        }
    }

    bool run() {
        for (int a = 0; a < n_; ++a)
            for (int b = a + 1; b < n_; ++b)
                for (int c = b + 1; c < n_; ++c)
                    for (int d = c + 1; d < n_; ++d) {
                        branch_ = {a, b, c, d};
                        branch_mask_ = (1U << a) | (1U << b) | (1U << c) | (1U << d);
                        if (connect(0, 0)) return true;
                    }
        return false;
    }

private:
    static constexpr std::array<std::array<int, 2>, 6> pairs_{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

    // Paths for pairs[idx..] avoiding the interior vertices in `used`.
    bool connect(std::size_t idx, std::uint32_t used) {
        if (idx == pairs_.size()) return true;
        const int from = branch_[pairs_[idx][0]];
        const int to = branch_[pairs_[idx][1]];
        return extend(idx, from, to, used, 0);
    }

    bool extend(std::size_t idx, int at, int to, std::uint32_t used, std::uint32_t interior) {
        if (adj_[at] & (1U << to)) {
            if (connect(idx + 1, used | interior)) return true;
        }
        std::uint32_t options = adj_[at] & ~used & ~interior & ~branch_mask_;
        while (options != 0) {
            const int v = __builtin_ctz(options);
            options &= options - 1;
            if (extend(idx, v, to, used, interior | (1U << v))) return true;
        }
        return false;
    }

    int n_;
    std::vector<std::uint32_t> adj_;
    std::array<int, 4> branch_{};
    std::uint32_t branch_mask_ = 0;
};

std::vector<Edge> lexicographic_pairs(int n) {
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
    return pairs;
}

}  // namespace

std::vector<Cycle> oracle_all_cycles(const Graph& g, const Budget& budget) {
    std::vector<Cycle> out;
    std::vector<char> on_path(g.vertex_count(), 0);
    std::vector<int> path;
    for (int s = 0; s < g.vertex_count(); ++s) {
        path.assign(1, s);
        on_path[s] = 1;
        all_cycles_from(g, s, path, on_path, out, budget);
        on_path[s] = 0;
    }
    std::sort(out.begin(), out.end());
    return out;
}

int oracle_frank(const Graph& g, const Budget& budget) {
    int count = 0;
    for (const Cycle& c : oracle_all_cycles(g, budget))
        if (chordless(g, c)) ++count;
    return count;
}

bool oracle_k4_subdivision(const Graph& g) {
    if (g.vertex_count() > 9) throw BudgetExceeded("K4 subdivision search is limited to 9 vertices");
    return K4Search(g).run();
}

GraphIterator::GraphIterator(int n, Mode mode) : n_(n), mode_(mode), pairs_(lexicographic_pairs(n)) {}

GraphIterator GraphIterator::exhaustive(int n, bool connected_only) {
    if (n < 0 || n > 11) throw Error("precondition", "exhaustive enumeration supports 0..11 vertices");
    GraphIterator it(n, connected_only ? Mode::all_connected : Mode::all);
    it.end_ = std::uint64_t{1} << it.pairs_.size();
    return it;
}

GraphIterator GraphIterator::random(int n, std::uint64_t seed, std::size_t count, double edge_probability) {
    GraphIterator it(n, Mode::random);
    it.rng_.seed(seed);
    it.remaining_ = count;
    it.p_ = edge_probability;
    return it;
}

std::optional<Graph> GraphIterator::next() {
    if (mode_ == Mode::random) {
        if (remaining_ == 0) return std::nullopt;
        --remaining_;
        return random_graph(rng_, n_, p_);
    }
    while (mask_ < end_) {
        Graph g = graph_from_mask(n_, mask_++);
        if (mode_ == Mode::all || is_connected(g)) return g;
    }
    return std::nullopt;
}

Graph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<Edge> edges;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (mask >> bit & 1U) edges.push_back({u, v});
    return Graph::from_edges(n, std::move(edges));
}

Graph random_graph(std::mt19937_64& rng, int n, double edge_probability) {
    std::bernoulli_distribution coin(edge_probability);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.push_back({u, v});
    return Graph::from_edges(n, std::move(edges));
}

void for_each_connected_bipartite(int n, const std::function<void(const Graph&)>& visit) {
    if (n <= 0) return;
    if (n == 1) {
        visit(Graph::from_edges(1, {}));
        return;
    }
    // Vertex 0 is always on the first side; a connected bipartite graph has
    // exactly one such 2-colouring, so nothing is produced twice.
    for (std::uint32_t side = 0; side < (1U << (n - 1)); ++side) {
        const std::uint32_t first = (side << 1) | 1U;
        std::vector<Edge> cross;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (((first >> u) & 1U) != ((first >> v) & 1U)) cross.push_back({u, v});
        if (cross.empty()) continue;
        std::vector<std::uint32_t> adj(static_cast<std::size_t>(n));
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cross.size()); ++mask) {
            std::fill(adj.begin(), adj.end(), 0U);
            for (std::size_t b = 0; b < cross.size(); ++b)
                if (mask >> b & 1U) {
                    adj[cross[b].u] |= 1U << cross[b].v;
                    adj[cross[b].v] |= 1U << cross[b].u;
                }
            std::uint32_t seen = 1U, frontier = 1U;
            while (frontier != 0) {
                std::uint32_t next = 0;
                for (std::uint32_t f = frontier; f != 0; f &= f - 1) next |= adj[__builtin_ctz(f)];
                frontier = next & ~seen;
                seen |= next;
            }
            if (seen != (1U << n) - 1U) continue;
            std::vector<Edge> edges;
            for (std::size_t b = 0; b < cross.size(); ++b)
                if (mask >> b & 1U) edges.push_back(cross[b]);
            visit(Graph::from_edges(n, std::move(edges)));
        }
    }
}

Graph cycle_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return Graph::from_edges(n, std::move(edges));
}

Graph path_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Graph::from_edges(n, std::move(edges));
}

Graph complete_graph(int n) { return Graph::from_edges(n, lexicographic_pairs(n)); }

Graph complete_bipartite(int a, int b) {
    std::vector<Edge> edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) edges.push_back({u, a + v});
    return Graph::from_edges(a + b, std::move(edges));
}

Graph wheel_graph(int rim) {
    std::vector<Edge> edges;
    for (int i = 1; i <= rim; ++i) edges.push_back({0, i});
    for (int i = 1; i <= rim; ++i) edges.push_back({i, i % rim + 1});
    return Graph::from_edges(rim + 1, std::move(edges));
}

Graph fan_graph(int path_vertices) {
    std::vector<Edge> edges;
    for (int i = 1; i <= path_vertices; ++i) edges.push_back({0, i});
    for (int i = 1; i < path_vertices; ++i) edges.push_back({i, i + 1});
    return Graph::from_edges(path_vertices + 1, std::move(edges));
}

Graph polygon_with_noncrossing_chords(std::mt19937_64& rng, int n, int chords) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    std::vector<Edge> diagonals;
    std::vector<std::pair<int, int>> todo{{0, n - 1}};
    while (!todo.empty()) {
        const auto [i, j] = todo.back();
        todo.pop_back();
        if (j - i < 2) continue;
        const int k = std::uniform_int_distribution<int>(i + 1, j - 1)(rng);
        if (k - i >= 2) diagonals.push_back({i, k});
        if (j - k >= 2) diagonals.push_back({k, j});
        todo.push_back({i, k});
        todo.push_back({k, j});
    }
    std::shuffle(diagonals.begin(), diagonals.end(), rng);
    if (chords >= 0 && static_cast<std::size_t>(chords) < diagonals.size()) diagonals.resize(static_cast<std::size_t>(chords));
    edges.insert(edges.end(), diagonals.begin(), diagonals.end());
    return Graph::from_edges(n, std::move(edges));
}

}  // namespace ringtoric
