#include "ringtoric/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <unordered_map>

#include "ringtoric/error.hpp"

namespace ringtoric {

Graph Graph::from_edges(int n, std::vector<Edge> edges, std::vector<std::string> labels) {
    if (n < 0) throw Error("vertex", "negative vertex count");
    if (!labels.empty() && static_cast<int>(labels.size()) != n)
        throw Error("vertex", "label count does not match vertex count");

    Graph g;
    g.n_ = n;
    const auto un = static_cast<std::size_t>(n);
    g.edge_lookup_.assign(un * un, -1);
    std::vector<int> degree(un, 0);
    for (std::size_t k = 0; k < edges.size(); ++k) {
        const Edge& e = edges[k];
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
            throw Error("vertex", "edge endpoint out of range");
        if (e.u == e.v) throw Error("loop", "loop at vertex " + std::to_string(e.u));
        int& slot = g.edge_lookup_[static_cast<std::size_t>(e.u) * un + static_cast<std::size_t>(e.v)];
        if (slot >= 0)
            throw Error("multi-edge", "repeated edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
        slot = static_cast<int>(k);
        g.edge_lookup_[static_cast<std::size_t>(e.v) * un + static_cast<std::size_t>(e.u)] = static_cast<int>(k);
        ++degree[static_cast<std::size_t>(e.u)];
        ++degree[static_cast<std::size_t>(e.v)];
    }

    g.offsets_.assign(un + 1, 0);
    for (std::size_t v = 0; v < un; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
    g.adjacency_.resize(static_cast<std::size_t>(g.offsets_[un]));
    // Filling by scanning the lookup rows yields neighbour lists already sorted.
    for (std::size_t u = 0; u < un; ++u) {
        auto out = static_cast<std::size_t>(g.offsets_[u]);
        for (std::size_t v = 0; v < un; ++v) {
            const int k = g.edge_lookup_[u * un + v];
            if (k >= 0) g.adjacency_[out++] = Neighbor{static_cast<int>(v), k};
        }
    }
    g.edges_ = std::move(edges);
    g.labels_ = std::move(labels);
    return g;
}

std::string Graph::label(int v) const {
    if (labels_.empty()) return std::to_string(v);
    return labels_[static_cast<std::size_t>(v)];
}

std::optional<int> Graph::find_vertex(std::string_view label) const {
    if (labels_.empty()) {
        int v = 0;
        auto [ptr, ec] = std::from_chars(label.data(), label.data() + label.size(), v);
        if (ec != std::errc{} || ptr != label.data() + label.size() || v < 0 || v >= n_) return std::nullopt;
        return v;
    }
    for (std::size_t v = 0; v < labels_.size(); ++v)
        if (labels_[v] == label) return static_cast<int>(v);
    return std::nullopt;
}

Graph parse_graph(std::string_view text) {
    std::unordered_map<std::string, int> index;
    std::vector<std::string> labels;
    std::vector<Edge> edges;
    std::unordered_map<long long, int> seen;

    auto vertex_of = [&](const std::string& label) {
        auto [it, inserted] = index.emplace(label, static_cast<int>(labels.size()));
        if (inserted) labels.push_back(label);
        return it->second;
    };

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        std::vector<std::string> tokens;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
            std::size_t j = i;
            while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
            if (j > i) tokens.emplace_back(line.substr(i, j - i));
            i = j;
        }
        if (tokens.empty()) continue;
        if (tokens.size() != 2)
            throw Error("parse", "line " + std::to_string(line_no) + ": expected two vertex labels", line_no);
        if (tokens[0] == tokens[1])
            throw Error("loop", "line " + std::to_string(line_no) + ": loop at " + tokens[0], line_no);
        const int u = vertex_of(tokens[0]);
        const int v = vertex_of(tokens[1]);
        const long long key = static_cast<long long>(std::min(u, v)) << 32 | static_cast<unsigned>(std::max(u, v));
        if (!seen.emplace(key, line_no).second)
            throw Error("multi-edge",
                        "line " + std::to_string(line_no) + ": repeated edge " + tokens[0] + " " + tokens[1], line_no);
        edges.push_back({u, v});
    }
    const int n = static_cast<int>(labels.size());
    return Graph::from_edges(n, std::move(edges), std::move(labels));
}

std::vector<std::vector<int>> components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> out;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (comp[static_cast<std::size_t>(s)] >= 0) continue;
        const int id = static_cast<int>(out.size());
        out.emplace_back();
        comp[static_cast<std::size_t>(s)] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            out.back().push_back(v);
            for (const Neighbor& nb : g.neighbors(v)) {
                if (comp[static_cast<std::size_t>(nb.vertex)] < 0) {
                    comp[static_cast<std::size_t>(nb.vertex)] = id;
                    stack.push_back(nb.vertex);
                }
            }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

int component_count(const Graph& g) { return static_cast<int>(components(g).size()); }

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

BlockDecomposition blocks(const Graph& g) {
    const int n = g.vertex_count();
    const auto un = static_cast<std::size_t>(n);
    std::vector<int> disc(un, -1), low(un, 0);
    std::vector<int> edge_stack;
    std::vector<bool> is_cut(un, false);
    BlockDecomposition out;

    struct Frame {
        int vertex;
        int parent_edge;
        std::size_t next;
        int children;
    };
    std::vector<Frame> frames;
    int timer = 0;

    auto emit_block = [&](int until_edge) {
        Block b;
        while (true) {
            const int e = edge_stack.back();
            edge_stack.pop_back();
            b.edges.push_back(e);
            if (e == until_edge) break;
        }
        std::sort(b.edges.begin(), b.edges.end());
        for (int e : b.edges) {
            b.vertices.push_back(g.edge(e).u);
            b.vertices.push_back(g.edge(e).v);
        }
        std::sort(b.vertices.begin(), b.vertices.end());
        b.vertices.erase(std::unique(b.vertices.begin(), b.vertices.end()), b.vertices.end());
        if (b.edges.size() == 1) out.bridges.push_back(b.edges.front());
        out.blocks.push_back(std::move(b));
    };

    for (int root = 0; root < n; ++root) {
        if (disc[static_cast<std::size_t>(root)] >= 0) continue;
        if (g.degree(root) == 0) {
            disc[static_cast<std::size_t>(root)] = timer++;
            out.blocks.push_back(Block{{}, {root}});
            continue;
        }
        disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
        frames.push_back({root, -1, 0, 0});
        while (!frames.empty()) {
            Frame& f = frames.back();
            const auto nbrs = g.neighbors(f.vertex);
            if (f.next < nbrs.size()) {
                const Neighbor nb = nbrs[f.next++];
                if (nb.edge == f.parent_edge) continue;
                const auto w = static_cast<std::size_t>(nb.vertex);
                if (disc[w] < 0) {
                    edge_stack.push_back(nb.edge);
                    disc[w] = low[w] = timer++;
                    ++f.children;
                    frames.push_back({nb.vertex, nb.edge, 0, 0});
                } else if (disc[w] < disc[static_cast<std::size_t>(f.vertex)]) {
                    edge_stack.push_back(nb.edge);
                    low[static_cast<std::size_t>(f.vertex)] = std::min(low[static_cast<std::size_t>(f.vertex)], disc[w]);
                }
                continue;
            }
            const Frame done = f;
            frames.pop_back();
            if (frames.empty()) {
                if (done.children >= 2) is_cut[static_cast<std::size_t>(done.vertex)] = true;
                break;
            }
            Frame& parent = frames.back();
            const auto p = static_cast<std::size_t>(parent.vertex);
            const auto c = static_cast<std::size_t>(done.vertex);
            low[p] = std::min(low[p], low[c]);
            if (low[c] >= disc[p]) {
                if (parent.parent_edge >= 0) is_cut[p] = true;
                emit_block(done.parent_edge);
            }
        }
    }
    for (int v = 0; v < n; ++v)
        if (is_cut[static_cast<std::size_t>(v)]) out.cutvertices.push_back(v);
    std::sort(out.bridges.begin(), out.bridges.end());
    return out;
}

std::vector<int> spanning_forest(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<int> tree;
    std::vector<int> queue;
    for (int s = 0; s < n; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        seen[static_cast<std::size_t>(s)] = true;
        queue.assign(1, s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            for (const Neighbor& nb : g.neighbors(queue[head])) {
                if (seen[static_cast<std::size_t>(nb.vertex)]) continue;
                seen[static_cast<std::size_t>(nb.vertex)] = true;
                tree.push_back(nb.edge);
                queue.push_back(nb.vertex);
            }
        }
    }
    std::sort(tree.begin(), tree.end());
    return tree;
}

std::optional<Bipartition> bipartition(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    std::vector<int> queue;
    for (int s = 0; s < n; ++s) {
        if (color[static_cast<std::size_t>(s)] >= 0) continue;
        color[static_cast<std::size_t>(s)] = 0;
        queue.assign(1, s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int v = queue[head];
            for (const Neighbor& nb : g.neighbors(v)) {
                int& c = color[static_cast<std::size_t>(nb.vertex)];
                if (c < 0) {
                    c = 1 - color[static_cast<std::size_t>(v)];
                    queue.push_back(nb.vertex);
                } else if (c == color[static_cast<std::size_t>(v)]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition out;
    for (int v = 0; v < n; ++v) (color[static_cast<std::size_t>(v)] == 0 ? out.first : out.second).push_back(v);
    return out;
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
    const int n = g.vertex_count();
    std::vector<int> remap(static_cast<std::size_t>(n), -1);
    for (int v : vertices) {
        if (v < 0 || v >= n) throw Error("vertex", "unknown vertex " + std::to_string(v));
        remap[static_cast<std::size_t>(v)] = 0;
    }
    std::vector<std::string> labels;
    int next = 0;
    for (int v = 0; v < n; ++v) {
        if (remap[static_cast<std::size_t>(v)] < 0) continue;
        remap[static_cast<std::size_t>(v)] = next++;
        if (g.has_labels()) labels.push_back(g.label(v));
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        const int a = remap[static_cast<std::size_t>(e.u)];
        const int b = remap[static_cast<std::size_t>(e.v)];
        if (a >= 0 && b >= 0) edges.push_back({a, b});
    }
    return Graph::from_edges(next, std::move(edges), std::move(labels));
}

}  // namespace ringtoric
