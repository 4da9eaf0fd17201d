#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ringtoric {

// Unordered pair {u, v}, stored in input order.
struct Edge {
    int u = 0;
    int v = 0;

    int other(int w) const noexcept { return w == u ? v : u; }
    friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
    int vertex;
    int edge;
};

/*
 * Undirected simple graph on dense vertex indices 0..n-1.
 *
 * Edge k carries the toric variable t_{k+1}; the edge order given at
 * construction is kept forever, so every binomial produced downstream is
 * indexed against it. Labels only matter at I/O boundaries. Instances are
 * immutable once built.
 */
class Graph {
public:
    Graph() = default;

    // Throws Error("loop") / Error("multi-edge") / Error("vertex") on invalid input.
    // An empty label list means vertices are labelled by their decimal index.
    static Graph from_edges(int n, std::vector<Edge> edges, std::vector<std::string> labels = {});

    int vertex_count() const noexcept { return n_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

    const Edge& edge(int k) const { return edges_[static_cast<std::size_t>(k)]; }
    std::span<const Edge> edges() const noexcept { return edges_; }

    // Sorted by neighbour index.
    std::span<const Neighbor> neighbors(int v) const noexcept {
        return {adjacency_.data() + offsets_[static_cast<std::size_t>(v)],
                adjacency_.data() + offsets_[static_cast<std::size_t>(v) + 1]};
    }
    int degree(int v) const noexcept {
        return offsets_[static_cast<std::size_t>(v) + 1] - offsets_[static_cast<std::size_t>(v)];
    }

    // -1 when u and v are not adjacent.
    int edge_index(int u, int v) const noexcept {
        return edge_lookup_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)];
    }
    bool adjacent(int u, int v) const noexcept { return edge_index(u, v) >= 0; }

    std::string label(int v) const;
    bool has_labels() const noexcept { return !labels_.empty(); }
    std::optional<int> find_vertex(std::string_view label) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_ && a.labels_ == b.labels_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::string> labels_;
    std::vector<int> offsets_{0};
    std::vector<Neighbor> adjacency_;
    std::vector<int> edge_lookup_;
};

// Edge-list text: one "u v" pair of labels per line; blank lines and '#'
// comments are skipped. Vertices are numbered in order of first appearance.
Graph parse_graph(std::string_view text);

// Components as sorted vertex lists, ordered by smallest vertex.
std::vector<std::vector<int>> components(const Graph& g);
int component_count(const Graph& g);
bool is_connected(const Graph& g);

struct Block {
    std::vector<int> edges;     // sorted edge indices; empty for an isolated vertex
    std::vector<int> vertices;  // sorted
};

struct BlockDecomposition {
    std::vector<Block> blocks;
    std::vector<int> cutvertices;  // sorted
    std::vector<int> bridges;      // sorted edge indices
};

// Biconnected decomposition; isolated vertices appear as vertex-only blocks.
BlockDecomposition blocks(const Graph& g);

// One spanning tree per component (BFS from the smallest vertex, smallest
// neighbour first). Returns sorted edge indices, n - r of them.
std::vector<int> spanning_forest(const Graph& g);

struct Bipartition {
    std::vector<int> first;   // contains the smallest vertex of each component
    std::vector<int> second;
};
std::optional<Bipartition> bipartition(const Graph& g);

// Subgraph induced on `vertices`, re-indexed in increasing order of the old
// indices; edges keep their relative order. Labels carry over.
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);

}  // namespace ringtoric
