#pragma once

#include <span>
#include <vector>

#include "ringtoric/gf2_vector.hpp"
#include "ringtoric/graph.hpp"

namespace ringtoric {

// A cycle of a graph in canonical form: vertices[0] is the smallest vertex and
// vertices[1] < vertices.back(). edges[i] joins vertices[i] and vertices[i+1]
// (cyclically).
struct Cycle {
    std::vector<int> vertices;
    std::vector<int> edges;

    std::size_t length() const noexcept { return vertices.size(); }
    friend bool operator==(const Cycle&, const Cycle&) = default;
    friend auto operator<=>(const Cycle& a, const Cycle& b) { return a.vertices <=> b.vertices; }
};

// Validates a closed vertex sequence (no repeated first vertex at the end) and
// returns it canonicalized. Throws Error("cycle") if it is not a cycle of g.
Cycle make_cycle(const Graph& g, std::span<const int> vertices);

// Rotation/reflection to canonical form; the input must already be a valid cycle.
std::vector<int> canonical_rotation(std::span<const int> vertices);

ChainVector chain_of(const Graph& g, const Cycle& c);
ChainVector chain_of_edges(const Graph& g, std::span<const int> edges);

// Vertex sequence of the unique path between two vertices of a forest given by
// its edge indices. Empty when no such path exists.
std::vector<int> forest_path(const Graph& g, std::span<const int> forest_edges, int from, int to);

}  // namespace ringtoric
