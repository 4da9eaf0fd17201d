#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "ringtoric/cycle.hpp"
#include "ringtoric/error.hpp"
#include "ringtoric/graph.hpp"

namespace ringtoric {

// Reference implementations. They favour obviousness over speed and must not
// share code paths with the algorithms they check.

// Every cycle, by DFS from each cycle's smallest vertex, canonical dedup.
std::vector<Cycle> oracle_all_cycles(const Graph& g, const Budget& budget = {});

// Cycles of oracle_all_cycles() with no chord.
int oracle_frank(const Graph& g, const Budget& budget = {});

// Exhaustive search for four branch vertices joined by six internally
// disjoint paths. Throws BudgetExceeded for graphs with more than 9 vertices.
bool oracle_k4_subdivision(const Graph& g);

// Labelled simple graphs on n vertices. Exhaustive modes walk every edge
// subset of K_n once (no isomorphism reduction), edges listed in
// lexicographic pair order. Random mode draws `count` G(n, p) graphs.
class GraphIterator {
public:
    enum class Mode { all, all_connected, random };

    static GraphIterator exhaustive(int n, bool connected_only);
    static GraphIterator random(int n, std::uint64_t seed, std::size_t count, double edge_probability);

    std::optional<Graph> next();

    int vertex_count() const noexcept { return n_; }
    Mode mode() const noexcept { return mode_; }

private:
    GraphIterator(int n, Mode mode);

    int n_;
    Mode mode_;
    std::vector<Edge> pairs_;
    std::uint64_t mask_ = 0;
    std::uint64_t end_ = 0;
    std::mt19937_64 rng_;
    std::size_t remaining_ = 0;
    double p_ = 0.5;
};

// Graph on n vertices whose edges are the pairs selected by `mask` over the
// lexicographic pair list of K_n.
Graph graph_from_mask(int n, std::uint64_t mask);

// G(n, p) with a caller-owned generator.
Graph random_graph(std::mt19937_64& rng, int n, double edge_probability);

// Every labelled connected bipartite graph on n vertices exactly once.
void for_each_connected_bipartite(int n, const std::function<void(const Graph&)>& visit);

// Standard families.
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph wheel_graph(int rim);           // hub 0, rim 1..rim
Graph fan_graph(int path_vertices);   // hub 0 joined to every vertex of a path 1..k
// Polygon 0..n-1 plus chords from a random non-crossing triangulation
// (`chords` of them kept, all of them when negative).
Graph polygon_with_noncrossing_chords(std::mt19937_64& rng, int n, int chords);

}  // namespace ringtoric
