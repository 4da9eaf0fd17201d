#pragma once

#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ringtoric/cycle.hpp"
#include "ringtoric/error.hpp"
#include "ringtoric/graph.hpp"

namespace ringtoric {

// A primitive cycle is a chordless one; the Cycle type carries it.
using PrimitiveCycle = Cycle;

// Calls `visit` once per chordless cycle with its canonical vertex sequence.
// Enumeration stops early when `visit` returns false.
//
// Paths u0 u1 ... uk are grown from each start u0 through larger vertices
// only; a vertex may join the path only if it is not adjacent to any interior
// vertex u1..u(k-1). Reaching a neighbour of u0 closes the cycle. Each cycle
// is produced twice by this walk and kept only in the orientation with
// u1 < last vertex.
void for_each_chordless_cycle(const Graph& g, const std::function<bool(std::span<const int>)>& visit);

// All primitive cycles, sorted by vertex sequence. Throws BudgetExceeded when
// more than budget.max_cycles would be produced.
std::vector<PrimitiveCycle> enumerate_primitive_cycles(const Graph& g, const Budget& budget = {});

// Number of primitive cycles.
int frank(const Graph& g, const Budget& budget = {});

struct PcpResult {
    bool holds = true;
    // First violating pair (in enumeration order) when the property fails.
    std::optional<std::pair<PrimitiveCycle, PrimitiveCycle>> witness;
};

// Primitive cycle property: any two primitive cycles share at most one edge.
PcpResult pcp(const Graph& g, const Budget& budget = {});

// True iff no block of g contains a subdivision of K4, decided per block by
// series-parallel reduction.
bool k4_subdivision_free(const Graph& g);

// Series-parallel reduction of one 2-connected block given by its edge list:
// suppress degree-2 vertices, merge parallel edges, succeed on a single edge.
bool block_reduces_to_edge(const Graph& g, std::span<const int> block_edges);

}  // namespace ringtoric
