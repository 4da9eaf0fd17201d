#pragma once

#include <span>
#include <vector>

#include "ringtoric/cycle.hpp"
#include "ringtoric/gf2_vector.hpp"
#include "ringtoric/graph.hpp"

namespace ringtoric {

// Image of a 1-chain under the boundary map C_1 -> C_0, {x,y} |-> x + y.
// The result is indexed by vertex. Throws Error("length") on a size mismatch.
Gf2Vector boundary(const Graph& g, const ChainVector& chain);

// q - n + r.
int cycle_rank(const Graph& g);

// dim ker(boundary), by elimination over GF(2); equals cycle_rank().
int cycle_space_dimension(const Graph& g);

struct CycleBasis {
    std::vector<ChainVector> vectors;
    std::vector<Cycle> witness_cycles;  // witness_cycles[i] realizes vectors[i]
};

// One fundamental cycle per non-tree edge. `forest` must be a spanning forest
// of g given as edge indices; otherwise throws Error("forest").
CycleBasis fundamental_basis(const Graph& g, std::span<const int> forest);

// Rank over GF(2) by word-level Gaussian elimination. All vectors must share a length.
int gf2_rank(std::span<const Gf2Vector> vectors);

}  // namespace ringtoric
