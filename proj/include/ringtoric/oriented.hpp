#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ringtoric/binomial.hpp"
#include "ringtoric/cycle.hpp"
#include "ringtoric/error.hpp"
#include "ringtoric/graph.hpp"
#include "ringtoric/integer_matrix.hpp"

namespace ringtoric {

struct Arc {
    int tail = 0;
    int head = 0;
    friend bool operator==(const Arc&, const Arc&) = default;
};

// A graph with a direction on every edge; arcs[k] orients edge k.
class OrientedGraph {
public:
    OrientedGraph() = default;
    // Throws Error("orientation") unless arcs[k] orients edge k for every k.
    OrientedGraph(Graph base, std::vector<Arc> arcs);

    // Orients every edge from the endpoint with the smaller rank to the larger.
    // `rank` is indexed by vertex and must be a bijection onto 0..n-1.
    static OrientedGraph by_rank(Graph base, std::span<const int> rank);

    const Graph& base() const noexcept { return base_; }
    const Arc& arc(int k) const { return arcs_[static_cast<std::size_t>(k)]; }
    std::span<const Arc> arcs() const noexcept { return arcs_; }

private:
    Graph base_;
    std::vector<Arc> arcs_;
};

// Orientation file: one "u v" line per arc u -> v, labels as in the graph file.
// Every edge of `base` must be oriented exactly once.
OrientedGraph parse_orientation(Graph base, std::string_view text);

// n x q matrix; column k has -1 at the tail and +1 at the head of arc k.
using IncidenceMatrix = IntMatrix;

// Also checks rank = n - r by integer elimination (throws std::logic_error otherwise).
IncidenceMatrix incidence(const OrientedGraph& d);

// t^plus - t^minus lies in the toric ideal iff A (plus - minus) = 0.
bool kernel_member(const IncidenceMatrix& a, const Binomial& b);

struct OrientedCycleBinomial {
    Cycle cycle;
    std::vector<int> plus_edges;   // arcs agreeing with the canonical traversal
    std::vector<int> minus_edges;  // the rest
    Binomial binomial;             // t^{plus_edges} - t^{minus_edges}; an empty side is the monomial 1
};

// The cycle is traversed in canonical order (from its smallest vertex toward
// the smaller of that vertex's two cycle neighbours). Throws Error("cycle").
OrientedCycleBinomial cycle_binomial(const OrientedGraph& d, std::span<const int> cycle_vertices);
OrientedCycleBinomial cycle_binomial(const OrientedGraph& d, const Cycle& cycle);

// Binomials of all cycles; a universal Gröbner basis of the toric ideal.
// Exponential in general; budget.max_cycles caps the enumeration.
std::vector<OrientedCycleBinomial> universal_groebner_basis(const OrientedGraph& d, const Budget& budget = {});

// Binomials of the primitive cycles, which generate the toric ideal.
std::vector<OrientedCycleBinomial> toric_generators_oriented(const OrientedGraph& d, const Budget& budget = {});

struct ChordSplit {
    OrientedCycleBinomial first;   // cycle through the chord and the part of c containing its smallest vertex
    OrientedCycleBinomial second;  // cycle through the chord and the other part
    int chord = -1;
    // Signs chosen so the chord's variable sits in `plus` of both pieces.
    Binomial first_signed;
    Binomial second_signed;
    Exponents first_cofactor;   // t^{beta+} / t_chord, multiplies the first piece
    Exponents second_cofactor;  // t^{alpha+} / t_chord, multiplies the second piece
    bool identity_holds = false;
};

// Splits a cycle along a chord and checks
//   t_c = (t^{beta+}/t_k) t_{c1} - (t^{alpha+}/t_k) t_{c2}   (up to global sign)
// by exponent arithmetic. Throws Error("chord") if `chord` is not a chord of c.
ChordSplit split_on_chord(const OrientedGraph& d, std::span<const int> cycle_vertices, int chord);

struct Acyclicity {
    std::optional<std::vector<int>> order;  // topological ordering (vertices), smallest index first among ties
    std::optional<Cycle> witness;           // an oriented cycle when no ordering exists
};
Acyclicity is_acyclic(const OrientedGraph& d);

// deg(t_k) = position(head) - position(tail) for a topological ordering given
// as a vertex sequence. Throws Error("order") if it is not topological.
std::vector<std::uint64_t> grading_degrees(const OrientedGraph& d, std::span<const int> order);

bool is_homogeneous(const Binomial& b, std::span<const std::uint64_t> degrees);

}  // namespace ringtoric
