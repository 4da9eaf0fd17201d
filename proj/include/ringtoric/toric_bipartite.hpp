#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ringtoric/binomial.hpp"
#include "ringtoric/graph.hpp"
#include "ringtoric/integer_matrix.hpp"
#include "ringtoric/primitive_cycles.hpp"

namespace ringtoric {

// t_c = t_{e1} t_{e3} ... - t_{e2} t_{e4} ... along the cycle's edge order.
// Throws Error("odd cycle") for odd cycles.
Binomial even_cycle_binomial(const Graph& g, const Cycle& c);

// One binomial per primitive cycle, in enumeration order. Throws
// Error("not bipartite").
std::vector<Binomial> toric_generators_bipartite(const Graph& g, const Budget& budget = {});

// 0/1 vertex-edge incidence matrix (the monomial map t_k -> x_u x_v).
IntMatrix unoriented_incidence(const Graph& g);

struct Height {
    int value = 0;
    // True when the input was disconnected and per-component heights were added.
    bool summed_over_components = false;
};

// q - n + 1 for connected bipartite, q - n otherwise; also checked against
// q - rank(unoriented incidence) (std::logic_error on disagreement).
Height height_toric(const Graph& g);

// Ring-graph verdict; throws Error("not bipartite").
bool is_complete_intersection_bipartite(const Graph& g);

struct Foliation {
    std::vector<Binomial> members;
    std::vector<int> variable_order;  // largest first, for lex
};

// For a 2-connected bipartite ring graph: the primitive-cycle binomials in
// certificate order (base cycle, then the cycle closed by each attachment),
// with a variable order that makes their lex leading terms pairwise coprime.
// nullopt when g is not a ring graph; Error("precondition") unless g is
// 2-connected, bipartite and has at least four vertices.
std::optional<Foliation> build_foliation(const Graph& g);

struct FoliationCheck {
    bool valid = true;
    // "a": non-square-free side, "b": overlapping sides, "c": overlap chain,
    // "coprime": lex leading terms not pairwise coprime; empty when valid.
    std::string violated;
    int member = -1;  // offending member index
};
FoliationCheck validate_foliation(const Foliation& f);

}  // namespace ringtoric
