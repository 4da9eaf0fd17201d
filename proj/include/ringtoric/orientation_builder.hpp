#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ringtoric/binomial.hpp"
#include "ringtoric/graph.hpp"
#include "ringtoric/oriented.hpp"

namespace ringtoric {

// Every vertex adjacent to some vertex of `s` (may intersect `s`). Throws
// Error("vertex") for out-of-range members.
std::vector<int> neighbor_set(const Graph& g, std::span<const int> s);

struct TreeStage {
    std::vector<int> tree_edges;   // edge indices of the current tree, sorted
    std::vector<int> labeling;     // labeling[i] is the vertex carrying label i
    int closed_prefix = 0;         // largest u with N(labeling[0..u)) inside the tree
    int attach_vertex = -1;        // labeling[closed_prefix], -1 at the last stage
    std::vector<int> attached_path;  // grown path, ends at attach_vertex; empty at the last stage
    friend bool operator==(const TreeStage&, const TreeStage&) = default;
};

struct TreeSequence {
    std::vector<TreeStage> stages;
    std::vector<int> final_tree;
    std::vector<int> final_labeling;
    friend bool operator==(const TreeSequence&, const TreeSequence&) = default;
};

// Grows a maximal path from the smallest vertex, then repeatedly hangs a
// maximal path off the first label whose neighbourhood leaves the tree.
// Throws Error("disconnected") unless g is connected and nonempty.
TreeSequence build_tree_sequence(const Graph& g);

// Orients every edge from the smaller to the larger position in `labeling`
// (labeling[i] = vertex at position i). Throws Error("labeling").
OrientedGraph orient_by_labeling(const Graph& g, std::span<const int> labeling);

struct FundamentalGenerator {
    int non_tree_edge = -1;
    Cycle cycle;
    Binomial binomial;           // the side holding the non-tree edge is `plus`
    bool singleton_side = false; // plus is exactly t_f
};

// One binomial per edge outside the spanning forest `tree_edges`.
std::vector<FundamentalGenerator> fundamental_generators(const OrientedGraph& d, std::span<const int> tree_edges);

struct OrientationCertificate {
    OrientedGraph oriented;
    std::vector<int> labeling;               // topological order of `oriented`
    std::vector<TreeSequence> sequences;     // one per component, global vertex indices
    std::vector<int> tree_edges;
    std::vector<FundamentalGenerator> generators;
    std::vector<OrientedCycleBinomial> primitive_generators;  // filled when requested
    bool disconnected = false;
};

// Tree sequence per component, induced orientation and fundamental-cycle
// generators. Throws std::logic_error if a generator lacks the single-variable
// side. Throws Error("empty") on a graph with no vertices.
OrientationCertificate ci_generators(const Graph& g, bool with_primitive = true);

// Edges of the directed Hamiltonian path of an acyclic orientation, if its
// topological order is one.
std::optional<std::vector<int>> spanning_oriented_path(const OrientedGraph& d);

// Lex order ranking the non-tree variables above the tree variables (each group
// by increasing index). Fundamental generators with a singleton side then lead
// with their non-tree variable.
MonomialOrder non_tree_first_lex(const Graph& g, std::span<const int> tree_edges);

enum class OrientationVerdict { complete_intersection, not_complete_intersection, undecided };

struct OrientationSurvey {
    // verdicts[mask]: bit k set reverses edge k against its stored direction.
    std::vector<OrientationVerdict> verdicts;
    int complete_intersection = 0;
    int not_complete_intersection = 0;
    int undecided = 0;
};

// Experiment hook over all 2^q orientations of a tiny graph. An acyclic
// orientation is a complete intersection iff some height-sized subset of its
// primitive-cycle binomials generates the ideal; cyclic ones are left
// undecided. Throws BudgetExceeded above 12 edges.
OrientationSurvey survey_orientations(const Graph& g, const Budget& budget = {});

// Graphviz digraph; tree edges drawn bold.
std::string to_dot(const OrientedGraph& d, std::span<const int> tree_edges = {});

}  // namespace ringtoric
