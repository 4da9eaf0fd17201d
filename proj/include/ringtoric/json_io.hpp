#pragma once

#include <json.hpp>

#include "ringtoric/binomial.hpp"
#include "ringtoric/error.hpp"
#include "ringtoric/graph.hpp"
#include "ringtoric/orientation_builder.hpp"
#include "ringtoric/oriented.hpp"
#include "ringtoric/ring.hpp"

namespace ringtoric {

using Json = nlohmann::json;

// {"vertices": [labels], "edges": [[u, v], ...]} with 0-based vertex indices.
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

// {"plus": [...], "minus": [...]}: edge indices repeated by multiplicity.
Json binomial_to_json(const Binomial& b);
Binomial binomial_from_json(const Json& j, std::size_t variable_count);

Json cycle_to_json(const Cycle& c);

Json certificate_to_json(const RingCertificate& cert);
RingCertificate certificate_from_json(const Graph& g, const Json& j);

// [[tail, head], ...] indexed by edge.
Json arcs_to_json(const OrientedGraph& d);

Json tree_sequence_to_json(const TreeSequence& seq);
TreeSequence tree_sequence_from_json(const Json& j);

// {"error": kind, "message": ..., "line": ...} (line omitted when unknown).
Json error_to_json(const Error& e);

}  // namespace ringtoric
