#include "ringtoric/json_io.hpp"

namespace ringtoric {

namespace {

std::vector<int> indices_of(const Exponents& a) {
    std::vector<int> out;
    for (std::size_t k = 0; k < a.size(); ++k)
        for (std::uint32_t m = 0; m < a[k]; ++m) out.push_back(static_cast<int>(k));
    return out;
}

Exponents exponents_of(const Json& list, std::size_t q) {
    Exponents a(q, 0);
    for (const Json& k : list) {
        const auto idx = k.get<long long>();
        if (idx < 0 || static_cast<std::size_t>(idx) >= q) throw Error("json", "variable index out of range");
        ++a[static_cast<std::size_t>(idx)];
    }
    return a;
}

}  // namespace

Json graph_to_json(const Graph& g) {
    Json vertices = Json::array();
    for (int v = 0; v < g.vertex_count(); ++v) vertices.push_back(g.label(v));
    Json edges = Json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
    return {{"vertices", vertices}, {"edges", edges}};
}

Graph graph_from_json(const Json& j) {
    try {
        const auto labels = j.at("vertices").get<std::vector<std::string>>();
        std::vector<Edge> edges;
        for (const Json& e : j.at("edges")) edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
        const int n = static_cast<int>(labels.size());
        // Decimal self-labels are the default and are not stored.
        bool default_labels = true;
        for (int v = 0; v < n; ++v) default_labels = default_labels && labels[static_cast<std::size_t>(v)] == std::to_string(v);
        return Graph::from_edges(n, std::move(edges), default_labels ? std::vector<std::string>{} : labels);
    } catch (const Json::exception& ex) {
        throw Error("json", ex.what());
    }
}

Json binomial_to_json(const Binomial& b) { return {{"plus", indices_of(b.plus)}, {"minus", indices_of(b.minus)}}; }

Binomial binomial_from_json(const Json& j, std::size_t variable_count) {
    try {
        return {exponents_of(j.at("plus"), variable_count), exponents_of(j.at("minus"), variable_count)};
    } catch (const Json::exception& ex) {
        throw Error("json", ex.what());
    }
}

Json cycle_to_json(const Cycle& c) { return {{"vertices", c.vertices}, {"edges", c.edges}}; }

Json certificate_to_json(const RingCertificate& cert) {
    Json blocks = Json::array();
    for (const BlockCertificate& b : cert.blocks)
        blocks.push_back({{"block_edges", b.block_edges}, {"base_cycle", b.base_cycle.vertices}, {"attachments", b.attachments}});
    return {{"blocks", blocks}};
}

RingCertificate certificate_from_json(const Graph& g, const Json& j) {
    try {
        RingCertificate cert;
        for (const Json& b : j.at("blocks")) {
            BlockCertificate bc;
            bc.block_edges = b.at("block_edges").get<std::vector<int>>();
            bc.base_cycle = make_cycle(g, b.at("base_cycle").get<std::vector<int>>());
            bc.attachments = b.at("attachments").get<std::vector<std::vector<int>>>();
            cert.blocks.push_back(std::move(bc));
        }
        return cert;
    } catch (const Json::exception& ex) {
        throw Error("json", ex.what());
    }
}

Json arcs_to_json(const OrientedGraph& d) {
    Json out = Json::array();
    for (const Arc& a : d.arcs()) out.push_back({a.tail, a.head});
    return out;
}

Json tree_sequence_to_json(const TreeSequence& seq) {
    Json stages = Json::array();
    for (const TreeStage& s : seq.stages)
        stages.push_back({{"tree_edges", s.tree_edges},
                          {"labeling", s.labeling},
                          {"closed_prefix", s.closed_prefix},
                          {"attach_vertex", s.attach_vertex},
                          {"attached_path", s.attached_path}});
    return {{"stages", stages}, {"final_tree", seq.final_tree}, {"final_labeling", seq.final_labeling}};
}

TreeSequence tree_sequence_from_json(const Json& j) {
    try {
        TreeSequence seq;
        for (const Json& s : j.at("stages"))
            seq.stages.push_back({s.at("tree_edges").get<std::vector<int>>(), s.at("labeling").get<std::vector<int>>(),
                                  s.at("closed_prefix").get<int>(), s.at("attach_vertex").get<int>(),
                                  s.at("attached_path").get<std::vector<int>>()});
        seq.final_tree = j.at("final_tree").get<std::vector<int>>();
        seq.final_labeling = j.at("final_labeling").get<std::vector<int>>();
        return seq;
    } catch (const Json::exception& ex) {
        throw Error("json", ex.what());
    }
}

Json error_to_json(const Error& e) {
    Json out{{"error", e.kind()}, {"message", e.what()}};
    if (e.line() > 0) out["line"] = e.line();
    return out;
}

}  // namespace ringtoric
