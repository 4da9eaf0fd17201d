#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ringtoric/cycle_space.hpp"
#include "ringtoric/json_io.hpp"
#include "ringtoric/oracles.hpp"
#include "ringtoric/orientation_builder.hpp"
#include "ringtoric/oriented.hpp"
#include "ringtoric/primitive_cycles.hpp"
#include "ringtoric/ring.hpp"
#include "ringtoric/toric_bipartite.hpp"

using namespace ringtoric;

namespace {

struct Settings {
    std::uint64_t seed = 1;
    std::size_t budget = 0;

    Budget caps() const {
        Budget b;
        b.max_cycles = budget;
        b.max_pairs = budget;
        return b;
    }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("io", "cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Graph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

Json generator_json(const FundamentalGenerator& gen) {
    Json j = binomial_to_json(gen.binomial);
    j["non_tree_edge"] = gen.non_tree_edge;
    j["cycle"] = cycle_to_json(gen.cycle);
    return j;
}

Json oriented_binomial_json(const OrientedCycleBinomial& cb) {
    Json j = binomial_to_json(cb.binomial);
    j["cycle"] = cycle_to_json(cb.cycle);
    return j;
}

Json run_analyze(const Settings& s, const std::string& path) {
    const Graph g = load_graph(path);
    const PcpResult p = pcp(g, s.caps());
    Json out{{"seed", s.seed},
             {"graph", graph_to_json(g)},
             {"n", g.vertex_count()},
             {"q", g.edge_count()},
             {"r", component_count(g)},
             {"rank", cycle_rank(g)},
             {"frank", frank(g, s.caps())},
             {"pcp", p.holds},
             {"k4_free", k4_subdivision_free(g)}};
    if (p.witness) out["pcp_witness"] = {cycle_to_json(p.witness->first), cycle_to_json(p.witness->second)};
    return out;
}

Json run_ring_check(const Settings& s, const std::string& path, bool with_certificate) {
    const Graph g = load_graph(path);
    const bool by_rank = is_ring_by_rank(g);
    const bool by_pcp = is_ring_by_pcp_sp(g);
    const Certification cert = try_certify_ring(g);
    const bool has_cert = cert.certificate.has_value();
    Json out{{"seed", s.seed},
             {"is_ring", by_rank},
             {"method_agreement", by_rank == by_pcp && (by_rank == has_cert || cert.status == CertifyStatus::stalled)},
             {"methods", {{"rank", by_rank}, {"pcp_series_parallel", by_pcp}, {"certificate", has_cert}}}};
    if (cert.status == CertifyStatus::stalled) out["certificate_status"] = "stalled";
    if (with_certificate && cert.certificate) out["certificate"] = certificate_to_json(*cert.certificate);
    return out;
}

Json run_ci_check(const Settings& s, const std::string& path) {
    const Graph g = load_graph(path);
    const bool bip = bipartition(g).has_value();
    const Height h = height_toric(g);
    Json out{{"seed", s.seed}, {"bipartite", bip}, {"height", h.value}, {"height_summed_over_components", h.summed_over_components}};
    if (!bip) {
        out["is_ci"] = nullptr;
        out["generators"] = Json::array();
        return out;
    }
    out["is_ci"] = is_complete_intersection_bipartite(g);
    Json gens = Json::array();
    for (const Binomial& b : toric_generators_bipartite(g, s.caps())) gens.push_back(binomial_to_json(b));
    out["generators"] = gens;
    const auto bd = blocks(g);
    const bool two_connected = g.vertex_count() >= 4 && bd.blocks.size() == 1 &&
                               static_cast<int>(bd.blocks.front().edges.size()) == g.edge_count();
    if (two_connected) {
        if (auto f = build_foliation(g)) {
            Json members = Json::array();
            for (const Binomial& b : f->members) members.push_back(binomial_to_json(b));
            out["foliation"] = {{"members", members}, {"variable_order", f->variable_order}, {"valid", validate_foliation(*f).valid}};
        }
    }
    return out;
}

Json run_orient(const Settings& s, const std::string& path, const std::string& dot_path) {
    const Graph g = load_graph(path);
    const OrientationCertificate cert = ci_generators(g);
    Json labels = Json::array();
    for (int v : cert.labeling) labels.push_back(g.label(v));
    Json gens = Json::array();
    for (const FundamentalGenerator& gen : cert.generators) gens.push_back(generator_json(gen));
    Json prim = Json::array();
    for (const OrientedCycleBinomial& cb : cert.primitive_generators) prim.push_back(oriented_binomial_json(cb));
    Json stages = Json::array();
    for (const TreeSequence& seq : cert.sequences) stages.push_back(tree_sequence_to_json(seq));
    if (!dot_path.empty()) {
        std::ofstream dot(dot_path);
        if (!dot) throw Error("io", "cannot write " + dot_path);
        dot << to_dot(cert.oriented, cert.tree_edges);
    }
    return {{"seed", s.seed},
            {"graph", graph_to_json(g)},
            {"labeling", cert.labeling},
            {"labeling_labels", labels},
            {"directed_edges", arcs_to_json(cert.oriented)},
            {"tree_edges", cert.tree_edges},
            {"generators", gens},
            {"primitive_generators", prim},
            {"stages", stages},
            {"disconnected", cert.disconnected}};
}

Json run_generators(const Settings& s, const std::string& path, const std::string& orientation_path, bool universal,
                    bool verify) {
    const Graph g = load_graph(path);
    const OrientedGraph d = parse_orientation(g, read_file(orientation_path));
    const Acyclicity acyc = is_acyclic(d);
    Json out{{"seed", s.seed}, {"acyclic", acyc.order.has_value()}};
    if (acyc.order) {
        out["topological_order"] = *acyc.order;
        out["grading_degrees"] = grading_degrees(d, *acyc.order);
    } else {
        out["oriented_cycle"] = cycle_to_json(*acyc.witness);
    }
    const auto prim = toric_generators_oriented(d, s.caps());
    Json gens = Json::array();
    for (const auto& cb : prim) gens.push_back(oriented_binomial_json(cb));
    out["generators"] = gens;
    if (universal || verify) {
        const auto all = universal_groebner_basis(d, s.caps());
        if (universal) {
            Json u = Json::array();
            for (const auto& cb : all) u.push_back(oriented_binomial_json(cb));
            out["universal"] = u;
        }
        if (verify) {
            std::vector<Binomial> basis;
            for (const auto& cb : prim) basis.push_back(cb.binomial);
            const auto q = static_cast<std::size_t>(g.edge_count());
            const MonomialOrder order = acyc.order ? MonomialOrder::grevlex(q, {}, grading_degrees(d, *acyc.order))
                                                   : MonomialOrder::grevlex(q);
            BuchbergerOptions opts;
            opts.budget = s.caps();
            const GroebnerBasis gb = buchberger(basis, order, opts);
            bool all_zero = true;
            for (const auto& cb : all) all_zero = all_zero && !normal_form(cb.binomial, gb, s.caps());
            out["verify"] = {{"groebner_basis_size", gb.elements.size()}, {"all_cycles_reduce_to_zero", all_zero}};
        }
    }
    return out;
}

Json run_selftest(const Settings& s, int max_vertices, std::size_t random_count) {
    long graphs = 0;
    Json failures = Json::array();
    auto check = [&](const Graph& g) {
        ++graphs;
        const bool by_rank = is_ring_by_rank(g);
        const bool by_pcp = is_ring_by_pcp_sp(g);
        const Certification cert = try_certify_ring(g);
        bool ok = by_rank == by_pcp && by_rank == cert.certificate.has_value();
        ok = ok && (!cert.certificate || verify_certificate(g, *cert.certificate));
        ok = ok && frank(g) == oracle_frank(g);
        ok = ok && (g.vertex_count() > 9 || k4_subdivision_free(g) != oracle_k4_subdivision(g));
        if (!ok && failures.size() < 20) failures.push_back(graph_to_json(g));
    };
    for (int n = 1; n <= max_vertices; ++n) {
        GraphIterator it = GraphIterator::exhaustive(n, true);
        while (auto g = it.next()) check(*g);
    }
    std::mt19937_64 rng(s.seed);
    for (std::size_t i = 0; i < random_count; ++i) {
        const int n = std::uniform_int_distribution<int>(1, 9)(rng);
        check(random_graph(rng, n, 0.4));
    }
    return {{"seed", s.seed}, {"graphs", graphs}, {"failures", failures}, {"passed", failures.empty()}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ring graphs and complete-intersection toric ideals of graphs"};
    app.require_subcommand(1);
    Settings settings;
    app.add_option("--seed", settings.seed, "Seed for random graph streams");
    app.add_option("--budget", settings.budget, "Cap on enumerated cycles and Buchberger pairs (0 = none)");

    std::string graph_path, orientation_path, dot_path;
    bool with_certificate = false, universal = false, verify = false;
    int max_vertices = 6;
    std::size_t random_count = 200;

    auto* analyze = app.add_subcommand("analyze", "Cycle rank, free rank, PCP and K4 checks");
    analyze->add_option("graph", graph_path, "Edge-list file")->required();
    auto* ring = app.add_subcommand("ring-check", "Ring graph recognition");
    ring->add_option("graph", graph_path, "Edge-list file")->required();
    ring->add_flag("--certificate", with_certificate, "Include the construction certificate");
    auto* ci = app.add_subcommand("ci-check", "Complete intersection test for bipartite graphs");
    ci->add_option("graph", graph_path, "Edge-list file")->required();
    auto* orient = app.add_subcommand("orient", "Acyclic orientation with fundamental-cycle generators");
    orient->add_option("graph", graph_path, "Edge-list file")->required();
    orient->add_option("--dot", dot_path, "Write the oriented graph as DOT to this file");
    auto* gens = app.add_subcommand("generators", "Toric generators of an oriented graph");
    gens->add_option("graph", graph_path, "Edge-list file")->required();
    gens->add_option("--orientation", orientation_path, "Arc file, one 'u v' per line")->required();
    gens->add_flag("--universal", universal, "Also list every cycle binomial");
    gens->add_flag("--verify", verify, "Check that all cycle binomials reduce to zero");
    auto* selftest = app.add_subcommand("selftest", "Exhaustive agreement checks on small graphs");
    selftest->add_option("--max-vertices", max_vertices, "Exhaustive up to this many vertices")->check(CLI::Range(1, 7));
    selftest->add_option("--random", random_count, "Additional seeded random graphs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Json out;
        if (*analyze) out = run_analyze(settings, graph_path);
        else if (*ring) out = run_ring_check(settings, graph_path, with_certificate);
        else if (*ci) out = run_ci_check(settings, graph_path);
        else if (*orient) out = run_orient(settings, graph_path, dot_path);
        else if (*gens) out = run_generators(settings, graph_path, orientation_path, universal, verify);
        else out = run_selftest(settings, max_vertices, random_count);
        std::cout << out.dump(2) << '\n';
        if (*selftest && !out["passed"].get<bool>()) return 1;
        return 0;
    } catch (const Error& e) {
        Json err = error_to_json(e);
        err["seed"] = settings.seed;
        std::cout << err.dump(2) << '\n';
        return 1;
    }
}
