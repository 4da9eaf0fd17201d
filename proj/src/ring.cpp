#include "ringtoric/ring.hpp"

#include <algorithm>

#include "ringtoric/cycle_space.hpp"

namespace ringtoric {

bool is_ring_by_rank(const Graph& g) {
    const int rank = cycle_rank(g);
    // frank >= rank always holds, so counting past rank settles the answer.
    int count = 0;
    for_each_chordless_cycle(g, [&](std::span<const int>) { return ++count <= rank; });
    return count == rank;
}

bool is_ring_by_pcp_sp(const Graph& g) { return pcp(g).holds && k4_subdivision_free(g); }

namespace {

// Peeling state for one block. Vertex and edge arrays are indexed globally.
class BlockPeeler {
public:
    BlockPeeler(const Graph& g, const Block& block)
        : g_(g), block_(block), edge_alive_(g.edge_count(), 0), degree_(g.vertex_count(), 0) {
        for (int e : block.edges) {
            edge_alive_[e] = 1;
            ++degree_[g.edge(e).u];
            ++degree_[g.edge(e).v];
        }
        vertices_left_ = static_cast<int>(block.vertices.size());
        edges_left_ = static_cast<int>(block.edges.size());
    }

    // nullopt when no removable chain exists before reaching a cycle.
    std::optional<BlockCertificate> run() {
        std::vector<std::vector<int>> removed;
        while (edges_left_ > vertices_left_) {
            auto chain = find_removable_chain();
            if (!chain) return std::nullopt;
            remove_chain(*chain);
            removed.push_back(std::move(*chain));
        }
        BlockCertificate cert;
        cert.block_edges = block_.edges;
        cert.base_cycle = leftover_cycle();
        cert.attachments.assign(removed.rbegin(), removed.rend());
        return cert;
    }

private:
    std::vector<Neighbor> live_neighbors(int v) const {
        std::vector<Neighbor> out;
        for (const Neighbor& nb : g_.neighbors(v))
            if (edge_alive_[nb.edge]) out.push_back(nb);
        return out;
    }

    // Walks from `from` through `v` while the walk stays on degree-2 vertices;
    // returns the interior vertices met (starting with v) and the stopping vertex.
    std::pair<std::vector<int>, int> walk(int from, int v) const {
        std::vector<int> interior;
        int prev = from;
        while (degree_[v] == 2) {
            interior.push_back(v);
            const auto nbrs = live_neighbors(v);
            const int next = nbrs[0].vertex == prev ? nbrs[1].vertex : nbrs[0].vertex;
            prev = v;
            v = next;
        }
        return {interior, v};
    }

    std::optional<std::vector<int>> find_removable_chain() const {
        std::vector<char> tried(g_.vertex_count(), 0);
        for (int v : block_.vertices) {
            if (degree_[v] != 2 || tried[v]) continue;
            const auto nbrs = live_neighbors(v);
            auto [left, a] = walk(v, nbrs[0].vertex);
            auto [right, b] = walk(v, nbrs[1].vertex);
            std::vector<int> path;
            path.push_back(a);
            path.insert(path.end(), left.rbegin(), left.rend());
            path.push_back(v);
            path.insert(path.end(), right.begin(), right.end());
            path.push_back(b);
            for (std::size_t i = 1; i + 1 < path.size(); ++i) tried[path[i]] = 1;
            if (a == b) continue;
            const int ab = g_.edge_index(a, b);
            if (ab < 0 || !edge_alive_[ab]) continue;
            if (path.front() > path.back()) std::reverse(path.begin(), path.end());
            return path;
        }
        return std::nullopt;
    }

    void remove_chain(const std::vector<int>& path) {
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            const int e = g_.edge_index(path[i], path[i + 1]);
            edge_alive_[e] = 0;
            --degree_[path[i]];
            --degree_[path[i + 1]];
            --edges_left_;
        }
        vertices_left_ -= static_cast<int>(path.size()) - 2;
    }

    PrimitiveCycle leftover_cycle() const {
        int start = -1;
        for (int v : block_.vertices)
            if (degree_[v] > 0) {
                start = v;
                break;
            }
        std::vector<int> seq{start};
        int prev = -1, cur = start;
        while (true) {
            const auto nbrs = live_neighbors(cur);
            const int next = nbrs[0].vertex != prev ? nbrs[0].vertex : nbrs[1].vertex;
            if (next == start) break;
            seq.push_back(next);
            prev = cur;
            cur = next;
        }
        return make_cycle(g_, seq);
    }

    const Graph& g_;
    const Block& block_;
    std::vector<char> edge_alive_;
    std::vector<int> degree_;
    int vertices_left_ = 0;
    int edges_left_ = 0;
};

}  // namespace

Certification try_certify_ring(const Graph& g) {
    RingCertificate cert;
    for (const Block& b : blocks(g).blocks) {
        if (b.edges.size() < 2) continue;
        auto block_cert = BlockPeeler(g, b).run();
        if (!block_cert) {
            const Graph piece = induced_subgraph(g, b.vertices);
            return {is_ring_by_rank(piece) ? CertifyStatus::stalled : CertifyStatus::not_ring, std::nullopt};
        }
        cert.blocks.push_back(std::move(*block_cert));
    }
    return {CertifyStatus::certified, std::move(cert)};
}

std::optional<RingCertificate> certify_ring(const Graph& g) { return try_certify_ring(g).certificate; }

bool verify_certificate(const Graph& g, const RingCertificate& cert, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };

    std::vector<std::vector<int>> expected;
    for (const Block& b : blocks(g).blocks)
        if (b.edges.size() >= 2) expected.push_back(b.edges);
    std::vector<std::vector<int>> claimed;
    for (const auto& bc : cert.blocks) claimed.push_back(bc.block_edges);
    std::sort(expected.begin(), expected.end());
    std::sort(claimed.begin(), claimed.end());
    if (expected != claimed) return fail("certificate blocks do not match the graph's 2-connected blocks");

    for (const auto& bc : cert.blocks) {
        std::vector<char> built_vertex(g.vertex_count(), 0);
        std::vector<char> built_edge(g.edge_count(), 0);
        const auto& base = bc.base_cycle.vertices;
        if (base.size() < 3) return fail("base cycle too short");
        for (std::size_t i = 0; i < base.size(); ++i) {
            const int e = g.edge_index(base[i], base[(i + 1) % base.size()]);
            if (e < 0) return fail("base cycle uses a non-edge");
            if (built_vertex[base[i]]) return fail("base cycle repeats a vertex");
            built_vertex[base[i]] = 1;
            built_edge[e] = 1;
        }
        for (const auto& path : bc.attachments) {
            if (path.size() < 3) return fail("attachment shorter than 2 edges");
            const int a = path.front(), b = path.back();
            if (!built_vertex[a] || !built_vertex[b]) return fail("attachment endpoint not yet built");
            const int ab = g.edge_index(a, b);
            if (ab < 0 || !built_edge[ab]) return fail("attachment endpoints are not adjacent in the built part");
            for (std::size_t i = 1; i + 1 < path.size(); ++i) {
                if (built_vertex[path[i]]) return fail("attachment interior vertex already built");
                built_vertex[path[i]] = 1;
            }
            for (std::size_t i = 0; i + 1 < path.size(); ++i) {
                const int e = g.edge_index(path[i], path[i + 1]);
                if (e < 0 || built_edge[e]) return fail("attachment uses a non-edge or a built edge");
                built_edge[e] = 1;
            }
        }
        std::vector<int> rebuilt;
        for (int e = 0; e < g.edge_count(); ++e)
            if (built_edge[e]) rebuilt.push_back(e);
        if (rebuilt != bc.block_edges) return fail("replay does not rebuild the block");
    }
    return true;
}

}  // namespace ringtoric
