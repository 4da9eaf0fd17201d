#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ringtoric/graph.hpp"
#include "ringtoric/primitive_cycles.hpp"

namespace ringtoric {

// Construction witness for one 2-connected block: start from base_cycle and
// add the attachments in order. Each attachment is a vertex path of length at
// least 2 whose endpoints are adjacent in the part built so far and whose
// interior vertices are new.
struct BlockCertificate {
    std::vector<int> block_edges;  // sorted
    PrimitiveCycle base_cycle;
    std::vector<std::vector<int>> attachments;
    friend bool operator==(const BlockCertificate&, const BlockCertificate&) = default;
};

// One entry per block with at least two edges; bridges and isolated vertices
// need no witness.
struct RingCertificate {
    std::vector<BlockCertificate> blocks;
    friend bool operator==(const RingCertificate&, const RingCertificate&) = default;
};

enum class CertifyStatus {
    certified,
    not_ring,
    // Peeling found no removable chain although rank == frank holds; the
    // counting criterion is taken as the answer and no certificate is given.
    stalled,
};

struct Certification {
    CertifyStatus status = CertifyStatus::not_ring;
    std::optional<RingCertificate> certificate;
};

bool is_ring_by_rank(const Graph& g);
bool is_ring_by_pcp_sp(const Graph& g);

// Reverse peeling: in each 2-connected block that is not a cycle, repeatedly
// remove the first (by smallest vertex) maximal chain of degree-2 vertices
// whose end vertices are adjacent once the chain is gone; the leftover cycle
// is the base and the removed chains, reversed, are the attachments.
Certification try_certify_ring(const Graph& g);
std::optional<RingCertificate> certify_ring(const Graph& g);

// Replays every block certificate and checks that it rebuilds exactly the
// 2-connected blocks of g. On failure `why` (if given) names the first problem.
bool verify_certificate(const Graph& g, const RingCertificate& cert, std::string* why = nullptr);

}  // namespace ringtoric
