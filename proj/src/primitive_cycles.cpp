#include "ringtoric/primitive_cycles.hpp"

#include <algorithm>

#include "ringtoric/cycle_space.hpp"

namespace ringtoric {

namespace {

class ChordlessWalker {
public:
    ChordlessWalker(const Graph& g, const std::function<bool(std::span<const int>)>& visit)
        : g_(g), visit_(visit), in_path_(g.vertex_count(), 0), blocked_(g.vertex_count(), 0) {}

    void run() {
        for (int s = 0; s < g_.vertex_count() && !stopped_; ++s) {
            start_ = s;
            path_.assign(1, s);
            in_path_[s] = 1;
            for (const Neighbor& nb : g_.neighbors(s)) {
                if (nb.vertex <= s) continue;
                push(nb.vertex);
                extend();
                pop();
                if (stopped_) break;
            }
            in_path_[s] = 0;
        }
    }

private:
    void push(int v) {
        // The current end becomes interior once v follows it (start excluded).
        if (path_.size() >= 2)
            for (const Neighbor& nb : g_.neighbors(path_.back())) ++blocked_[nb.vertex];
        path_.push_back(v);
        in_path_[v] = 1;
    }

    void pop() {
        in_path_[path_.back()] = 0;
        path_.pop_back();
        if (path_.size() >= 2)
            for (const Neighbor& nb : g_.neighbors(path_.back())) --blocked_[nb.vertex];
    }

    void extend() {
        const int end = path_.back();
        for (const Neighbor& nb : g_.neighbors(end)) {
            const int v = nb.vertex;
            if (v <= start_ || in_path_[v] || blocked_[v] > 0) continue;
            if (g_.adjacent(v, start_)) {
                if (path_[1] < v) {
                    path_.push_back(v);
                    if (!visit_(path_)) stopped_ = true;
                    path_.pop_back();
                    if (stopped_) return;
                }
                continue;
            }
            push(v);
            extend();
            pop();
            if (stopped_) return;
        }
    }

    const Graph& g_;
    const std::function<bool(std::span<const int>)>& visit_;
    std::vector<int> path_;
    std::vector<char> in_path_;
    std::vector<int> blocked_;
    int start_ = 0;
    bool stopped_ = false;
};

}  // namespace

void for_each_chordless_cycle(const Graph& g, const std::function<bool(std::span<const int>)>& visit) {
    ChordlessWalker(g, visit).run();
}

std::vector<PrimitiveCycle> enumerate_primitive_cycles(const Graph& g, const Budget& budget) {
    std::vector<PrimitiveCycle> out;
    for_each_chordless_cycle(g, [&](std::span<const int> vs) {
        if (budget.max_cycles != 0 && out.size() >= budget.max_cycles) throw BudgetExceeded("primitive cycles");
        out.push_back(make_cycle(g, vs));
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

int frank(const Graph& g, const Budget& budget) {
    std::size_t count = 0;
    for_each_chordless_cycle(g, [&](std::span<const int>) {
        if (budget.max_cycles != 0 && count >= budget.max_cycles) throw BudgetExceeded("primitive cycles");
        ++count;
        return true;
    });
    return static_cast<int>(count);
}

PcpResult pcp(const Graph& g, const Budget& budget) {
    const std::vector<PrimitiveCycle> cycles = enumerate_primitive_cycles(g, budget);
    std::vector<ChainVector> chains;
    chains.reserve(cycles.size());
    for (const auto& c : cycles) chains.push_back(chain_of(g, c));
    for (std::size_t i = 0; i < cycles.size(); ++i)
        for (std::size_t j = i + 1; j < cycles.size(); ++j)
            if (chains[i].count_common(chains[j]) > 1) return {false, std::make_pair(cycles[i], cycles[j])};
    return {};
}

bool block_reduces_to_edge(const Graph& g, std::span<const int> block_edges) {
    if (block_edges.size() <= 1) return true;

    std::vector<int> local(g.vertex_count(), -1);
    int m = 0;
    for (int e : block_edges)
        for (int v : {g.edge(e).u, g.edge(e).v})
            if (local[v] < 0) local[v] = m++;

    // Parallel edges are merged as soon as they appear, so a 0/1 matrix suffices.
    std::vector<char> adj(static_cast<std::size_t>(m) * m, 0);
    std::vector<int> deg(m, 0);
    auto at = [&](int a, int b) -> char& { return adj[static_cast<std::size_t>(a) * m + b]; };
    for (int e : block_edges) {
        const int a = local[g.edge(e).u], b = local[g.edge(e).v];
        at(a, b) = at(b, a) = 1;
        ++deg[a];
        ++deg[b];
    }

    std::vector<char> alive(m, 1);
    int remaining = m;
    std::vector<int> work;
    for (int v = 0; v < m; ++v)
        if (deg[v] == 2) work.push_back(v);

    while (!work.empty() && remaining > 2) {
        const int v = work.back();
        work.pop_back();
        if (!alive[v] || deg[v] != 2) continue;
        int nbr[2];
        int k = 0;
        for (int w = 0; w < m && k < 2; ++w)
            if (at(v, w)) nbr[k++] = w;
        const int a = nbr[0], b = nbr[1];
        at(v, a) = at(a, v) = at(v, b) = at(b, v) = 0;
        alive[v] = 0;
        --remaining;
        --deg[a];
        --deg[b];
        if (!at(a, b)) {
            at(a, b) = at(b, a) = 1;
            ++deg[a];
            ++deg[b];
        }
        for (int w : {a, b})
            if (deg[w] == 2) work.push_back(w);
    }
    return remaining == 2;
}

bool k4_subdivision_free(const Graph& g) {
    for (const Block& b : blocks(g).blocks)
        if (!block_reduces_to_edge(g, b.edges)) return false;
    return true;
}

}  // namespace ringtoric
