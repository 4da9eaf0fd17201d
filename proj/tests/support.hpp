#pragma once

#include <string_view>

#include "ringtoric/graph.hpp"
#include "ringtoric/oracles.hpp"

namespace fixtures {

inline ringtoric::Graph graph(std::string_view text) { return ringtoric::parse_graph(text); }

// Squares a-b-e-d and b-c-f-e glued along b-e.
inline ringtoric::Graph two_squares() { return graph("a b\nb c\nc f\nf e\ne d\nd a\nb e\n"); }

inline ringtoric::Graph k4_subdivided() {
    return graph("0 a\na 1\n0 b\nb 2\n0 c\nc 3\n1 d\nd 2\n1 e\ne 3\n2 f\nf 3\n");
}

inline ringtoric::Graph c5_chord() { return graph("1 2\n2 3\n3 4\n4 5\n5 1\n1 3\n"); }

template <class Fn>
void for_each_connected(int max_n, Fn&& fn) {
    for (int n = 1; n <= max_n; ++n) {
        auto it = ringtoric::GraphIterator::exhaustive(n, true);
        while (auto g = it.next()) fn(*g);
    }
}

}  // namespace fixtures
