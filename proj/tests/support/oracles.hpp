#pragma once

// Brute-force baselines used only by the tests. Deliberately written as plain
// nested recursions over has_arc so they share no traversal code with the
// library under test. Exponential everywhere; keep n and k tiny.

#include <algorithm>
#include <set>
#include <vector>

#include "kpath/bigint.hpp"
#include "kpath/coloring.hpp"
#include "kpath/graph.hpp"

namespace kpath::testing {

// Every simple k-vertex sequence that follows arcs (both orientations of an
// undirected path appear).
inline std::vector<std::vector<int>> path_sequences(const Graph& g, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto step = [&](auto&& self) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (std::find(cur.begin(), cur.end(), v) != cur.end()) continue;
            if (!cur.empty() && !g.has_arc(cur.back(), v)) continue;
            cur.push_back(v);
            self(self);
            cur.pop_back();
        }
    };
    step(step);
    return out;
}

inline BigInt sequence_count(const Graph& g, int k) {
    return BigInt(path_sequences(g, k).size());
}

// Distinct paths: undirected sequences come in reversal pairs for k >= 2.
inline BigInt path_count(const Graph& g, int k) {
    BigInt sequences = sequence_count(g, k);
    if (g.directed() || k == 1) return sequences;
    return sequences / 2;
}

inline bool colorful(const std::vector<int>& vertices, const Coloring& phi) {
    std::set<int> seen;
    for (int v : vertices)
        if (!seen.insert(phi.of(v)).second) return false;
    return true;
}

inline BigInt colorful_sequence_count(const Graph& g, const Coloring& phi, int k) {
    BigInt total = 0;
    for (const auto& seq : path_sequences(g, k))
        if (colorful(seq, phi)) ++total;
    return total;
}

// All k-vertex walks (repeats allowed), counted by direct recursion.
inline BigInt walk_count(const Graph& g, int k) {
    BigInt total = 0;
    auto step = [&](auto&& self, int v, int left) -> void {
        if (left == 0) {
            ++total;
            return;
        }
        for (int w : g.neighbors_out(v)) self(self, w, left - 1);
    };
    for (int v = 0; v < g.vertex_count(); ++v) step(step, v, k - 1);
    return total;
}

}  // namespace kpath::testing
