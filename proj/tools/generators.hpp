#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "kpath/graph.hpp"

namespace kpath::harness {

Graph path_graph(int n);
Graph cycle_graph(int n);      // n >= 3
Graph complete_graph(int n);

// Undirected G(n, p): each unordered pair independently.
Graph erdos_renyi(int n, double p, std::mt19937_64& rng);

// Spanning path 0-1-...-(n-1) plus `extra` random chords: a guaranteed
// yes-instance for every k <= n that is not just a bare path.
Graph path_plus_noise(int n, int extra, std::mt19937_64& rng);

struct CorpusGraph {
    Graph graph;
    std::string name;
};

// Deterministic mixed bag of small graphs: paths, cycles, complete graphs and
// sparse/medium random graphs, every vertex count from 1 to max_n. At least
// `minimum` graphs.
std::vector<CorpusGraph> small_corpus(int max_n, int minimum, std::uint64_t seed);

}  // namespace kpath::harness
