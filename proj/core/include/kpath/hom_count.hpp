#pragma once

#include <cstdint>

#include "kpath/bigint.hpp"
#include "kpath/coloring.hpp"
#include "kpath/graph.hpp"
#include "kpath/trial_report.hpp"

namespace kpath {

// Homomorphisms of the k-vertex path into g, i.e. walk sequences of k
// vertices along arcs. Linear DP, O(k (n + m)) big-integer additions.
BigInt hom_path(const Graph& g, int k);

// Injective homomorphisms (vertex sequences of simple k-paths), by an
// alternating sum of walk counts over induced subgraphs on at most k
// vertices. Exact big-integer arithmetic throughout — the terms are huge and
// cancel almost completely.
BigInt inj_path(const Graph& g, int k);

// Distinct simple paths on k vertices. For undirected graphs with k >= 2 each
// path is counted twice by inj_path (once per traversal order); directed
// sequences and single vertices are already distinct paths.
BigInt sub_path(const Graph& g, int k);

// Copy of g with every arc joining same-colored endpoints removed.
Graph strip_monochromatic(const Graph& g, const Coloring& phi);

// Injective homomorphisms of the k-path whose image touches k distinct color
// classes of phi, by an alternating sum of walk counts over unions of color
// classes. Requires palette_size >= k. Only bichromatic arcs can appear in a
// colorful image, so this reads the monochromatic-stripped graph.
BigInt col_inj(const Graph& g, const Coloring& phi, int k);

// ceil(1.752^k * ln(1/failure)): repetitions matching the colorful-hit rate
// of a ceil(1.3 k)-color random palette.
int default_count_search_trials(int k, double failure = 0.05);

// Random recoloring counting driver: recolors with ceil(1.3 k) colors and
// answers YES on the first strictly positive colorful count (the count is
// reported). One-sided.
TrialReport randomized_count_search(const Graph& g, int k, int trials, std::uint64_t seed);

}  // namespace kpath
