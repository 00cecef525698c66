#pragma once

#include <cstdint>
#include <optional>

#include "kpath/coloring.hpp"
#include "kpath/graph.hpp"
#include "kpath/trial_report.hpp"

namespace kpath {

// Subset dynamic program for a path that uses every color of [1, k] exactly
// once. Requires phi.palette_size == k; runs in O(2^k (n + m)) time and
// O(2^k n / w) bits, and reconstructs a witness by walking the table
// backwards. Returns nullopt when no colorful path exists under phi.
std::optional<PathWitness> colorful_path_dp(const Graph& g, const Coloring& phi, int k);

// Number of colorful k-vertex walk sequences, by an alternating sum over
// excluded color sets. Because the k colors are pairwise distinct, a colorful
// walk cannot repeat a vertex, so this equals the number of colorful simple
// path sequences. 2^k walk-count passes, polynomial space.
BigInt colorful_walk_count_ie(const Graph& g, const Coloring& phi, int k);

// ceil(e^k * ln(1/failure)): repetitions that push the overall miss
// probability below `failure`, given the >= e^-k per-trial hit rate.
int default_color_coding_trials(int k, double failure = 0.05);

// Random recoloring driver. Answers YES with a witness on the first trial
// whose coloring admits a colorful path; otherwise NO after all trials.
// One-sided: YES is always correct.
TrialReport color_coding_search(const Graph& g, int k, int trials, std::uint64_t seed);

}  // namespace kpath
