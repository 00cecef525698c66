#pragma once

#include "kpath/coloring.hpp"
#include "kpath/graph.hpp"
#include "kpath/trial_report.hpp"

namespace kpath::harness {

// Deterministic engines wrapped into the common report shape, with wall time
// measured around the core call.

TrialReport run_dfs_decide(const Graph& g, int k);   // first path found, if any
TrialReport run_dfs_count(const Graph& g, int k);    // exhaustive count + one witness
TrialReport run_ie_count(const Graph& g, int k);     // inclusion-exclusion path count

// Counting under a fixed coloring; decision reflects positivity of the count.
TrialReport run_colorful_count(const Graph& g, const Coloring& phi, int k);
TrialReport run_walk_ie_count(const Graph& g, const Coloring& phi, int k);

}  // namespace kpath::harness
