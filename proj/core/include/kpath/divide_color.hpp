#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <utility>
#include <vector>

#include "kpath/graph.hpp"
#include "kpath/trial_report.hpp"

namespace kpath {

// Red/blue halves of a vertex subset.
struct ColorPartition {
    std::vector<int> red, blue;
};

// Each vertex of subset lands on the red side with probability 1/2,
// consuming exactly one rng draw per vertex, in subset order.
ColorPartition split_red_blue(const std::vector<int>& subset, std::mt19937_64& rng);

// Boolean endpoint-pair matrix over an ordered vertex subset. A set entry
// (u, v) at level l asserts a simple l-vertex path from u to v whose vertices
// all lie in the support. Soundness of that claim is maintained exactly by
// every operation here; completeness is only ever probabilistic.
class ReachMatrix {
public:
    ReachMatrix() = default;
    ReachMatrix(std::vector<int> support, int level);  // all entries clear

    // Level-1 diagonal: every vertex reaches itself by the 1-vertex path.
    static ReachMatrix identity(std::vector<int> support);

    const std::vector<int>& support() const noexcept { return support_; }
    int level() const noexcept { return level_; }

    // Entries are addressed by vertex id; vertices outside the support read 0.
    bool get(int u, int v) const;
    void set(int u, int v);

    // Entrywise OR. other must have the same support set (order may differ)
    // and the same level.
    void merge_or(const ReachMatrix& other);

    bool any_set() const;
    bool any_off_diagonal() const;
    std::vector<std::pair<int, int>> set_entries() const;

private:
    int index_of(int vertex) const;  // -1 when outside the support

    std::vector<int> support_;
    std::vector<int> pos_;  // vertex id -> support index
    int level_ = 1;
    std::vector<std::uint8_t> bits_;
};

// Join across the red/blue boundary: the result sets (u, v) iff some arc
// (x, y) of g leaves red's support into blue's with red[u, x] and blue[y, v]
// both set. Supports must be disjoint; the result covers their union at level
// red.level() + blue.level().
ReachMatrix delta_join(const ReachMatrix& red, const ReachMatrix& blue, const Graph& g);

// One random halving per recursion node. Sound always; finds a fixed k-path
// only with probability about 2^-O(k log k), hence "naive".
ReachMatrix naive_colors_paths(const Graph& g, const std::vector<int>& subset, int k,
                               std::mt19937_64& rng);

// Per-level repetition count max(1, ceil(2^level * log2(4k))): enough that a
// level-`level` subproblem misses a fixed path with probability at most
// 1/(4k)^(1/ln 2) after all repetitions.
int default_split_trials(int level, int k);

using SplitSchedule = std::function<int(int level, int k)>;

// Repeats split/recurse/join `schedule(level, k)` times per node and ORs the
// joins. The default schedule is default_split_trials; tests substitute a
// constant-1 schedule to recover the naive recursion.
ReachMatrix improved_colors_paths(const Graph& g, const std::vector<int>& subset, int level,
                                  int k, std::mt19937_64& rng,
                                  const SplitSchedule& schedule = {});

// One improved pass over all of g. YES iff some level-k entry is set — any
// entry for k = 1, off-diagonal otherwise. One-sided.
TrialReport dc_search(const Graph& g, int k, std::uint64_t seed);

}  // namespace kpath
