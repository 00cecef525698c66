#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "kpath/bigint.hpp"
#include "kpath/graph.hpp"

namespace kpath {

enum class Decision { yes, no };

enum class Algorithm {
    dfs,             // exhaustive enumeration
    color_coding,    // random recoloring + colorful-path subset DP
    divide_color,    // recursive red/blue halving with repetition
    count_ie,        // exact injective-homomorphism inclusion-exclusion
    count_colorful,  // colorful injective count under a fixed coloring
    count_walk_ie,   // colorful walk count by excluded-color cancellation
    algebraic,       // characteristic-2 walk-polynomial evaluation
};

constexpr std::string_view algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::dfs: return "dfs";
        case Algorithm::color_coding: return "color-coding";
        case Algorithm::divide_color: return "divide-color";
        case Algorithm::count_ie: return "count-ie";
        case Algorithm::count_colorful: return "count-colorful";
        case Algorithm::count_walk_ie: return "count-walk-ie";
        case Algorithm::algebraic: return "algebraic";
    }
    return "unknown";
}

// One engine invocation: what ran, under which seed, and what came out.
// witness is present only for engines that produce one; count only for
// counting engines. YES answers are always certified; NO may be a miss for
// the randomized engines.
struct TrialReport {
    Algorithm algorithm = Algorithm::dfs;
    int k = 0;
    std::uint64_t seed = 0;
    int trials_run = 1;
    Decision decision = Decision::no;
    std::optional<PathWitness> witness;
    std::optional<BigInt> count;
    double wall_time = 0.0;  // seconds spent inside the engine call

    bool yes() const { return decision == Decision::yes; }
};

}  // namespace kpath
