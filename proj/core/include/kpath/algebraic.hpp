#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "kpath/gf2.hpp"
#include "kpath/graph.hpp"
#include "kpath/trial_report.hpp"

namespace kpath {

// One random field point: a value for every arc variable and every
// (vertex, label) variable of the k-walk polynomial.
struct Assignment {
    int k = 0;
    int degree = 0;                           // field the values live in
    std::vector<FieldElement> arc_value;      // indexed like Graph::arcs()
    std::vector<FieldElement> label_value;    // (vertex, label) pairs, see label()

    FieldElement arc(int arc_index) const { return arc_value[arc_index]; }
    FieldElement label(int v, int lbl) const {
        return label_value[static_cast<std::size_t>(v) * k + (lbl - 1)];
    }
};

// Draws arc values first (arc order), then label values vertex-major.
Assignment random_assignment(const Graph& g, int k, const Field& field, std::mt19937_64& rng);

// Sum over all k-vertex walks and over all labelings of the walk positions
// into the label subset given by label_mask (bit i selects label i + 1).
// Linear DP, O(k m) field multiplications.
FieldElement labeled_walk_sum(const Graph& g, int k, std::uint64_t label_mask,
                              const Assignment& asg);

// Characteristic-2 inclusion-exclusion of labeled_walk_sum over all 2^k - 1
// nonempty label subsets. Walks that repeat a vertex pair up and cancel, so
// the result is identically zero iff g has no simple k-vertex path — and a
// simple path survives as a multilinear monomial, so random evaluations catch
// it with probability > 1/2.
FieldElement path_polynomial(const Graph& g, int k, const Assignment& asg);

// Direct summation over simple path sequences and bijective labelings.
// Factorial cost; baseline for path_polynomial on tiny inputs only.
FieldElement brute_path_polynomial(const Graph& g, int k, const Assignment& asg);

inline constexpr int kDefaultAlgebraicTrials = 20;  // miss odds below 2^-20

// Evaluates the path polynomial at fresh random points until one is nonzero.
// YES is a certificate; NO on a yes-instance has probability < 2^-trials
// (degree 2k - 1 over a field of order >= 4k).
TrialReport algebraic_decide(const Graph& g, int k, int trials, std::uint64_t seed);

}  // namespace kpath
