#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kpath/color_coding.hpp"
#include "kpath/rng.hpp"
#include "generators.hpp"
#include "support/oracles.hpp"

using namespace kpath;
using harness::complete_graph;
using harness::path_graph;

namespace {

Coloring fixed(std::vector<int> colors, int palette) {
    Coloring phi;
    phi.palette_size = palette;
    phi.color = std::move(colors);
    return phi;
}

Graph star(int n) {  // longest path: 3 vertices
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
    return Graph::build(n, false, edges);
}

}  // namespace

TEST_CASE("colorful_path_dp finds a rainbow path and rejects a collision") {
    const Graph g = path_graph(4);
    const auto hit = colorful_path_dp(g, fixed({1, 2, 3, 4}, 4), 4);
    REQUIRE(hit.has_value());
    CHECK(witness_ok(g, *hit, 4));

    CHECK_FALSE(colorful_path_dp(g, fixed({1, 2, 1, 2}, 4), 4).has_value());
    // Only three distinct colors appear, so no 4-window can be colorful.
    CHECK_FALSE(colorful_path_dp(g, fixed({1, 2, 1, 3}, 4), 4).has_value());
}

TEST_CASE("colorful_path_dp validates its inputs") {
    const Graph g = path_graph(3);
    CHECK_THROWS_AS(colorful_path_dp(g, fixed({1, 2, 3}, 3), 0), std::invalid_argument);
    CHECK_THROWS_AS(colorful_path_dp(g, fixed({1, 2, 3}, 4), 3), std::invalid_argument);
    CHECK_THROWS_AS(colorful_path_dp(g, fixed({1, 2}, 3), 3), std::invalid_argument);
    CHECK_THROWS_AS(colorful_path_dp(g, fixed({1, 2, 5}, 3), 3), std::invalid_argument);
}

TEST_CASE("colorful_path_dp agrees with the oracle across random colorings") {
    const auto corpus = harness::small_corpus(6, 40, 21);
    std::uint64_t draw = 0;
    for (const auto& [g, name] : corpus) {
        for (int k = 1; k <= g.vertex_count(); ++k) {
            auto rng = make_rng(derive_seed(77, draw++));
            const Coloring phi = random_coloring(g, k, rng);
            const auto witness = colorful_path_dp(g, phi, k);
            const bool expected = testing::colorful_sequence_count(g, phi, k) > 0;
            CAPTURE(name);
            CAPTURE(k);
            CHECK(witness.has_value() == expected);
            if (witness) {
                CHECK(witness_ok(g, *witness, k));
                CHECK(testing::colorful(witness->vertices, phi));
            }
        }
    }
}

TEST_CASE("colorful walk cancellation counts colorful sequences exactly") {
    // Rainbow triangle: every one of the 3! = 6 sequences is colorful.
    CHECK(colorful_walk_count_ie(complete_graph(3), fixed({1, 2, 3}, 3), 3) == 6);
    // Two vertices share a color: nothing is colorful.
    CHECK(colorful_walk_count_ie(complete_graph(3), fixed({1, 1, 2}, 3), 3) == 0);
    // k = 1 and one palette color: every vertex is a colorful 1-walk.
    CHECK(colorful_walk_count_ie(complete_graph(3), fixed({1, 1, 1}, 1), 1) == 3);

    // An isolated vertex is a 1-walk; only a base case keyed to vertices (not
    // to arcs leaving them) counts it.
    const Graph lone = Graph::build(1, false, {});
    CHECK(colorful_walk_count_ie(lone, fixed({1}, 1), 1) == 1);

    const auto corpus = harness::small_corpus(6, 40, 22);
    std::uint64_t draw = 0;
    for (const auto& [g, name] : corpus) {
        for (int k = 1; k <= g.vertex_count(); ++k) {
            auto rng = make_rng(derive_seed(78, draw++));
            const Coloring phi = random_coloring(g, k, rng);
            CAPTURE(name);
            CAPTURE(k);
            CHECK(colorful_walk_count_ie(g, phi, k) ==
                  testing::colorful_sequence_count(g, phi, k));
        }
    }
}

TEST_CASE("default trial counts match the e^k schedule") {
    CHECK(default_color_coding_trials(1) == 9);     // ceil(e * ln 20)
    CHECK(default_color_coding_trials(4) == 164);   // ceil(e^4 * ln 20)
    CHECK(default_color_coding_trials(4, 0.5) == 38);
    CHECK_THROWS_AS(default_color_coding_trials(0), std::invalid_argument);
    CHECK_THROWS_AS(default_color_coding_trials(3, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(default_color_coding_trials(3, 1.5), std::invalid_argument);
}

TEST_CASE("color_coding_search finds planted paths and stays sound") {
    const auto hit = color_coding_search(path_graph(5), 5, default_color_coding_trials(5), 4242);
    CHECK(hit.yes());
    REQUIRE(hit.witness.has_value());
    CHECK(witness_ok(path_graph(5), *hit.witness, 5));
    CHECK(hit.trials_run >= 1);
    CHECK(hit.trials_run <= default_color_coding_trials(5));
    CHECK(hit.algorithm == Algorithm::color_coding);

    // No 4-path exists in a star: every run must say NO.
    const Graph s = star(6);
    for (std::uint64_t seed = 0; seed < 100; ++seed)
        CHECK_FALSE(color_coding_search(s, 4, 5, seed).yes());

    // k beyond n cannot be colorful at all.
    CHECK_FALSE(color_coding_search(path_graph(3), 4, 10, 1).yes());
}

TEST_CASE("per-trial seeds make extra trials a pure extension") {
    const Graph g = harness::cycle_graph(6);
    // Find a seed whose first hit lands mid-range so the extension is visible.
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto long_run = color_coding_search(g, 5, 40, seed);
        if (!long_run.yes()) continue;
        const auto longer = color_coding_search(g, 5, 80, seed);
        CHECK(longer.yes());
        CHECK(longer.trials_run == long_run.trials_run);
        CHECK(longer.witness->vertices == long_run.witness->vertices);
    }
}
