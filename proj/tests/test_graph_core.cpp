#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "kpath/graph.hpp"
#include "kpath/rng.hpp"
#include "generators.hpp"
#include "support/oracles.hpp"

using namespace kpath;
using harness::complete_graph;
using harness::cycle_graph;
using harness::path_graph;

namespace {

int parse_error_line(std::string_view text) {
    try {
        Graph::parse(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return -1;
}

}  // namespace

TEST_CASE("parse builds the documented structure") {
    const Graph g = Graph::parse("4 3 undirected\n0 1\n1 2\n2 3\n");
    CHECK(g.vertex_count() == 4);
    CHECK_FALSE(g.directed());
    CHECK(g.edge_count() == 3);
    CHECK(g.arc_count() == 6);  // both orientations stored
    CHECK(g.neighbors_out(1) == std::vector<int>{0, 2});
    CHECK(g.neighbors_in(1) == std::vector<int>{0, 2});
    CHECK(g.has_arc(2, 1));
    CHECK_FALSE(g.has_arc(0, 2));
}

TEST_CASE("parse accepts directed graphs and stray whitespace") {
    const Graph g = Graph::parse("3 2 directed\n 0  1 \n1 2\n\n  \n");
    CHECK(g.directed());
    CHECK(g.edge_count() == 2);
    CHECK(g.arc_count() == 2);
    CHECK(g.has_arc(0, 1));
    CHECK_FALSE(g.has_arc(1, 0));
}

TEST_CASE("parse errors name the offending line") {
    CHECK(parse_error_line("") == 1);
    CHECK(parse_error_line("3 1\n0 1\n") == 1);            // header too short
    CHECK(parse_error_line("3 1 mixed\n0 1\n") == 1);      // bad kind
    CHECK(parse_error_line("x 1 directed\n0 1\n") == 1);   // non-integer
    CHECK(parse_error_line("3 2 undirected\n0 1\n") == 3); // missing second edge
    CHECK(parse_error_line("3 2 undirected\n0 1\n0 7\n") == 3);   // out of range
    CHECK(parse_error_line("3 2 undirected\n0 1\n2 2\n") == 3);   // self-loop
    CHECK(parse_error_line("3 2 undirected\n0 1\n1 0\n") == 3);   // duplicate
    CHECK(parse_error_line("2 1 undirected\n0 1\nleftover\n") == 3);
    CHECK(parse_error_line("2 1 undirected\n0 1 9\n") == 2);      // three tokens
}

TEST_CASE("a reversed pair is a duplicate only when undirected") {
    CHECK_NOTHROW(Graph::parse("2 2 directed\n0 1\n1 0\n"));
    CHECK_THROWS_AS(Graph::parse("2 2 undirected\n0 1\n1 0\n"), ParseError);
}

TEST_CASE("to_edge_list round-trips") {
    const std::string text = "5 4 undirected\n0 1\n1 2\n2 3\n0 4\n";
    const Graph g = Graph::parse(text);
    const Graph h = Graph::parse(g.to_edge_list());
    CHECK(g.arcs() == h.arcs());
    CHECK(g.vertex_count() == h.vertex_count());
    CHECK(g.directed() == h.directed());

    const Graph d = Graph::parse("3 2 directed\n2 0\n0 1\n");
    CHECK(Graph::parse(d.to_edge_list()).arcs() == d.arcs());
}

TEST_CASE("arcs are sorted and arc_index inverts the list") {
    const Graph g = Graph::parse("4 3 undirected\n2 3\n0 1\n1 2\n");
    const auto& arcs = g.arcs();
    CHECK(std::is_sorted(arcs.begin(), arcs.end()));
    for (int i = 0; i < g.arc_count(); ++i)
        CHECK(g.arc_index(arcs[i].first, arcs[i].second) == i);
    CHECK(g.arc_index(0, 2) == -1);
}

TEST_CASE("build rejects bad edges") {
    CHECK_THROWS_AS(Graph::build(3, false, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::build(3, false, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::build(3, false, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::build(-1, false, {}), std::invalid_argument);
}

TEST_CASE("enumerate_k_paths matches hand counts") {
    // Triangle: three 3-vertex paths, one per excluded edge.
    CHECK(enumerate_k_paths(complete_graph(3), 3).count == 3);
    // K4: four triangles times three paths each.
    CHECK(enumerate_k_paths(complete_graph(4), 3).count == 12);
    // K4 spanning paths: 4!/2.
    CHECK(enumerate_k_paths(complete_graph(4), 4).count == 12);
    // A 5-path contains three 3-windows.
    CHECK(enumerate_k_paths(path_graph(5), 3).count == 3);
    // A 5-cycle has five spanning paths, one per removed edge.
    CHECK(enumerate_k_paths(cycle_graph(5), 5).count == 5);
    CHECK(enumerate_k_paths(cycle_graph(4), 3).count == 4);
    // k = 1: every vertex is a path.
    CHECK(enumerate_k_paths(path_graph(6), 1).count == 6);
    // k beyond n: nothing.
    CHECK(enumerate_k_paths(path_graph(3), 4).count == 0);

    // Directed 3-cycle: each rotation is its own sequence.
    const Graph ring = Graph::build(3, true, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(enumerate_k_paths(ring, 3).count == 3);
    CHECK(enumerate_k_paths(ring, 2).count == 3);
}

TEST_CASE("enumerate_k_paths agrees with the brute-force oracle") {
    const auto corpus = harness::small_corpus(6, 40, 11);
    for (const auto& [g, name] : corpus) {
        for (int k = 1; k <= g.vertex_count(); ++k) {
            CAPTURE(name);
            CAPTURE(k);
            const auto e = enumerate_k_paths(g, k);
            CHECK(e.count == testing::path_count(g, k));
            CHECK(e.count == BigInt(e.witnesses.size()));
            for (const auto& w : e.witnesses) {
                CHECK(witness_ok(g, w, k));
                if (!g.directed() && k >= 2)
                    CHECK(w.vertices.front() < w.vertices.back());
            }
        }
    }
}

TEST_CASE("witness cap limits storage but not the count") {
    const auto capped = enumerate_k_paths(complete_graph(5), 3, 2);
    CHECK(capped.count == 30);
    CHECK(capped.witnesses.size() == 2);
}

TEST_CASE("find_k_path is consistent with enumeration") {
    const auto corpus = harness::small_corpus(6, 30, 12);
    for (const auto& [g, name] : corpus) {
        for (int k = 1; k <= g.vertex_count() + 1; ++k) {
            CAPTURE(name);
            const auto found = find_k_path(g, k);
            const bool exists = k <= g.vertex_count() && enumerate_k_paths(g, k).count > 0;
            CHECK(found.has_value() == exists);
            if (found) CHECK(witness_ok(g, *found, k));
        }
    }
    CHECK_THROWS_AS(find_k_path(path_graph(2), 0), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_k_paths(path_graph(2), -1), std::invalid_argument);
}

TEST_CASE("witness_ok rejects malformed paths") {
    const Graph g = path_graph(4);
    CHECK(witness_ok(g, {{0, 1, 2}}, 3));
    CHECK_FALSE(witness_ok(g, {{0, 1, 2}}, 4));    // wrong length
    CHECK_FALSE(witness_ok(g, {{0, 1, 0}}, 3));    // repeated vertex
    CHECK_FALSE(witness_ok(g, {{0, 2, 3}}, 3));    // 0-2 is not an edge
    CHECK_FALSE(witness_ok(g, {{0, 1, 7}}, 3));    // out of range
}

TEST_CASE("induced_delete relabels densely and keeps exactly the induced arcs") {
    const auto del = induced_delete(complete_graph(4), {1});
    CHECK(del.graph.vertex_count() == 3);
    CHECK(del.graph.edge_count() == 3);
    CHECK(del.old_id == std::vector<int>{0, 2, 3});
    CHECK(del.new_id == std::vector<int>{0, -1, 1, 2});

    const auto corpus = harness::small_corpus(6, 30, 13);
    auto rng = make_rng(99);
    for (const auto& [g, name] : corpus) {
        std::vector<int> removed;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (rng() & 1) removed.push_back(v);
        const auto d = induced_delete(g, removed);
        CAPTURE(name);
        CHECK(d.graph.vertex_count() + static_cast<int>(removed.size()) == g.vertex_count());
        for (int a = 0; a < d.graph.vertex_count(); ++a) {
            CHECK(d.new_id[d.old_id[a]] == a);
            for (int b = 0; b < d.graph.vertex_count(); ++b)
                CHECK(d.graph.has_arc(a, b) == g.has_arc(d.old_id[a], d.old_id[b]));
        }
    }
    CHECK_THROWS_AS(induced_delete(path_graph(3), {3}), std::invalid_argument);
}

TEST_CASE("binomial matches known values") {
    CHECK(binomial(8, 3) == 56);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(40, 20) == BigInt("137846528820"));
}
