#include "verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "kpath/algebraic.hpp"
#include "kpath/color_coding.hpp"
#include "kpath/divide_color.hpp"
#include "kpath/hom_count.hpp"
#include "kpath/rng.hpp"
#include "generators.hpp"

namespace kpath::harness {

namespace {

// Levels the divide-and-color checks run at; the repetition schedule grows as
// 2^level, so higher levels would dominate the whole verify run.
constexpr int kDcLevelCap = 5;

struct Failure {
    std::string detail;
    const Graph* graph = nullptr;
};

struct CorpusEntry {
    const CorpusGraph* cg;
    std::vector<PathEnumeration> by_k;  // index k-1, for k in 1..n
};

bool colorful_witness(const PathWitness& w, const Coloring& phi) {
    std::set<int> seen;
    for (int v : w.vertices)
        if (!seen.insert(phi.of(v)).second) return false;
    return true;
}

void report_line(std::ostream& out, const std::string& name, long long checks,
                 const Failure* failure) {
    if (!failure) {
        out << "ok " << name << " (" << checks << " checks)\n";
    } else {
        out << "FAIL " << name << ": " << failure->detail << "\n";
        if (failure->graph)
            out << "counterexample (edge-list):\n" << failure->graph->to_edge_list();
    }
}

}  // namespace

int run_verify(const VerifyOptions& options, std::ostream& out) {
    if (options.max_n < 1 || options.max_n > 9) {
        out << "error: max-n must lie in [1, 9]\n";
        return 2;
    }
    if (options.graphs < 1) {
        out << "error: graphs must be positive\n";
        return 2;
    }

    const auto corpus = small_corpus(options.max_n, options.graphs, options.seed);
    std::vector<CorpusEntry> entries;
    entries.reserve(corpus.size());
    for (const auto& cg : corpus) {
        CorpusEntry e{&cg, {}};
        for (int k = 1; k <= cg.graph.vertex_count(); ++k)
            e.by_k.push_back(enumerate_k_paths(cg.graph, k));
        entries.push_back(std::move(e));
    }

    bool all_ok = true;
    std::uint64_t draw = 0;  // corpus-wide counter for derived sub-seeds

    // Inclusion-exclusion counting agrees with exhaustive enumeration.
    {
        Failure fail;
        bool failed = false;
        long long checks = 0;
        for (const auto& e : entries) {
            const Graph& g = e.cg->graph;
            for (int k = 1; k <= g.vertex_count() && !failed; ++k) {
                BigInt counted = sub_path(g, k);
                if (options.inject_fault && checks == 0) ++counted;
                ++checks;
                if (counted != e.by_k[k - 1].count) {
                    failed = true;
                    fail.detail = e.cg->name + " k=" + std::to_string(k) + ": counted " +
                                  counted.str() + ", enumeration says " +
                                  e.by_k[k - 1].count.str();
                    fail.graph = &g;
                }
            }
            if (failed) break;
        }
        report_line(out, "count-vs-enumerate", checks, failed ? &fail : nullptr);
        all_ok &= !failed;
    }

    // The colorful walk-count cancellation agrees with filtering enumerated
    // paths by colorfulness (each undirected path is two sequences).
    {
        Failure fail;
        bool failed = false;
        long long checks = 0;
        for (const auto& e : entries) {
            const Graph& g = e.cg->graph;
            for (int k = 1; k <= g.vertex_count() && !failed; ++k) {
                auto rng = make_rng(derive_seed(options.seed, draw++));
                const Coloring phi = random_coloring(g, k, rng);
                BigInt expect = 0;
                for (const auto& w : e.by_k[k - 1].witnesses)
                    if (colorful_witness(w, phi)) ++expect;
                if (!g.directed() && k >= 2) expect *= 2;
                const BigInt got = colorful_walk_count_ie(g, phi, k);
                ++checks;
                if (got != expect) {
                    failed = true;
                    fail.detail = e.cg->name + " k=" + std::to_string(k) + ": cancellation got " +
                                  got.str() + ", expected " + expect.str();
                    fail.graph = &g;
                }
            }
            if (failed) break;
        }
        report_line(out, "colorful-walks-vs-enumerate", checks, failed ? &fail : nullptr);
        all_ok &= !failed;
    }

    // The subset-sum evaluation of the walk polynomial agrees with direct
    // summation over simple paths and bijective labelings.
    {
        Failure fail;
        bool failed = false;
        long long checks = 0;
        for (const auto& e : entries) {
            const Graph& g = e.cg->graph;
            if (g.vertex_count() > 5) continue;
            for (int k = 1; k <= std::min(4, g.vertex_count()) && !failed; ++k) {
                const Field field = Field::for_path_length(k);
                for (int round = 0; round < 2 && !failed; ++round) {
                    auto rng = make_rng(derive_seed(options.seed, draw++));
                    const Assignment asg = random_assignment(g, k, field, rng);
                    ++checks;
                    if (!(path_polynomial(g, k, asg) == brute_path_polynomial(g, k, asg))) {
                        failed = true;
                        fail.detail = e.cg->name + " k=" + std::to_string(k) +
                                      ": subset-sum and direct evaluation differ";
                        fail.graph = &g;
                    }
                }
            }
            if (failed) break;
        }
        report_line(out, "walk-polynomial-vs-direct", checks, failed ? &fail : nullptr);
        all_ok &= !failed;
    }

    // Every witness any engine hands back is an actual simple path.
    {
        Failure fail;
        bool failed = false;
        long long checks = 0;
        for (const auto& e : entries) {
            const Graph& g = e.cg->graph;
            for (int k = 1; k <= g.vertex_count() && !failed; ++k) {
                if (e.by_k[k - 1].count == 0) continue;
                const auto found = find_k_path(g, k);
                ++checks;
                if (!found || !witness_ok(g, *found, k)) {
                    failed = true;
                    fail.detail = e.cg->name + " k=" + std::to_string(k) + ": dfs witness invalid";
                    fail.graph = &g;
                    break;
                }
                const auto report = color_coding_search(g, k, 3, derive_seed(options.seed, draw++));
                ++checks;
                if (report.yes() && !witness_ok(g, *report.witness, k)) {
                    failed = true;
                    fail.detail =
                        e.cg->name + " k=" + std::to_string(k) + ": color-coding witness invalid";
                    fail.graph = &g;
                }
            }
            if (failed) break;
        }
        report_line(out, "witness-validity", checks, failed ? &fail : nullptr);
        all_ok &= !failed;
    }

    // No randomized engine ever answers YES where enumeration finds nothing.
    {
        Failure fail;
        bool failed = false;
        long long checks = 0;
        for (const auto& e : entries) {
            const Graph& g = e.cg->graph;
            for (int k = 2; k <= g.vertex_count() && !failed; ++k) {
                if (e.by_k[k - 1].count != 0) continue;
                const char* culprit = nullptr;
                if (color_coding_search(g, k, 3, derive_seed(options.seed, draw++)).yes())
                    culprit = "color-coding";
                else if (randomized_count_search(g, k, 3, derive_seed(options.seed, draw++)).yes())
                    culprit = "count-colorful";
                else if (algebraic_decide(g, k, 3, derive_seed(options.seed, draw++)).yes())
                    culprit = "algebraic";
                else if (k <= kDcLevelCap && dc_search(g, k, derive_seed(options.seed, draw++)).yes())
                    culprit = "divide-color";
                checks += (k <= kDcLevelCap) ? 4 : 3;
                if (culprit) {
                    failed = true;
                    fail.detail = e.cg->name + " k=" + std::to_string(k) + ": " + culprit +
                                  " answered YES on a no-instance";
                    fail.graph = &g;
                }
            }
            if (failed) break;
        }
        report_line(out, "one-sided-error", checks, failed ? &fail : nullptr);
        all_ok &= !failed;
    }

    // Every endpoint pair the halving recursion reports is realized by some
    // enumerated path.
    {
        Failure fail;
        bool failed = false;
        long long checks = 0;
        for (const auto& e : entries) {
            const Graph& g = e.cg->graph;
            std::vector<int> all(g.vertex_count());
            for (int v = 0; v < g.vertex_count(); ++v) all[v] = v;
            for (int k = 2; k <= std::min(g.vertex_count(), kDcLevelCap) && !failed; ++k) {
                std::set<std::pair<int, int>> endpoint_pairs;
                for (const auto& w : e.by_k[k - 1].witnesses) {
                    endpoint_pairs.emplace(w.vertices.front(), w.vertices.back());
                    if (!g.directed()) endpoint_pairs.emplace(w.vertices.back(), w.vertices.front());
                }
                auto rng = make_rng(derive_seed(options.seed, draw++));
                const ReachMatrix m = improved_colors_paths(g, all, k, k, rng);
                for (auto [u, v] : m.set_entries()) {
                    ++checks;
                    if (!endpoint_pairs.count({u, v})) {
                        failed = true;
                        fail.detail = e.cg->name + " k=" + std::to_string(k) + ": entry (" +
                                      std::to_string(u) + ", " + std::to_string(v) +
                                      ") has no realizing path";
                        fail.graph = &g;
                        break;
                    }
                }
            }
            if (failed) break;
        }
        report_line(out, "halving-soundness", checks, failed ? &fail : nullptr);
        all_ok &= !failed;
    }

    out << (all_ok ? "verify: all invariants hold\n" : "verify: FAILURES above\n");
    return all_ok ? 0 : 1;
}

}  // namespace kpath::harness
