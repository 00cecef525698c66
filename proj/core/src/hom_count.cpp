#include "kpath/hom_count.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "kpath/rng.hpp"

namespace kpath {

namespace {

// Induced subgraph on `kept` (ascending vertex ids), without the relabeling
// bookkeeping of induced_delete.
Graph induced_keep(const Graph& g, const std::vector<int>& kept) {
    std::vector<int> new_id(g.vertex_count(), -1);
    for (int i = 0; i < static_cast<int>(kept.size()); ++i) new_id[kept[i]] = i;
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.arcs()) {
        if (new_id[u] < 0 || new_id[v] < 0) continue;
        if (!g.directed() && u > v) continue;
        edges.emplace_back(new_id[u], new_id[v]);
    }
    return Graph::build(static_cast<int>(kept.size()), g.directed(), edges);
}

// Calls fn on every size-r ascending index combination drawn from `items`.
template <typename Fn>
void for_each_combination(const std::vector<int>& items, int r, Fn&& fn) {
    const int n = static_cast<int>(items.size());
    if (r > n) return;
    std::vector<int> idx(r);
    for (int i = 0; i < r; ++i) idx[i] = i;
    std::vector<int> chosen(r);
    for (;;) {
        for (int i = 0; i < r; ++i) chosen[i] = items[idx[i]];
        fn(chosen);
        int i = r - 1;
        while (i >= 0 && idx[i] == n - r + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

BigInt hom_path(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    const int n = g.vertex_count();
    std::vector<BigInt> cur(n, 1), next(n);
    for (int step = 2; step <= k; ++step) {
        for (int v = 0; v < n; ++v) {
            next[v] = 0;
            for (int u : g.neighbors_in(v)) next[v] += cur[u];
        }
        cur.swap(next);
    }
    BigInt total = 0;
    for (int v = 0; v < n; ++v) total += cur[v];
    return total;
}

BigInt inj_path(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    const int n = g.vertex_count();
    if (k > n) return 0;

    std::vector<int> vertices(n);
    for (int v = 0; v < n; ++v) vertices[v] = v;

    // Walk counts over every induced subgraph on at most k vertices, weighted
    // by how many size-k supersets the subgraph has and signed so that walks
    // visiting fewer than k distinct vertices cancel. The empty set
    // contributes nothing: a walk needs a vertex.
    BigInt total = 0;
    for (int s = 1; s <= k; ++s) {
        const BigInt weight = binomial(n - s, k - s);
        const bool negative = (k - s) % 2 != 0;
        for_each_combination(vertices, s, [&](const std::vector<int>& kept) {
            const BigInt term = weight * hom_path(induced_keep(g, kept), k);
            if (negative)
                total -= term;
            else
                total += term;
        });
    }
    return total;
}

BigInt sub_path(const Graph& g, int k) {
    const BigInt inj = inj_path(g, k);
    if (g.directed() || k == 1) return inj;
    if ((inj & 1) != 0) throw std::logic_error("undirected sequence count must be even");
    return inj / 2;  // two traversal orders per undirected path
}

Graph strip_monochromatic(const Graph& g, const Coloring& phi) {
    check_coloring(g, phi);
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.arcs()) {
        if (phi.of(u) == phi.of(v)) continue;
        if (!g.directed() && u > v) continue;
        edges.emplace_back(u, v);
    }
    return Graph::build(g.vertex_count(), g.directed(), edges);
}

BigInt col_inj(const Graph& g, const Coloring& phi, int k) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    check_coloring(g, phi);
    const int palette = phi.palette_size;
    if (palette < k) throw std::invalid_argument("palette must have at least k colors");

    const Graph stripped = strip_monochromatic(g, phi);
    std::vector<std::vector<int>> classes(palette + 1);
    for (int v = 0; v < g.vertex_count(); ++v) classes[phi.of(v)].push_back(v);

    std::vector<int> colors(palette);
    for (int c = 0; c < palette; ++c) colors[c] = c + 1;

    // Same cancellation as inj_path, but over unions of color classes: walks
    // that miss a color class drop out, leaving the colorful injective count.
    BigInt total = 0;
    for (int s = 1; s <= std::min(k, palette); ++s) {
        const BigInt weight = binomial(palette - s, k - s);
        const bool negative = (k - s) % 2 != 0;
        for_each_combination(colors, s, [&](const std::vector<int>& chosen) {
            std::vector<int> kept;
            for (int c : chosen) kept.insert(kept.end(), classes[c].begin(), classes[c].end());
            std::sort(kept.begin(), kept.end());
            const BigInt term = weight * hom_path(induced_keep(stripped, kept), k);
            if (negative)
                total -= term;
            else
                total += term;
        });
    }
    return total;
}

int default_count_search_trials(int k, double failure) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    if (!(failure > 0.0 && failure < 1.0))
        throw std::invalid_argument("failure probability must lie in (0, 1)");
    const double t = std::ceil(std::pow(1.752, k) * std::log(1.0 / failure));
    if (t >= static_cast<double>(std::numeric_limits<int>::max()))
        return std::numeric_limits<int>::max();
    return std::max(1, static_cast<int>(t));
}

TrialReport randomized_count_search(const Graph& g, int k, int trials, std::uint64_t seed) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    if (trials < 1) throw std::invalid_argument("at least one trial is required");
    const int palette = (13 * k + 9) / 10;  // ceil(1.3 k) in exact integers

    TrialReport report;
    report.algorithm = Algorithm::count_colorful;
    report.k = k;
    report.seed = seed;
    report.trials_run = trials;
    report.decision = Decision::no;

    const auto t0 = std::chrono::steady_clock::now();
    for (int t = 0; t < trials; ++t) {
        auto rng = make_rng(derive_seed(seed, t));
        const Coloring phi = random_coloring(g, palette, rng);
        BigInt c = col_inj(g, phi, k);
        if (c > 0) {
            report.decision = Decision::yes;
            report.count = std::move(c);
            report.trials_run = t + 1;
            break;
        }
    }
    report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

}  // namespace kpath
