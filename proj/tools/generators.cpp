#include "generators.hpp"

#include <set>
#include <stdexcept>
#include <utility>

#include "kpath/rng.hpp"

namespace kpath::harness {

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
    return Graph::build(n, false, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("a cycle needs at least three vertices");
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
    edges.emplace_back(n - 1, 0);
    return Graph::build(n, false, edges);
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::build(n, false, edges);
}

Graph erdos_renyi(int n, double p, std::mt19937_64& rng) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p) edges.emplace_back(u, v);
    return Graph::build(n, false, edges);
}

Graph path_plus_noise(int n, int extra, std::mt19937_64& rng) {
    if (n < 1) throw std::invalid_argument("need at least one vertex");
    std::set<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace(v - 1, v);
    const long long all_pairs = static_cast<long long>(n) * (n - 1) / 2;
    int want = static_cast<int>(std::min<long long>(extra, all_pairs - (n - 1)));
    while (want > 0) {
        int u = static_cast<int>(uniform_below(rng, n));
        int v = static_cast<int>(uniform_below(rng, n));
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        if (edges.emplace(u, v).second) --want;
    }
    return Graph::build(n, false, {edges.begin(), edges.end()});
}

std::vector<CorpusGraph> small_corpus(int max_n, int minimum, std::uint64_t seed) {
    std::vector<CorpusGraph> corpus;
    auto put = [&](Graph g, const std::string& name) {
        corpus.push_back({std::move(g), name});
    };

    for (int n = 1; n <= max_n; ++n) put(path_graph(n), "path-" + std::to_string(n));
    for (int n = 3; n <= max_n; ++n) put(cycle_graph(n), "cycle-" + std::to_string(n));
    for (int n = 1; n <= max_n; ++n) put(complete_graph(n), "complete-" + std::to_string(n));

    // Random fill: alternate a sparse and a denser regime so both no-instances
    // and richly connected yes-instances appear.
    std::uint64_t counter = 0;
    while (static_cast<int>(corpus.size()) < minimum) {
        const int n = 1 + static_cast<int>(counter % max_n);
        const double p = (counter % 2 == 0) ? 0.3 : 0.6;
        auto rng = make_rng(derive_seed(seed, counter));
        put(erdos_renyi(n, p, rng),
            "random-" + std::to_string(n) + "-" + std::to_string(counter));
        ++counter;
    }
    return corpus;
}

}  // namespace kpath::harness
