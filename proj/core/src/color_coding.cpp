#include "kpath/color_coding.hpp"

#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include "kpath/rng.hpp"

namespace kpath {

namespace {

void check_colorful_args(const Graph& g, const Coloring& phi, int k) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    if (k > 31) throw std::domain_error("color-subset table needs k <= 31");
    if (phi.palette_size != k)
        throw std::invalid_argument("palette size must equal k");
    check_coloring(g, phi);
}

}  // namespace

std::optional<PathWitness> colorful_path_dp(const Graph& g, const Coloring& phi, int k) {
    check_colorful_args(g, phi, k);
    const int n = g.vertex_count();
    if (k > n) return std::nullopt;  // k distinct colors need k distinct vertices

    // dp[mask * width + v/64] bit (v%64): some path ending at v uses exactly
    // the colors in mask. Masks are visited in increasing order, which covers
    // every submask before its supersets.
    const std::size_t width = (static_cast<std::size_t>(n) + 63) / 64;
    const std::uint32_t full = (k == 31) ? 0x7fffffffu : ((1u << k) - 1);
    std::vector<std::uint64_t> dp((full + std::size_t{1}) * width, 0);
    auto test = [&](std::uint32_t mask, int v) {
        return (dp[mask * width + v / 64] >> (v % 64)) & 1;
    };

    for (int v = 0; v < n; ++v) {
        const std::uint32_t bit = 1u << (phi.of(v) - 1);
        dp[bit * width + v / 64] |= std::uint64_t{1} << (v % 64);
    }
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        if (std::popcount(mask) < 2) continue;
        for (int v = 0; v < n; ++v) {
            const std::uint32_t bit = 1u << (phi.of(v) - 1);
            if (!(mask & bit)) continue;
            const std::uint32_t rest = mask ^ bit;
            for (int u : g.neighbors_in(v)) {
                if ((rest >> (phi.of(u) - 1)) & 1 && test(rest, u)) {
                    dp[mask * width + v / 64] |= std::uint64_t{1} << (v % 64);
                    break;
                }
            }
        }
    }

    for (int last = 0; last < n; ++last) {
        if (!test(full, last)) continue;
        // Recover one path by walking the table backwards from its endpoint.
        std::vector<int> seq{last};
        std::uint32_t mask = full;
        int v = last;
        while (std::popcount(mask) > 1) {
            const std::uint32_t rest = mask ^ (1u << (phi.of(v) - 1));
            for (int u : g.neighbors_in(v)) {
                if ((rest >> (phi.of(u) - 1)) & 1 && test(rest, u)) {
                    seq.push_back(u);
                    v = u;
                    mask = rest;
                    break;
                }
            }
        }
        std::reverse(seq.begin(), seq.end());
        return PathWitness{std::move(seq)};
    }
    return std::nullopt;
}

BigInt colorful_walk_count_ie(const Graph& g, const Coloring& phi, int k) {
    check_colorful_args(g, phi, k);
    const int n = g.vertex_count();

    BigInt total = 0;
    const std::uint32_t all = (k == 31) ? 0x7fffffffu : ((1u << k) - 1);
    std::vector<BigInt> cur(n), next(n);
    for (std::uint32_t excluded = 0; excluded <= all; ++excluded) {
        // Walks confined to vertices whose color survives the exclusion.
        auto allowed = [&](int v) { return !((excluded >> (phi.of(v) - 1)) & 1); };
        for (int v = 0; v < n; ++v) cur[v] = allowed(v) ? 1 : 0;
        for (int step = 2; step <= k; ++step) {
            for (int v = 0; v < n; ++v) {
                next[v] = 0;
                if (!allowed(v)) continue;
                for (int w : g.neighbors_out(v)) next[v] += cur[w];
            }
            cur.swap(next);
        }
        BigInt walks = 0;
        for (int v = 0; v < n; ++v) walks += cur[v];
        if (std::popcount(excluded) % 2 == 0)
            total += walks;
        else
            total -= walks;
    }
    return total;
}

int default_color_coding_trials(int k, double failure) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    if (!(failure > 0.0 && failure < 1.0))
        throw std::invalid_argument("failure probability must lie in (0, 1)");
    const double t = std::ceil(std::exp(k) * std::log(1.0 / failure));
    if (t >= static_cast<double>(std::numeric_limits<int>::max()))
        return std::numeric_limits<int>::max();
    return std::max(1, static_cast<int>(t));
}

TrialReport color_coding_search(const Graph& g, int k, int trials, std::uint64_t seed) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    if (trials < 1) throw std::invalid_argument("at least one trial is required");

    TrialReport report;
    report.algorithm = Algorithm::color_coding;
    report.k = k;
    report.seed = seed;
    report.trials_run = trials;
    report.decision = Decision::no;

    const auto t0 = std::chrono::steady_clock::now();
    if (k <= g.vertex_count()) {
        for (int t = 0; t < trials; ++t) {
            auto rng = make_rng(derive_seed(seed, t));
            const Coloring phi = random_coloring(g, k, rng);
            if (auto w = colorful_path_dp(g, phi, k)) {
                report.decision = Decision::yes;
                report.witness = std::move(w);
                report.trials_run = t + 1;
                break;
            }
        }
    } else {
        report.trials_run = 1;  // no coloring can help: k exceeds the vertex count
    }
    report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

}  // namespace kpath
