#include "engines.hpp"

#include <chrono>
#include <utility>

#include "kpath/color_coding.hpp"
#include "kpath/hom_count.hpp"

namespace kpath::harness {

namespace {

template <typename Fn>
double timed(Fn&& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

TrialReport run_dfs_decide(const Graph& g, int k) {
    TrialReport r;
    r.algorithm = Algorithm::dfs;
    r.k = k;
    r.wall_time = timed([&] {
        if (auto w = find_k_path(g, k)) {
            r.decision = Decision::yes;
            r.witness = std::move(w);
        }
    });
    return r;
}

TrialReport run_dfs_count(const Graph& g, int k) {
    TrialReport r;
    r.algorithm = Algorithm::dfs;
    r.k = k;
    r.wall_time = timed([&] {
        auto e = enumerate_k_paths(g, k, 1);
        r.decision = e.count > 0 ? Decision::yes : Decision::no;
        if (!e.witnesses.empty()) r.witness = std::move(e.witnesses.front());
        r.count = std::move(e.count);
    });
    return r;
}

TrialReport run_ie_count(const Graph& g, int k) {
    TrialReport r;
    r.algorithm = Algorithm::count_ie;
    r.k = k;
    r.wall_time = timed([&] {
        BigInt c = sub_path(g, k);
        r.decision = c > 0 ? Decision::yes : Decision::no;
        r.count = std::move(c);
    });
    return r;
}

TrialReport run_colorful_count(const Graph& g, const Coloring& phi, int k) {
    TrialReport r;
    r.algorithm = Algorithm::count_colorful;
    r.k = k;
    r.wall_time = timed([&] {
        BigInt c = col_inj(g, phi, k);
        r.decision = c > 0 ? Decision::yes : Decision::no;
        r.count = std::move(c);
    });
    return r;
}

TrialReport run_walk_ie_count(const Graph& g, const Coloring& phi, int k) {
    TrialReport r;
    r.algorithm = Algorithm::count_walk_ie;
    r.k = k;
    r.wall_time = timed([&] {
        BigInt c = colorful_walk_count_ie(g, phi, k);
        r.decision = c > 0 ? Decision::yes : Decision::no;
        r.count = std::move(c);
    });
    return r;
}

}  // namespace kpath::harness
