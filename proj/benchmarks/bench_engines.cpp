// Microbenchmarks for the individual engines on a fixed noisy-path instance.
// The CLI's bench subcommand is the scaling harness; these pin per-call cost
// for profiling work on a single (n, k).
#include <benchmark/benchmark.h>

#include "kpath/algebraic.hpp"
#include "kpath/color_coding.hpp"
#include "kpath/divide_color.hpp"
#include "kpath/hom_count.hpp"
#include "kpath/rng.hpp"
#include "generators.hpp"

namespace {

using namespace kpath;
using namespace kpath::harness;

Graph instance(int k) {
    auto rng = make_rng(7);
    return path_plus_noise(k + 3, 2, rng);
}

void BM_dfs_enumerate(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const Graph g = instance(k);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_k_paths(g, k, 0).count);
}
BENCHMARK(BM_dfs_enumerate)->Arg(4)->Arg(6)->Arg(8);

void BM_exact_count(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const Graph g = instance(k);
    for (auto _ : state) benchmark::DoNotOptimize(sub_path(g, k));
}
BENCHMARK(BM_exact_count)->Arg(4)->Arg(6)->Arg(8);

void BM_colorful_dp_trial(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const Graph g = instance(k);
    auto rng = make_rng(11);
    const Coloring phi = random_coloring(g, k, rng);
    for (auto _ : state) benchmark::DoNotOptimize(colorful_path_dp(g, phi, k));
}
BENCHMARK(BM_colorful_dp_trial)->Arg(4)->Arg(6)->Arg(8)->Arg(10);

void BM_divide_color(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const Graph g = instance(k);
    std::uint64_t seed = 0;
    for (auto _ : state) benchmark::DoNotOptimize(dc_search(g, k, seed++).yes());
}
BENCHMARK(BM_divide_color)->Arg(4)->Arg(6);

void BM_colorful_count_trial(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const Graph g = instance(k);
    auto rng = make_rng(13);
    const Coloring phi = random_coloring(g, (13 * k + 9) / 10, rng);
    for (auto _ : state) benchmark::DoNotOptimize(col_inj(g, phi, k));
}
BENCHMARK(BM_colorful_count_trial)->Arg(4)->Arg(6);

void BM_algebraic_trial(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const Graph g = instance(k);
    const Field field = Field::for_path_length(k);
    auto rng = make_rng(17);
    const Assignment asg = random_assignment(g, k, field, rng);
    for (auto _ : state) benchmark::DoNotOptimize(path_polynomial(g, k, asg).bits);
}
BENCHMARK(BM_algebraic_trial)->Arg(4)->Arg(6)->Arg(8)->Arg(10);

void BM_field_mul(benchmark::State& state) {
    const Field f(static_cast<int>(state.range(0)));
    auto rng = make_rng(19);
    FieldElement a = f.sample(rng), b = f.sample(rng);
    for (auto _ : state) {
        a = f.mul(a, b);
        if (a.is_zero()) a = f.one();
        benchmark::DoNotOptimize(a.bits);
    }
}
BENCHMARK(BM_field_mul)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
