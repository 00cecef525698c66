#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "kpath/algebraic.hpp"
#include "kpath/color_coding.hpp"
#include "kpath/divide_color.hpp"
#include "kpath/hom_count.hpp"
#include "kpath/rng.hpp"
#include "bench.hpp"
#include "engines.hpp"
#include "report_json.hpp"
#include "verify.hpp"

namespace {

using namespace kpath;
using namespace kpath::harness;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

Graph load_graph(const std::string& path) {
    if (path == "-") return Graph::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return Graph::parse(in);
}

// "c1,c2,...,cn" -> vector of ints, one per vertex.
std::vector<int> parse_color_list(const std::string& text) {
    std::vector<int> colors;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            const int c = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            colors.push_back(c);
        } catch (const std::exception&) {
            throw std::runtime_error("bad color value \"" + tok + "\" in --colors");
        }
    }
    return colors;
}

void emit(const TrialReport& report, std::uint64_t seed) {
    TrialReport stamped = report;
    stamped.seed = seed;
    std::cout << report_to_json(stamped).dump() << '\n';
}

int cmd_decide(const std::string& input, int k, const std::string& algo,
               std::optional<int> trials, std::uint64_t seed, bool want_witness) {
    const bool gives_witness = (algo == "dfs" || algo == "color-coding");
    if (want_witness && !gives_witness) {
        std::cerr << "error: --witness requires an algorithm that produces one (dfs, color-coding)\n";
        return kExitError;
    }
    if (trials && (algo == "dfs" || algo == "divide-color")) {
        std::cerr << "error: --trials does not apply to " << algo
                  << " (one deterministic pass / built-in repetition)\n";
        return kExitError;
    }

    const Graph g = load_graph(input);
    TrialReport report;
    if (algo == "dfs") {
        report = run_dfs_decide(g, k);
    } else if (algo == "color-coding") {
        report = color_coding_search(g, k, trials.value_or(default_color_coding_trials(k)), seed);
    } else if (algo == "divide-color") {
        report = dc_search(g, k, seed);
    } else if (algo == "algebraic") {
        report = algebraic_decide(g, k, trials.value_or(kDefaultAlgebraicTrials), seed);
    } else if (algo == "count-colorful") {
        report = randomized_count_search(g, k, trials.value_or(default_count_search_trials(k)), seed);
    } else {
        std::cerr << "error: unknown algorithm \"" << algo << "\"\n";
        return kExitError;
    }
    emit(report, seed);
    return report.yes() ? kExitYes : kExitNo;
}

int cmd_count(const std::string& input, int k, const std::string& algo,
              const std::optional<std::string>& colors_csv, std::uint64_t seed) {
    const Graph g = load_graph(input);
    TrialReport report;
    if (algo == "dfs") {
        report = run_dfs_count(g, k);
    } else if (algo == "ie") {
        report = run_ie_count(g, k);
    } else if (algo == "colorful-ie" || algo == "walk-ie") {
        Coloring phi;
        if (colors_csv) {
            phi.color = parse_color_list(*colors_csv);
            if (static_cast<int>(phi.color.size()) != g.vertex_count())
                throw std::runtime_error("--colors must list exactly one color per vertex");
            int maximum = 0;
            for (int c : phi.color) {
                if (c < 1) throw std::runtime_error("colors are 1-based");
                maximum = std::max(maximum, c);
            }
            if (algo == "walk-ie" && maximum > k)
                throw std::runtime_error("walk-ie needs colors within [1, k]");
            // Padding the palette with unused colors does not change the count.
            phi.palette_size = std::max(k, maximum);
        } else {
            auto rng = make_rng(derive_seed(seed, 0));
            phi = random_coloring(g, (algo == "walk-ie") ? k : std::max(k, (13 * k + 9) / 10), rng);
        }
        report = (algo == "walk-ie") ? run_walk_ie_count(g, phi, k) : run_colorful_count(g, phi, k);
    } else {
        std::cerr << "error: unknown algorithm \"" << algo << "\"\n";
        return kExitError;
    }
    emit(report, seed);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact and randomized detection and counting of simple paths on k vertices"};
    app.require_subcommand(1);

    std::string input, algo, family = "path", out_path, colors_csv;
    int k = 1, graphs = 200, max_n = 7, kmax = 8, reps = 3;
    std::optional<int> trials;
    std::uint64_t seed = 0;
    double budget = 5.0;
    bool want_witness = false, inject_fault = false, colors_given = false;

    auto* decide = app.add_subcommand("decide", "answer YES/NO for a path on k vertices");
    decide->add_option("--input", input, "edge-list file, or - for stdin")->required();
    decide->add_option("--k", k, "path length in vertices")->required()->check(CLI::PositiveNumber);
    decide->add_option("--algo", algo, "dfs | color-coding | divide-color | algebraic | count-colorful")
        ->required();
    decide->add_option("--trials", trials, "repetitions for the randomized drivers");
    decide->add_option("--seed", seed, "base seed (default 0)");
    decide->add_flag("--witness", want_witness, "fail unless the algorithm can return a path");

    auto* count = app.add_subcommand("count", "count simple paths on k vertices");
    count->add_option("--input", input, "edge-list file, or - for stdin")->required();
    count->add_option("--k", k, "path length in vertices")->required()->check(CLI::PositiveNumber);
    count->add_option("--algo", algo, "dfs | ie | colorful-ie | walk-ie")->required();
    count->add_option("--colors", colors_csv, "fixed coloring c1,..,cn for the colorful counters")
        ->each([&](const std::string&) { colors_given = true; });
    count->add_option("--seed", seed, "base seed for the random coloring (default 0)");

    auto* verify = app.add_subcommand("verify", "cross-check all engines on a seeded corpus");
    verify->add_option("--max-n", max_n, "largest corpus graph (default 7, at most 9)");
    verify->add_option("--graphs", graphs, "minimum corpus size (default 200)");
    verify->add_option("--seed", seed, "corpus seed (default 0)");
    verify->add_flag("--inject-fault", inject_fault, "corrupt one count to demonstrate failure output");

    auto* bench = app.add_subcommand("bench", "time every engine over growing k");
    bench->add_option("--kmax", kmax, "largest k (default 8)")->check(CLI::PositiveNumber);
    bench->add_option("--family", family, "path | random | complete (default path)");
    bench->add_option("--reps", reps, "repetitions per (k, engine) (default 3)");
    bench->add_option("--seed", seed, "base seed (default 0)");
    bench->add_option("--out", out_path, "JSONL file, appended")->required();
    bench->add_option("--budget", budget, "per-run seconds before an engine is dropped (default 5)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitError;
    }

    try {
        if (decide->parsed()) return cmd_decide(input, k, algo, trials, seed, want_witness);
        if (count->parsed())
            return cmd_count(input, k, algo,
                             colors_given ? std::optional<std::string>(colors_csv) : std::nullopt,
                             seed);
        if (verify->parsed())
            return kpath::harness::run_verify({max_n, graphs, seed, inject_fault}, std::cout);
        return kpath::harness::run_bench({kmax, family, reps, seed, out_path, budget}, std::cout);
    } catch (const kpath::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
}
