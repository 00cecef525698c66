#pragma once

#include <cstdint>
#include <ostream>
#include <string>

namespace kpath::harness {

struct BenchOptions {
    int kmax = 8;
    std::string family = "path";  // path | random | complete
    int reps = 3;
    std::uint64_t seed = 1;
    std::string out_path;          // JSONL, appended
    double budget = 5.0;           // seconds; an engine whose median run at the
                                   // previous k exceeds this is skipped onward
};

// Runs every engine on one instance family for k = 2..kmax, appends one JSON
// line per (k, engine, rep) to out_path, and prints per-engine growth factors
// (median ratio of consecutive per-k median times, computed over the upper
// half of the k range where cost has left the timing floor). Returns 0, or 2
// on bad options or I/O failure.
int run_bench(const BenchOptions& options, std::ostream& out);

}  // namespace kpath::harness
