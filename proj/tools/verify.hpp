#pragma once

#include <cstdint>
#include <ostream>

namespace kpath::harness {

struct VerifyOptions {
    int max_n = 7;        // corpus vertex counts 1..max_n (capped at 9)
    int graphs = 200;     // minimum corpus size
    std::uint64_t seed = 1;
    bool inject_fault = false;  // deliberately corrupt one count to exercise the failure path
};

// Cross-checks every engine against exhaustive enumeration on a seeded corpus
// of small graphs, printing one line per invariant. Returns 0 when every
// invariant holds, 1 when any fails (the first counterexample is dumped as an
// edge list), 2 on bad options.
int run_verify(const VerifyOptions& options, std::ostream& out);

}  // namespace kpath::harness
