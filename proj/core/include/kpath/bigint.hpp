#pragma once

#include <algorithm>

#include <boost/multiprecision/cpp_int.hpp>

namespace kpath {

// Counts of paths, walks and homomorphisms overflow 64 bits already on small
// dense graphs, and the inclusion-exclusion sums below cancel catastrophically
// in fixed width, so every count in this library is an arbitrary-precision
// integer.
using BigInt = boost::multiprecision::cpp_int;

// Exact binomial coefficient; zero when r is negative or exceeds n.
inline BigInt binomial(long long n, long long r) {
    if (r < 0 || r > n) return 0;
    r = std::min(r, n - r);
    BigInt result = 1;
    for (long long i = 1; i <= r; ++i) {
        result *= n - r + i;
        result /= i;  // divides exactly: result is a running binomial
    }
    return result;
}

}  // namespace kpath
