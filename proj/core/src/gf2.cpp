#include "kpath/gf2.hpp"

#include <array>
#include <bit>
#include <mutex>
#include <stdexcept>
#include <string>

namespace kpath {

namespace {

// Lowest-weight irreducible polynomial of each degree, lexicographically
// smallest low bits; index = degree, bit s is the leading x^s term.
constexpr std::array<std::uint64_t, 33> kModulus = {
    0,          0,          0x7,        0xB,       0x13,       0x25,       0x43,
    0x83,       0x187,      0x203,      0x409,     0x805,      0x1009,     0x2027,
    0x4021,     0x8003,     0x10047,    0x20009,   0x40009,    0x80027,    0x100009,
    0x200005,   0x400003,   0x800021,   0x1000087, 0x2000009,  0x4000047,  0x8000027,
    0x10000003, 0x20000005, 0x40000003, 0x80000009, 0x100400007,
};

int poly_degree(std::uint64_t a) { return 63 - std::countl_zero(a); }

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t m) {
    const int dm = poly_degree(m);
    while (a != 0) {
        const int da = poly_degree(a);
        if (da < dm) break;
        a ^= m << (da - dm);
    }
    return a;
}

// A degree-s polynomial is irreducible over GF(2) iff no polynomial of degree
// in [1, s/2] divides it. Exhaustive: at most 2^16 candidate divisors.
void verify_irreducible(int degree, std::uint64_t modulus) {
    for (int d = 1; d <= degree / 2; ++d) {
        for (std::uint64_t low = 0; low < (std::uint64_t{1} << d); ++low) {
            const std::uint64_t divisor = (std::uint64_t{1} << d) | low;
            if (poly_mod(modulus, divisor) == 0)
                throw std::logic_error("reducible field modulus for degree " +
                                       std::to_string(degree));
        }
    }
}

}  // namespace

Field::Field(int degree) : degree_(degree) {
    if (degree < 2 || degree > 32)
        throw std::domain_error("field degree must lie in [2, 32]");
    modulus_ = kModulus[degree];
    static std::array<std::once_flag, 33> verified;
    std::call_once(verified[degree], [&] { verify_irreducible(degree, modulus_); });
}

Field Field::for_path_length(int k) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    const std::uint64_t need = 4 * static_cast<std::uint64_t>(k);
    const int degree = std::max(2, static_cast<int>(std::bit_width(need - 1)));
    if (degree > 32)
        throw std::domain_error("k too large for the supported field degrees");
    return Field(degree);
}

FieldElement Field::element(std::uint64_t bits) const {
    if (bits >= order()) throw std::invalid_argument("bits are not a field residue");
    return {bits, static_cast<std::uint8_t>(degree_)};
}

void Field::require(FieldElement x) const {
    if (x.degree != degree_)
        throw std::invalid_argument("element belongs to a different field");
}

FieldElement Field::add(FieldElement a, FieldElement b) const {
    require(a);
    require(b);
    return {a.bits ^ b.bits, a.degree};
}

FieldElement Field::mul(FieldElement a, FieldElement b) const {
    require(a);
    require(b);
    // Carry-less product of two residues (< 2^32 each) fits in 64 bits; one
    // reduction at the end.
    std::uint64_t acc = 0, x = a.bits, y = b.bits;
    while (y != 0) {
        if (y & 1) acc ^= x;
        x <<= 1;
        y >>= 1;
    }
    return {poly_mod(acc, modulus_), a.degree};
}

FieldElement Field::pow(FieldElement a, std::uint64_t e) const {
    require(a);
    FieldElement result = one();
    FieldElement base = a;
    while (e != 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

FieldElement Field::inverse(FieldElement a) const {
    require(a);
    if (a.is_zero()) throw std::domain_error("zero has no inverse");
    return pow(a, order() - 2);
}

FieldElement Field::sample(std::mt19937_64& rng) const {
    return {rng() & (order() - 1), static_cast<std::uint8_t>(degree_)};
}

}  // namespace kpath
