#pragma once

#include <cstdint>
#include <random>

namespace kpath {

// Element of GF(2^s): bit i of `bits` is the coefficient of x^i in the
// residue polynomial. Elements are tagged with their extension degree so that
// operands from different fields are rejected instead of silently mixed.
struct FieldElement {
    std::uint64_t bits = 0;
    std::uint8_t degree = 0;

    bool is_zero() const noexcept { return bits == 0; }
    friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

// GF(2^s) for s in [2, 32], with one fixed irreducible modulus per degree.
// Construction re-verifies the modulus by exhaustive trial division (once per
// degree per process).
class Field {
public:
    explicit Field(int degree);

    // Smallest supported field of order at least 4k — large enough that a
    // nonzero polynomial of degree 2k - 1 evaluates to zero at a random point
    // with probability below 1/2.
    static Field for_path_length(int k);

    int degree() const noexcept { return degree_; }
    std::uint64_t modulus() const noexcept { return modulus_; }
    std::uint64_t order() const noexcept { return std::uint64_t{1} << degree_; }

    FieldElement zero() const noexcept { return {0, static_cast<std::uint8_t>(degree_)}; }
    FieldElement one() const noexcept { return {1, static_cast<std::uint8_t>(degree_)}; }

    // bits must already be a residue (< order()).
    FieldElement element(std::uint64_t bits) const;

    FieldElement add(FieldElement a, FieldElement b) const;  // coefficientwise XOR
    FieldElement mul(FieldElement a, FieldElement b) const;  // carry-less product mod modulus
    FieldElement pow(FieldElement a, std::uint64_t e) const;
    FieldElement inverse(FieldElement a) const;  // a^(order - 2); throws on zero

    // Exactly uniform over the field: the order is a power of two, so masking
    // one rng draw suffices.
    FieldElement sample(std::mt19937_64& rng) const;

private:
    void require(FieldElement x) const;

    int degree_;
    std::uint64_t modulus_;
};

}  // namespace kpath
