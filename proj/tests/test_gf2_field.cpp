#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "kpath/gf2.hpp"
#include "kpath/rng.hpp"

using namespace kpath;

TEST_CASE("every supported degree constructs and its modulus survives trial division") {
    for (int s = 2; s <= 32; ++s) {
        const Field f(s);
        CHECK(f.degree() == s);
        CHECK(f.order() == (std::uint64_t{1} << s));
        CHECK((f.modulus() >> s) == 1);  // leading term present
    }
    CHECK_THROWS_AS(Field(1), std::domain_error);
    CHECK_THROWS_AS(Field(0), std::domain_error);
    CHECK_THROWS_AS(Field(33), std::domain_error);
}

TEST_CASE("for_path_length picks the smallest order covering 4k") {
    CHECK(Field::for_path_length(1).degree() == 2);
    CHECK(Field::for_path_length(4).degree() == 4);    // order 16 = 4k exactly
    CHECK(Field::for_path_length(5).degree() == 5);
    CHECK(Field::for_path_length(8).degree() == 5);
    CHECK(Field::for_path_length(10).degree() == 6);
    for (int k = 1; k <= 2000; ++k) {
        const Field f = Field::for_path_length(k);
        CHECK(f.order() >= 4 * static_cast<std::uint64_t>(k));
        if (f.degree() > 2) CHECK(f.order() / 2 < 4 * static_cast<std::uint64_t>(k));
    }
    CHECK(Field::for_path_length(std::int64_t{1} << 30).degree() == 32);
    CHECK_THROWS_AS(Field::for_path_length((std::int64_t{1} << 30) + 1), std::domain_error);
    CHECK_THROWS_AS(Field::for_path_length(0), std::invalid_argument);
}

TEST_CASE("order-4 multiplication table") {
    const Field f(2);  // modulus x^2 + x + 1
    auto e = [&](std::uint64_t b) { return f.element(b); };
    CHECK(f.mul(e(2), e(2)) == e(3));  // x * x = x + 1
    CHECK(f.mul(e(2), e(3)) == e(1));  // x (x + 1) = 1
    CHECK(f.mul(e(3), e(3)) == e(2));  // (x + 1)^2 = x
    CHECK(f.inverse(e(2)) == e(3));
    CHECK(f.inverse(e(3)) == e(2));
    CHECK(f.inverse(e(1)) == e(1));
    CHECK(f.add(e(3), e(2)) == e(1));
}

TEST_CASE("order-8 spot values") {
    const Field f(3);  // modulus x^3 + x + 1
    auto e = [&](std::uint64_t b) { return f.element(b); };
    CHECK(f.mul(e(4), e(2)) == e(3));  // x^3 = x + 1
    CHECK(f.mul(e(4), e(4)) == e(6));  // x^4 = x^2 + x
    CHECK(f.mul(e(5), e(7)) == e(6));
}

TEST_CASE("field axioms hold on random triples") {
    for (int degree : {2, 3, 4, 5, 6, 8, 16, 32}) {
        const Field f(degree);
        auto rng = make_rng(1000 + degree);
        for (int i = 0; i < 500; ++i) {
            const FieldElement a = f.sample(rng), b = f.sample(rng), c = f.sample(rng);
            CHECK(f.add(a, b) == f.add(b, a));
            CHECK(f.mul(a, b) == f.mul(b, a));
            CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
            CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
            CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            CHECK(f.add(a, a).is_zero());                  // characteristic 2
            CHECK(f.add(a, f.zero()) == a);
            CHECK(f.mul(a, f.one()) == a);
            CHECK(f.mul(a, f.zero()).is_zero());
            if (!a.is_zero()) {
                CHECK(f.mul(a, f.inverse(a)) == f.one());
                CHECK(f.pow(a, f.order() - 1) == f.one());  // unit group order
            }
        }
    }
}

TEST_CASE("order-16 arithmetic is exhaustively a field") {
    const Field f(4);
    for (std::uint64_t a = 0; a < 16; ++a) {
        for (std::uint64_t b = 0; b < 16; ++b) {
            const FieldElement p = f.mul(f.element(a), f.element(b));
            CHECK(p.bits < 16);                       // closure
            if (a != 0 && b != 0) CHECK_FALSE(p.is_zero());  // no zero divisors
        }
        if (a != 0) CHECK(f.mul(f.element(a), f.inverse(f.element(a))) == f.one());
    }
}

TEST_CASE("cross-field operands and bad residues are rejected") {
    const Field f4(2), f8(3);
    CHECK_THROWS_AS(f4.add(f4.one(), f8.one()), std::invalid_argument);
    CHECK_THROWS_AS(f4.mul(f8.one(), f8.one()), std::invalid_argument);
    CHECK_THROWS_AS(f4.element(4), std::invalid_argument);
    CHECK_THROWS_AS(f4.inverse(f4.zero()), std::domain_error);
    CHECK(f4.pow(f4.element(2), 0) == f4.one());
}

TEST_CASE("sampling is uniform enough and seed-stable") {
    const Field f(2);
    auto rng = make_rng(77);
    std::map<std::uint64_t, int> histogram;
    for (int i = 0; i < 4000; ++i) ++histogram[f.sample(rng).bits];
    CHECK(histogram.size() == 4);
    for (auto [bits, count] : histogram) {
        CHECK(count > 850);
        CHECK(count < 1150);
    }

    auto rng_a = make_rng(5), rng_b = make_rng(5);
    for (int i = 0; i < 100; ++i) CHECK(f.sample(rng_a) == f.sample(rng_b));
}
