#include "ccc/field.hpp"

#include <doctest.h>

#include <stdexcept>

#include <random>

using namespace ccc;

TEST_SUITE("field") {

TEST_CASE("addition is componentwise xor") {
    const FieldSpec f3 = FieldSpec::standard(3);
    CHECK(field_add({f3, 0b011}, {f3, 0b011}).bits == 0b000);
    CHECK(field_add({f3, 0b101}, {f3, 0b010}).bits == 0b111);
    const FieldSpec f1 = FieldSpec::standard(1);
    CHECK(field_add({f1, 1}, {f1, 0}).bits == 1);
}

TEST_CASE("default modulus table") {
    CHECK(FieldSpec::default_modulus(1) == 0b11);
    CHECK(FieldSpec::default_modulus(2) == 0b111);
    CHECK(FieldSpec::default_modulus(3) == 0b1011);
    for (unsigned m = 1; m <= kMaxFieldDegree; ++m) {
        const std::uint32_t mod = FieldSpec::default_modulus(m);
        CHECK(gf2_degree(mod) == static_cast<int>(m));
        CHECK(gf2_irreducible(mod));
        CHECK((mod & 1u) == 1u);
    }
}

TEST_CASE("multiplication reduces modulo the field modulus") {
    const FieldSpec f3(3, 0b1011);
    CHECK(f3.mul(0b010, 0b100) == 0b011); // x * x^2 = x + 1
    for (fe_t a = 0; a < 8; ++a) {
        CHECK(f3.mul(a, 1) == a);
        CHECK(f3.mul(a, 0) == 0);
    }
}

TEST_CASE("inverse by extended Euclid matches exhaustive search") {
    const FieldSpec f3(3, 0b1011);
    // Independent oracle: scan all nonzero elements for the product 1.
    fe_t expect = 0;
    for (fe_t b = 1; b < 8; ++b)
        if (f3.mul(0b010, b) == 1) expect = b;
    CHECK(expect == 0b101); // x^2 + 1
    CHECK(f3.inv(0b010) == expect);

    const FieldSpec f2(2, 0b111);
    CHECK(f2.inv(0b10) == 0b11); // x -> x + 1
    CHECK(f2.inv(1) == 1);
}

TEST_CASE("division errors") {
    const FieldSpec f3 = FieldSpec::standard(3);
    CHECK_THROWS_AS((void)f3.inv(0), std::domain_error);
    CHECK_THROWS_AS((void)field_inv({f3, 0}), std::domain_error);
}

TEST_CASE("mismatched specs are rejected") {
    const FieldSpec f2 = FieldSpec::standard(2);
    const FieldSpec f3 = FieldSpec::standard(3);
    CHECK_THROWS_AS((void)field_add({f2, 1}, {f3, 1}), std::invalid_argument);
    CHECK_THROWS_AS((void)field_mul({f2, 1}, {f3, 1}), std::invalid_argument);
}

TEST_CASE("reducible or malformed moduli are rejected") {
    CHECK_THROWS_AS(FieldSpec(4, 0b10101), std::invalid_argument); // (x^2+x+1)^2
    CHECK_THROWS_AS(FieldSpec(3, 0b1011 << 1), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec(0, 0b11), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec(3, 0b111), std::invalid_argument); // degree 2 != m
}

TEST_CASE("ring axioms on random triples, m <= 8") {
    std::mt19937 rng(12345);
    for (unsigned m = 1; m <= 8; ++m) {
        const FieldSpec F = FieldSpec::standard(m);
        std::uniform_int_distribution<fe_t> dist(0, F.order() - 1);
        for (int iter = 0; iter < 200; ++iter) {
            const fe_t a = dist(rng), b = dist(rng), c = dist(rng);
            CHECK(F.mul(a, b) == F.mul(b, a));
            CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
            CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
        }
    }
}

TEST_CASE("multiplicative group has order 2^m - 1") {
    for (unsigned m = 1; m <= 8; ++m) {
        const FieldSpec F = FieldSpec::standard(m);
        for (fe_t a = 1; a < F.order(); ++a) {
            CHECK(F.pow(a, F.order() - 1) == 1);
            CHECK(F.mul(a, F.inv(a)) == 1);
        }
    }
}

} // TEST_SUITE
