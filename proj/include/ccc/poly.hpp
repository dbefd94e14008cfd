#pragma once
// Dense polynomials over F_{2^m}, factorization of x^n - 1 for odd n, and
// reciprocal-polynomial machinery.

#include "ccc/field.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ccc {

class Polynomial {
public:
    explicit Polynomial(FieldSpec spec) : spec_(spec) {}
    Polynomial(FieldSpec spec, std::vector<fe_t> coeffs);

    static Polynomial zero(const FieldSpec& spec) { return Polynomial(spec); }
    static Polynomial one(const FieldSpec& spec);
    static Polynomial monomial(const FieldSpec& spec, unsigned deg, fe_t c = 1);
    // Bit-packed coefficients, LSB = constant term; m == 1 only.
    static Polynomial from_bits(const FieldSpec& spec, std::uint64_t bits);

    const FieldSpec& spec() const { return spec_; }
    const std::vector<fe_t>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    fe_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    fe_t lead() const { return c_.empty() ? 0 : c_.back(); }
    fe_t constant() const { return coeff(0); }

    bool operator==(const Polynomial& o) const {
        return spec_ == o.spec_ && c_ == o.c_;
    }

private:
    FieldSpec spec_;
    std::vector<fe_t> c_; // index = degree; highest entry nonzero
    void strip();
};

Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
// Returns (q, r) with a = q*b + r, deg r < deg b.
std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a, const Polynomial& b);
Polynomial poly_mod(const Polynomial& a, const Polynomial& b);
Polynomial scale(const Polynomial& a, fe_t c);
Polynomial make_monic(const Polynomial& a);
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

struct Egcd {
    Polynomial g, s, t; // g monic, s*a + t*b = g
};
Egcd extended_gcd(const Polynomial& a, const Polynomial& b);

// Total order: degree first, then coefficients from the top down by encoding.
int poly_cmp(const Polynomial& a, const Polynomial& b);

std::string to_string(const Polynomial& a);

struct Factorization {
    unsigned n = 0;
    FieldSpec spec;
    std::vector<Polynomial> factors; // monic irreducible, sorted by poly_cmp
    std::vector<unsigned> degrees;
};

// Partition of Z_n into cosets under multiplication by q, sorted by least
// member; each coset sorted ascending.
std::vector<std::vector<unsigned>> cyclotomic_cosets(unsigned n, std::uint64_t q);

// Factors x^n - 1 over F_{2^m} into monic irreducibles via cyclotomic cosets
// and minimal polynomials of powers of a primitive n-th root of unity.
Factorization factor_xn_minus_1(unsigned n, const FieldSpec& spec);

struct ReciprocalResult {
    Polynomial monic; // g with x^deg(f) f(1/x) = unit * g
    fe_t unit;
};
ReciprocalResult reciprocal(const Polynomial& f);

} // namespace ccc
