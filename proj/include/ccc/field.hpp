#pragma once
// Arithmetic in F_{2^m} with bit-packed elements, no tables.

#include <cstdint>

namespace ccc {

// Element bits, LSB = coefficient of 1. Valid values use the low m bits.
using fe_t = std::uint32_t;

inline constexpr unsigned kMaxFieldDegree = 16;

// F_2[x] helpers on bit-packed polynomials (LSB = constant term).
int gf2_degree(std::uint64_t p);
std::uint64_t gf2_mod(std::uint64_t a, std::uint64_t b);
bool gf2_irreducible(std::uint64_t p);

// Extension degree m plus a monic irreducible modulus of degree m over F_2.
// Irreducibility is checked eagerly by trial division.
class FieldSpec {
public:
    FieldSpec() : m_(1), mod_(0b11) {} // F_2
    FieldSpec(unsigned m, std::uint32_t modulus);

    static FieldSpec standard(unsigned m);
    // Minimal (weight, encoding) monic irreducible of degree m with nonzero
    // constant term.
    static std::uint32_t default_modulus(unsigned m);

    unsigned m() const { return m_; }
    std::uint32_t modulus() const { return mod_; }
    std::uint32_t order() const { return 1u << m_; }

    fe_t add(fe_t a, fe_t b) const { return a ^ b; }
    fe_t mul(fe_t a, fe_t b) const;
    fe_t inv(fe_t a) const;
    fe_t pow(fe_t a, std::uint64_t e) const;

    bool operator==(const FieldSpec& o) const = default;

private:
    unsigned m_;
    std::uint32_t mod_;
};

// An element bound to its field; operations reject mixed fields.
struct FieldElement {
    FieldSpec spec;
    fe_t bits = 0;

    bool operator==(const FieldElement& o) const = default;
};

FieldElement field_add(const FieldElement& a, const FieldElement& b);
FieldElement field_mul(const FieldElement& a, const FieldElement& b);
FieldElement field_inv(const FieldElement& a);

} // namespace ccc
