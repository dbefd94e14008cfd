#include "ccc/field.hpp"

#include <array>
#include <bit>
#include <stdexcept>
#include <string>

namespace ccc {

int gf2_degree(std::uint64_t p) {
    return p == 0 ? -1 : 63 - std::countl_zero(p);
}

std::uint64_t gf2_mod(std::uint64_t a, std::uint64_t b) {
    if (b == 0) throw std::invalid_argument("gf2_mod: division by zero");
    const int db = gf2_degree(b);
    for (int d = gf2_degree(a); d >= db; d = gf2_degree(a))
        a ^= b << (d - db);
    return a;
}

bool gf2_irreducible(std::uint64_t p) {
    const int deg = gf2_degree(p);
    if (deg < 1) return false;
    // Trial division against every polynomial of degree 1..deg/2.
    for (std::uint64_t d = 2; gf2_degree(d) <= deg / 2; ++d)
        if (gf2_mod(p, d) == 0) return false;
    return true;
}

FieldSpec::FieldSpec(unsigned m, std::uint32_t modulus) : m_(m), mod_(modulus) {
    if (m < 1 || m > kMaxFieldDegree)
        throw std::invalid_argument("FieldSpec: m must be in 1.." +
                                    std::to_string(kMaxFieldDegree));
    if (gf2_degree(modulus) != static_cast<int>(m))
        throw std::invalid_argument("FieldSpec: modulus degree must equal m");
    if (!gf2_irreducible(modulus))
        throw std::invalid_argument("FieldSpec: modulus is reducible over F_2");
}

std::uint32_t FieldSpec::default_modulus(unsigned m) {
    if (m < 1 || m > kMaxFieldDegree)
        throw std::invalid_argument("default_modulus: m out of range");
    static const std::array<std::uint32_t, kMaxFieldDegree + 1> table = [] {
        std::array<std::uint32_t, kMaxFieldDegree + 1> t{};
        for (unsigned deg = 1; deg <= kMaxFieldDegree; ++deg) {
            std::uint32_t best = 0;
            // Odd encodings only: nonzero constant term.
            for (std::uint32_t enc = (1u << deg) + 1; enc < (2u << deg); enc += 2) {
                if (!gf2_irreducible(enc)) continue;
                if (best == 0 || std::popcount(enc) < std::popcount(best) ||
                    (std::popcount(enc) == std::popcount(best) && enc < best))
                    best = enc;
            }
            t[deg] = best;
        }
        return t;
    }();
    return table[m];
}

FieldSpec FieldSpec::standard(unsigned m) {
    return FieldSpec(m, default_modulus(m));
}

fe_t FieldSpec::mul(fe_t a, fe_t b) const {
    std::uint64_t acc = 0;
    for (unsigned i = 0; (b >> i) != 0; ++i)
        if ((b >> i) & 1u) acc ^= static_cast<std::uint64_t>(a) << i;
    for (int d = gf2_degree(acc); d >= static_cast<int>(m_); d = gf2_degree(acc))
        acc ^= static_cast<std::uint64_t>(mod_) << (d - m_);
    return static_cast<fe_t>(acc);
}

fe_t FieldSpec::inv(fe_t a) const {
    if (a == 0) throw std::domain_error("field inverse: not invertible");
    // Extended Euclid on bit polynomials: s*a = 1 (mod modulus).
    std::uint64_t r0 = mod_, r1 = a;
    std::uint64_t s0 = 0, s1 = 1;
    while (r1 != 0) {
        std::uint64_t q = 0, r = r0;
        const int d1 = gf2_degree(r1);
        for (int d = gf2_degree(r); d >= d1; d = gf2_degree(r)) {
            q ^= 1ull << (d - d1);
            r ^= r1 << (d - d1);
        }
        // (r0, r1) <- (r1, r0 - q r1); same update for s.
        r0 = r1;
        r1 = r;
        std::uint64_t s2 = s0;
        for (unsigned i = 0; (q >> i) != 0; ++i)
            if ((q >> i) & 1u) s2 ^= s1 << i;
        s0 = s1;
        s1 = s2;
    }
    // r0 == 1 since the modulus is irreducible and a != 0.
    std::uint64_t s = s0;
    for (int d = gf2_degree(s); d >= static_cast<int>(m_); d = gf2_degree(s))
        s ^= static_cast<std::uint64_t>(mod_) << (d - m_);
    return static_cast<fe_t>(s);
}

fe_t FieldSpec::pow(fe_t a, std::uint64_t e) const {
    fe_t r = 1, base = a;
    while (e != 0) {
        if (e & 1u) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

namespace {
void require_same_spec(const FieldElement& a, const FieldElement& b) {
    if (!(a.spec == b.spec))
        throw std::invalid_argument("field op: mismatched FieldSpec");
}
} // namespace

FieldElement field_add(const FieldElement& a, const FieldElement& b) {
    require_same_spec(a, b);
    return {a.spec, a.spec.add(a.bits, b.bits)};
}

FieldElement field_mul(const FieldElement& a, const FieldElement& b) {
    require_same_spec(a, b);
    return {a.spec, a.spec.mul(a.bits, b.bits)};
}

FieldElement field_inv(const FieldElement& a) {
    return {a.spec, a.spec.inv(a.bits)};
}

} // namespace ccc
