#pragma once
// Brute-force ground truth at desk scale: exhaustive ideal enumeration in
// small component rings and exhaustive Euclidean duals, used to validate the
// classification, the counting formulas, the dual tables, and the self-dual
// census.

#include "ccc/codes.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ccc {

class OracleRangeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bitset over packed ring-element indices.
struct ElementSet {
    std::vector<std::uint64_t> w;

    explicit ElementSet(std::size_t nbits = 0) : w((nbits + 63) / 64, 0) {}
    void set(std::uint32_t i) { w[i >> 6] |= 1ull << (i & 63); }
    bool test(std::uint32_t i) const { return (w[i >> 6] >> (i & 63)) & 1u; }
    std::size_t count() const;
    bool subset_of(const ElementSet& o) const;
    bool operator==(const ElementSet& o) const = default;
    bool operator<(const ElementSet& o) const { return w < o.w; }
};

// K[u]/<u^k> with every element packed into an index of 2*m*d*k bits
// (u-digit major, then x-coefficient, then field bits). Guarded at 2^16
// elements.
class SmallRing {
public:
    SmallRing(Polynomial f, unsigned k);

    const ComponentRing& component() const { return ring_; }
    unsigned bits() const { return ring_.bits(); }
    std::uint32_t size() const { return 1u << bits(); }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return a ^ b; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;

    std::uint32_t pack(const ComponentRing::Elem& e) const;
    ComponentRing::Elem unpack(std::uint32_t a) const;

private:
    ComponentRing ring_;
    unsigned kdigit_bits_; // 2*m*d bits per u-digit
    unsigned kdigits_;     // k
    std::vector<std::uint16_t> ktab_; // K = F_{2^m}[x]/<f^2> digit products
};

// Every ideal, found independently of the classification: all principal
// ideals R*g, then closure of the family under pairwise ideal sums (every
// ideal is a finite sum of principal ideals).
std::vector<ElementSet> brute_ideals(const SmallRing& ring);

// The element set generated by the given descriptor generators.
ElementSet ideal_from_generators(const SmallRing& ring,
                                 const std::vector<ComponentRing::Elem>& gens);

// Codeword packing for R^{2n} sweeps: entry-major, then u-digit, then field
// bits; 2n*m*k bits total.
std::uint32_t pack_codeword(const Codeword& w, unsigned m, unsigned k);
Codeword unpack_codeword(std::uint32_t bits, unsigned two_n, unsigned m, unsigned k);

// Exhaustive Euclidean dual: all vectors of R^{2n} orthogonal to the code,
// as sorted packed values. Guarded at 2n*m*k <= 24.
std::vector<std::uint32_t> brute_dual(const CyclicCode& c);

struct CheckResult {
    std::string name;
    std::string params;
    std::string expected;
    std::string actual;
    bool pass = false;
};

// Full oracle suite for (m, n, k): per-factor ideal census bijection,
// exhaustive dual agreement, involution, size complement, cross
// orthogonality, and the self-dual census. Throws OracleRangeError when the
// parameters exceed the brute-force guards.
std::vector<CheckResult> run_verification(unsigned n, unsigned k, const FieldSpec& spec);

} // namespace ccc
