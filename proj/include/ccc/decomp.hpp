#pragma once
// CRT idempotents of F_{2^m}[x]/<x^{2n} - 1>, the u-digit coefficient view of
// R[x]/<x^{2n} - 1>, and the reciprocal permutation on factor indices.

#include "ccc/poly.hpp"

#include <vector>

namespace ccc {

struct ReciprocalArrangement {
    // new index -> position in the input factor list; self-reciprocal factors
    // first, then pair representatives, then their partners.
    std::vector<unsigned> order;
    std::vector<unsigned> rho; // involution on new indices, 0-based
    std::vector<fe_t> e;       // reciprocal of f_j = e_j * f_{rho(j)}
    unsigned lambda = 0;       // fixed points
    unsigned eps_pairs = 0;    // 2-cycles; lambda + 2*eps_pairs = r
};

ReciprocalArrangement reciprocal_permutation(const Factorization& fact);

struct Decomposition {
    unsigned m = 0, n = 0, k = 0;
    FieldSpec spec;
    Factorization fact;                  // factors in canonical arrangement
    std::vector<Polynomial> idempotents; // eps_j, degree < 2n
    std::vector<unsigned> rho;           // 0-based involution
    std::vector<fe_t> e;
    unsigned lambda = 0;
    unsigned eps_pairs = 0;

    unsigned r() const { return static_cast<unsigned>(fact.factors.size()); }
    unsigned dj(unsigned j) const { return fact.degrees[j]; }
};

// Builds the full decomposition: arranges factors per the reciprocal
// permutation, then solves the Bezout identity per factor for the idempotent.
// The idempotent identities are verified exactly; failure is a logic error.
Decomposition compute_idempotents(const Factorization& fact, unsigned k);

Decomposition decompose(unsigned m, unsigned n, unsigned k);
Decomposition decompose(unsigned n, unsigned k, const FieldSpec& spec);

// Row i, column l = u^l digit of the x^i coefficient.
using RingElementMatrix = std::vector<std::vector<fe_t>>;

RingElementMatrix psi_forward(const std::vector<std::vector<fe_t>>& coeffs,
                              unsigned two_n, unsigned k);
std::vector<std::vector<fe_t>> psi_backward(const RingElementMatrix& mat);

// x -> x^{-1} on F_{2^m}[x]/<x^{2n} - 1>: index map i -> (2n - i) mod 2n.
Polynomial varrho(const Polynomial& a, unsigned two_n);

} // namespace ccc
