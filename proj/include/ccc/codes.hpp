#pragma once
// Cyclic codes of length 2n over F_{2^m}[u]/<u^k> assembled from per-factor
// ideal descriptors: counting, duals, self-dual census, codeword expansion.

#include "ccc/decomp.hpp"
#include "ccc/ideals.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace ccc {

// Canonical form: one ideal descriptor per factor, in the canonical
// arrangement order of the decomposition.
struct CyclicCode {
    std::shared_ptr<const Decomposition> decomp;
    std::vector<IdealDescriptor> parts;

    bool operator==(const CyclicCode& o) const { return parts == o.parts; }
};

// Vector in R^{2n}: entry i is the k-digit u-adic vector of an element of R.
struct Codeword {
    std::vector<std::vector<fe_t>> entries;

    bool operator==(const Codeword& o) const = default;
};

CyclicCode make_code(std::shared_ptr<const Decomposition> decomp,
                     std::vector<IdealDescriptor> parts);

BigInt code_count(unsigned m, unsigned n, unsigned k);
BigInt code_count(unsigned n, unsigned k, const FieldSpec& spec);

unsigned code_log2(const CyclicCode& c);

// The digit map behind the dual tables: e_j * x^{2n-d_j} * a(x^{-1}) reduced
// mod f_{rho(j)}, applied to one residue digit of dimension d_j.
std::vector<fe_t> conjugate_digit(const Decomposition& D, unsigned j,
                                  const std::vector<fe_t>& digit);

// Dual descriptor of part j; stored at slot rho(j) of the dual code.
IdealDescriptor dual_part(const Decomposition& D, unsigned j,
                          const IdealDescriptor& c);

CyclicCode dual_code(const CyclicCode& c);

// (log2 |C|, log2 |dual C|); the sum always equals 2n*m*k.
std::pair<unsigned, unsigned> euclidean_size_check(const CyclicCode& c);

// Streams all cyclic codes in canonical order (odometer over per-factor
// descriptor streams, last factor fastest).
class CodeEnumerator {
public:
    explicit CodeEnumerator(std::shared_ptr<const Decomposition> decomp);

    std::optional<CyclicCode> next();

private:
    std::shared_ptr<const Decomposition> decomp_;
    std::vector<IdealEnumerator> streams_;
    std::vector<IdealDescriptor> current_;
    bool started_ = false;
};

// Admissible self-dual parts for a self-reciprocal factor index j < lambda,
// in canonical descriptor order.
std::vector<IdealDescriptor> selfdual_parts(const Decomposition& D, unsigned j);

// Streams all self-dual codes: Cartesian product of admissible parts over the
// self-reciprocal factors and free choices on pair representatives (the
// partner part is determined by the dual tables).
class SelfDualEnumerator {
public:
    explicit SelfDualEnumerator(std::shared_ptr<const Decomposition> decomp);

    std::optional<CyclicCode> next();

private:
    std::shared_ptr<const Decomposition> decomp_;
    std::vector<std::vector<IdealDescriptor>> fixed_choices_; // j < lambda
    std::vector<std::size_t> fixed_index_;
    std::vector<IdealEnumerator> pair_streams_; // representatives
    std::vector<IdealDescriptor> pair_current_;
    bool started_ = false, done_ = false;
};

BigInt selfdual_count(const Decomposition& D);

// All codewords, one Codeword per element of the code. Guarded: requires
// log2 |C| <= 24 unless a limit is supplied.
std::vector<Codeword> expand_codewords(const CyclicCode& c,
                                       std::optional<std::uint64_t> limit = std::nullopt);

bool contains(const CyclicCode& c, const Codeword& w);

// R-module generating set of the code as codewords: the x-shift orbit of
// eps_j(x) * g over all parts and descriptor generators.
std::vector<Codeword> generating_codewords(const CyclicCode& c);

// Euclidean inner product on R^{2n}: sum of entrywise products in R.
std::vector<fe_t> inner_product(const Codeword& a, const Codeword& b,
                                const FieldSpec& spec);

} // namespace ccc
