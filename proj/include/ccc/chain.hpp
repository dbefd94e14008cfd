#pragma once
// Residue fields F_{2^m}[x]/<f>, chain rings F[u]/<u^s> with u-adic digit
// vectors, and the per-factor component ring K[u]/<u^k>, K = F_{2^m}[x]/<f^2>.

#include "ccc/poly.hpp"

#include <span>
#include <vector>

namespace ccc {

// F_{2^m}[x]/<f(x)>, f monic irreducible of degree d. Elements are dense
// coefficient vectors of length d.
class ResidueField {
public:
    using Elem = std::vector<fe_t>;

    explicit ResidueField(Polynomial f);

    const FieldSpec& base() const { return f_.spec(); }
    const Polynomial& modulus() const { return f_; }
    unsigned degree() const { return d_; }
    unsigned bits() const { return base().m() * d_; } // log2 |F|

    Elem zero() const { return Elem(d_, 0); }
    Elem one() const;
    bool is_zero(const Elem& a) const;
    Elem add(const Elem& a, const Elem& b) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem inv(const Elem& a) const;
    Elem reduce(const Polynomial& a) const;
    Polynomial lift(const Elem& a) const;

    // Integer-encoding order on coefficient vectors.
    static int cmp(const Elem& a, const Elem& b);
    // Odometer step in encoding order; returns false when wrapping to zero.
    bool next(Elem& a) const;

private:
    Polynomial f_;
    unsigned d_;
};

// Element of F[u]/<u^s> as its u-adic digit vector.
struct ChainElement {
    std::vector<ResidueField::Elem> digits;

    bool operator==(const ChainElement& o) const = default;
};

class ChainRing {
public:
    ChainRing(ResidueField field, unsigned s);

    const ResidueField& field() const { return F_; }
    unsigned precision() const { return s_; }

    ChainElement zero() const;
    ChainElement one() const;
    ChainElement add(const ChainElement& a, const ChainElement& b) const;
    ChainElement mul(const ChainElement& a, const ChainElement& b) const;
    bool is_unit(const ChainElement& a) const; // digit 0 nonzero
    ChainElement inv(const ChainElement& a) const;

    static int cmp(const ChainElement& a, const ChainElement& b);

private:
    ResidueField F_;
    unsigned s_;
};

// K[u]/<u^k> with K = F_{2^m}[x]/<f^2>. Elements are flat dense vectors:
// u-digit l, x-coefficient a at index l*2d + a.
class ComponentRing {
public:
    using Elem = std::vector<fe_t>;

    ComponentRing(Polynomial f, unsigned k);

    const FieldSpec& base() const { return f_.spec(); }
    const Polynomial& f() const { return f_; }
    const Polynomial& f_squared() const { return fsq_; }
    unsigned d() const { return d_; }
    unsigned k() const { return k_; }
    unsigned slots() const { return 2 * d_ * k_; }          // vector length
    unsigned bits() const { return base().m() * slots(); }  // log2 |ring|

    Elem zero() const { return Elem(slots(), 0); }
    Elem one() const;
    Elem add(const Elem& a, const Elem& b) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem mul_x(const Elem& a) const;
    Elem mul_u(const Elem& a) const;

    Elem from_digits(const std::vector<Polynomial>& digits) const;
    std::vector<Polynomial> to_digits(const Elem& a) const;

    // Reduced F_{2^m}-basis (row echelon, pivots ascending) of the ideal
    // generated by gens; the span of {u^l x^a g} equals the ideal.
    std::vector<Elem> ideal_basis(std::span<const Elem> gens) const;
    bool in_span(const std::vector<Elem>& basis, Elem v) const;

private:
    Polynomial f_, fsq_;
    unsigned d_, k_;
};

// Row echelon over F_{2^m} on flat vectors; returns the reduced basis with
// pivot positions strictly increasing.
std::vector<std::vector<fe_t>> echelon_basis(std::vector<std::vector<fe_t>> rows,
                                             const FieldSpec& spec);
// Reduces v against an echelon basis; v is in the span iff the residue is 0.
std::vector<fe_t> reduce_by_basis(const std::vector<std::vector<fe_t>>& basis,
                                  std::vector<fe_t> v, const FieldSpec& spec);
// Kernel basis of the linear map given column-wise: columns[j] = image of the
// j-th unit vector. Vectors have the same length as the column count.
std::vector<std::vector<fe_t>> kernel_basis(const std::vector<std::vector<fe_t>>& columns,
                                            const FieldSpec& spec);

} // namespace ccc
