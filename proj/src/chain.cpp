#include "ccc/chain.hpp"

#include <algorithm>
#include <stdexcept>

namespace ccc {

ResidueField::ResidueField(Polynomial f) : f_(std::move(f)) {
    if (f_.degree() < 1 || !f_.is_monic())
        throw std::invalid_argument("ResidueField: modulus must be monic of degree >= 1");
    d_ = static_cast<unsigned>(f_.degree());
}

ResidueField::Elem ResidueField::one() const {
    Elem a(d_, 0);
    a[0] = 1;
    return a;
}

bool ResidueField::is_zero(const Elem& a) const {
    return std::all_of(a.begin(), a.end(), [](fe_t c) { return c == 0; });
}

ResidueField::Elem ResidueField::add(const Elem& a, const Elem& b) const {
    Elem c(d_, 0);
    for (unsigned i = 0; i < d_; ++i) c[i] = a[i] ^ b[i];
    return c;
}

ResidueField::Elem ResidueField::mul(const Elem& a, const Elem& b) const {
    return reduce(poly_mul(lift(a), lift(b)));
}

ResidueField::Elem ResidueField::inv(const Elem& a) const {
    if (is_zero(a)) throw std::domain_error("ResidueField: not invertible");
    Egcd bez = extended_gcd(lift(a), f_);
    // gcd is 1 since f is irreducible and a != 0.
    return reduce(bez.s);
}

ResidueField::Elem ResidueField::reduce(const Polynomial& a) const {
    Polynomial r = poly_mod(a, f_);
    Elem out(d_, 0);
    for (int i = 0; i <= r.degree(); ++i) out[i] = r.coeff(i);
    return out;
}

Polynomial ResidueField::lift(const Elem& a) const {
    return Polynomial(base(), a);
}

int ResidueField::cmp(const Elem& a, const Elem& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

bool ResidueField::next(Elem& a) const {
    const fe_t mask = static_cast<fe_t>(base().order() - 1);
    for (unsigned i = 0; i < d_; ++i) {
        a[i] = (a[i] + 1) & mask;
        if (a[i] != 0) return true;
    }
    return false;
}

ChainRing::ChainRing(ResidueField field, unsigned s) : F_(std::move(field)), s_(s) {
    if (s < 1) throw std::invalid_argument("ChainRing: precision must be >= 1");
}

ChainElement ChainRing::zero() const {
    return {std::vector<ResidueField::Elem>(s_, F_.zero())};
}

ChainElement ChainRing::one() const {
    ChainElement a = zero();
    a.digits[0] = F_.one();
    return a;
}

ChainElement ChainRing::add(const ChainElement& a, const ChainElement& b) const {
    ChainElement c = zero();
    for (unsigned i = 0; i < s_; ++i) c.digits[i] = F_.add(a.digits[i], b.digits[i]);
    return c;
}

ChainElement ChainRing::mul(const ChainElement& a, const ChainElement& b) const {
    ChainElement c = zero();
    for (unsigned i = 0; i < s_; ++i) {
        if (F_.is_zero(a.digits[i])) continue;
        for (unsigned j = 0; i + j < s_; ++j)
            c.digits[i + j] = F_.add(c.digits[i + j], F_.mul(a.digits[i], b.digits[j]));
    }
    return c;
}

bool ChainRing::is_unit(const ChainElement& a) const {
    return !F_.is_zero(a.digits[0]);
}

ChainElement ChainRing::inv(const ChainElement& a) const {
    if (!is_unit(a)) throw std::domain_error("ChainRing: not invertible");
    const ResidueField::Elem d0 = F_.inv(a.digits[0]);
    ChainElement b = zero();
    b.digits[0] = d0;
    for (unsigned h = 1; h < s_; ++h) {
        ResidueField::Elem acc = F_.zero();
        for (unsigned i = 1; i <= h; ++i)
            acc = F_.add(acc, F_.mul(a.digits[i], b.digits[h - i]));
        b.digits[h] = F_.mul(d0, acc); // char 2: no sign
    }
    return b;
}

int ChainRing::cmp(const ChainElement& a, const ChainElement& b) {
    if (a.digits.size() != b.digits.size())
        return a.digits.size() < b.digits.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.digits.size(); ++i) {
        const int c = ResidueField::cmp(a.digits[i], b.digits[i]);
        if (c != 0) return c;
    }
    return 0;
}

ComponentRing::ComponentRing(Polynomial f, unsigned k)
    : f_(std::move(f)), fsq_(poly_mul(f_, f_)), k_(k) {
    if (f_.degree() < 1 || !f_.is_monic())
        throw std::invalid_argument("ComponentRing: f must be monic of degree >= 1");
    if (k < 1) throw std::invalid_argument("ComponentRing: k must be >= 1");
    d_ = static_cast<unsigned>(f_.degree());
}

ComponentRing::Elem ComponentRing::one() const {
    Elem a = zero();
    a[0] = 1;
    return a;
}

ComponentRing::Elem ComponentRing::add(const Elem& a, const Elem& b) const {
    Elem c(slots(), 0);
    for (unsigned i = 0; i < slots(); ++i) c[i] = a[i] ^ b[i];
    return c;
}

ComponentRing::Elem ComponentRing::mul(const Elem& a, const Elem& b) const {
    const unsigned w = 2 * d_;
    std::vector<Polynomial> da = to_digits(a), db = to_digits(b);
    Elem out = zero();
    for (unsigned i = 0; i < k_; ++i) {
        if (da[i].is_zero()) continue;
        for (unsigned j = 0; i + j < k_; ++j) {
            if (db[j].is_zero()) continue;
            Polynomial p = poly_mod(poly_mul(da[i], db[j]), fsq_);
            for (int c = 0; c <= p.degree(); ++c)
                out[(i + j) * w + c] ^= p.coeff(c);
        }
    }
    return out;
}

ComponentRing::Elem ComponentRing::mul_x(const Elem& a) const {
    const unsigned w = 2 * d_;
    const FieldSpec& F = base();
    Elem out = zero();
    for (unsigned l = 0; l < k_; ++l) {
        const fe_t top = a[l * w + (w - 1)];
        for (unsigned c = w - 1; c >= 1; --c) out[l * w + c] = a[l * w + c - 1];
        out[l * w] = 0;
        if (top != 0) {
            // x^{2d} = f^2 - (lower terms of f^2); f^2 is monic of degree 2d.
            for (unsigned c = 0; c < w; ++c)
                out[l * w + c] ^= F.mul(top, fsq_.coeff(c));
        }
    }
    return out;
}

ComponentRing::Elem ComponentRing::mul_u(const Elem& a) const {
    const unsigned w = 2 * d_;
    Elem out = zero();
    for (unsigned l = 0; l + 1 < k_; ++l)
        for (unsigned c = 0; c < w; ++c) out[(l + 1) * w + c] = a[l * w + c];
    return out;
}

ComponentRing::Elem ComponentRing::from_digits(const std::vector<Polynomial>& digits) const {
    if (digits.size() > k_)
        throw std::invalid_argument("ComponentRing: too many u-digits");
    const unsigned w = 2 * d_;
    Elem out = zero();
    for (unsigned l = 0; l < digits.size(); ++l) {
        if (digits[l].degree() >= static_cast<int>(w))
            throw std::invalid_argument("ComponentRing: digit degree must be < 2d");
        for (int c = 0; c <= digits[l].degree(); ++c)
            out[l * w + c] = digits[l].coeff(c);
    }
    return out;
}

std::vector<Polynomial> ComponentRing::to_digits(const Elem& a) const {
    const unsigned w = 2 * d_;
    std::vector<Polynomial> out;
    out.reserve(k_);
    for (unsigned l = 0; l < k_; ++l)
        out.emplace_back(base(), std::vector<fe_t>(a.begin() + l * w, a.begin() + (l + 1) * w));
    return out;
}

std::vector<ComponentRing::Elem> ComponentRing::ideal_basis(std::span<const Elem> gens) const {
    std::vector<Elem> rows;
    for (const Elem& g : gens) {
        Elem ug = g;
        for (unsigned l = 0; l < k_; ++l) {
            Elem xg = ug;
            for (unsigned a = 0; a < 2 * d_; ++a) {
                rows.push_back(xg);
                xg = mul_x(xg);
            }
            ug = mul_u(ug);
        }
    }
    return echelon_basis(std::move(rows), base());
}

bool ComponentRing::in_span(const std::vector<Elem>& basis, Elem v) const {
    v = reduce_by_basis(basis, std::move(v), base());
    return std::all_of(v.begin(), v.end(), [](fe_t c) { return c == 0; });
}

std::vector<std::vector<fe_t>> echelon_basis(std::vector<std::vector<fe_t>> rows,
                                             const FieldSpec& spec) {
    std::vector<std::vector<fe_t>> basis; // pivot positions strictly increasing
    for (auto& row : rows) {
        std::vector<fe_t> v = reduce_by_basis(basis, std::move(row), spec);
        std::size_t p = 0;
        while (p < v.size() && v[p] == 0) ++p;
        if (p == v.size()) continue;
        const fe_t s = spec.inv(v[p]);
        for (fe_t& c : v) c = spec.mul(c, s);
        // Back-substitute into existing rows, then insert sorted by pivot.
        for (auto& b : basis) {
            if (b[p] != 0) {
                const fe_t f = b[p];
                for (std::size_t i = 0; i < b.size(); ++i)
                    b[i] ^= spec.mul(f, v[i]);
            }
        }
        auto it = std::lower_bound(basis.begin(), basis.end(), p,
                                   [](const std::vector<fe_t>& b, std::size_t pos) {
                                       std::size_t bp = 0;
                                       while (bp < b.size() && b[bp] == 0) ++bp;
                                       return bp < pos;
                                   });
        basis.insert(it, std::move(v));
    }
    return basis;
}

std::vector<fe_t> reduce_by_basis(const std::vector<std::vector<fe_t>>& basis,
                                  std::vector<fe_t> v, const FieldSpec& spec) {
    for (const auto& b : basis) {
        std::size_t p = 0;
        while (p < b.size() && b[p] == 0) ++p;
        if (p < v.size() && v[p] != 0) {
            const fe_t f = v[p]; // basis rows have pivot value 1
            for (std::size_t i = 0; i < v.size(); ++i)
                v[i] ^= spec.mul(f, b[i]);
        }
    }
    return v;
}

std::vector<std::vector<fe_t>> kernel_basis(const std::vector<std::vector<fe_t>>& columns,
                                            const FieldSpec& spec) {
    const std::size_t ncols = columns.size();
    if (ncols == 0) return {};
    const std::size_t nrows = columns[0].size();
    // Augment each column image with the coordinate vector, eliminate on the
    // image part; rows whose image part vanishes carry kernel coordinates.
    std::vector<std::vector<fe_t>> aug;
    for (std::size_t j = 0; j < ncols; ++j) {
        std::vector<fe_t> row = columns[j];
        row.resize(nrows + ncols, 0);
        row[nrows + j] = 1;
        aug.push_back(std::move(row));
    }
    std::vector<std::vector<fe_t>> reduced; // echelon on the first nrows coords
    std::vector<std::vector<fe_t>> kernel;
    for (auto& row : aug) {
        for (const auto& b : reduced) {
            std::size_t p = 0;
            while (p < nrows && b[p] == 0) ++p;
            if (p < nrows && row[p] != 0) {
                const fe_t f = row[p];
                for (std::size_t i = 0; i < row.size(); ++i)
                    row[i] ^= spec.mul(f, b[i]);
            }
        }
        std::size_t p = 0;
        while (p < nrows && row[p] == 0) ++p;
        if (p == nrows) {
            kernel.emplace_back(row.begin() + nrows, row.end());
        } else {
            const fe_t s = spec.inv(row[p]);
            for (fe_t& c : row) c = spec.mul(c, s);
            reduced.push_back(std::move(row));
        }
    }
    return kernel;
}

} // namespace ccc
