#include "ccc/codes.hpp"

#include <algorithm>
#include <stdexcept>

namespace ccc {

namespace {

Polynomial x2n_modulus(const Decomposition& D) {
    return poly_add(Polynomial::monomial(D.spec, 2 * D.n), Polynomial::one(D.spec));
}

Codeword zero_codeword(const Decomposition& D) {
    return {std::vector<std::vector<fe_t>>(2 * D.n, std::vector<fe_t>(D.k, 0))};
}

// eps_j(x) * (sum_l digit_l(x) u^l) reduced mod x^{2n} - 1, as an R^{2n} vector.
Codeword embed_component(const Decomposition& D, unsigned j,
                         const std::vector<Polynomial>& digits) {
    const Polynomial mod = x2n_modulus(D);
    Codeword w = zero_codeword(D);
    for (unsigned l = 0; l < digits.size(); ++l) {
        if (digits[l].is_zero()) continue;
        Polynomial p = poly_mod(poly_mul(D.idempotents[j], digits[l]), mod);
        for (int i = 0; i <= p.degree(); ++i) w.entries[i][l] = p.coeff(i);
    }
    return w;
}

Codeword xshift(const Codeword& w) {
    const std::size_t two_n = w.entries.size();
    Codeword out = w;
    for (std::size_t i = 0; i < two_n; ++i)
        out.entries[(i + 1) % two_n] = w.entries[i];
    return out;
}

void xor_into(Codeword& acc, const Codeword& w) {
    for (std::size_t i = 0; i < acc.entries.size(); ++i)
        for (std::size_t l = 0; l < acc.entries[i].size(); ++l)
            acc.entries[i][l] ^= w.entries[i][l];
}

void require_valid(const CyclicCode& c) {
    if (!c.decomp) throw std::invalid_argument("code: missing decomposition");
    const Decomposition& D = *c.decomp;
    if (c.parts.size() != D.r())
        throw std::invalid_argument("code: expected one part per factor");
    for (unsigned j = 0; j < D.r(); ++j) {
        validate(c.parts[j]);
        if (c.parts[j].dj != D.dj(j) || c.parts[j].k != D.k)
            throw std::invalid_argument("code: part shape mismatch");
    }
}

} // namespace

CyclicCode make_code(std::shared_ptr<const Decomposition> decomp,
                     std::vector<IdealDescriptor> parts) {
    CyclicCode c{std::move(decomp), std::move(parts)};
    require_valid(c);
    return c;
}

BigInt code_count(unsigned m, unsigned n, unsigned k) {
    return code_count(n, k, FieldSpec::standard(m));
}

BigInt code_count(unsigned n, unsigned k, const FieldSpec& spec) {
    if (k < 2) throw std::invalid_argument("code_count: k must be >= 2");
    Factorization fact = factor_xn_minus_1(n, spec);
    BigInt total = 1;
    for (unsigned d : fact.degrees)
        total *= count_ideals(1ull << (spec.m() * d), k);
    return total;
}

unsigned code_log2(const CyclicCode& c) {
    unsigned sum = 0;
    for (const IdealDescriptor& p : c.parts) sum += card_log2(p, c.decomp->m);
    return sum;
}

std::vector<fe_t> conjugate_digit(const Decomposition& D, unsigned j,
                                  const std::vector<fe_t>& digit) {
    const unsigned d = D.dj(j);
    if (digit.size() != d)
        throw std::invalid_argument("conjugate_digit: digit width mismatch");
    const FieldSpec& F = D.spec;
    // e_j x^{2n-d} * digit(x^{-1}) = e_j * sum_l digit[l] x^{2n-d-l}.
    std::vector<fe_t> poly(2 * D.n - d + 1, 0);
    for (unsigned l = 0; l < d; ++l) poly[2 * D.n - d - l] = digit[l];
    Polynomial p = poly_mod(Polynomial(F, std::move(poly)), D.fact.factors[D.rho[j]]);
    std::vector<fe_t> out(d, 0);
    for (int i = 0; i <= p.degree(); ++i)
        out[i] = F.mul(D.e[j], p.coeff(i));
    return out;
}

IdealDescriptor dual_part(const Decomposition& D, unsigned j, const IdealDescriptor& c) {
    validate(c);
    const unsigned k = D.k;
    auto conj_omega = [&](const std::vector<std::vector<fe_t>>& omega) {
        std::vector<std::vector<fe_t>> out;
        out.reserve(omega.size());
        for (const auto& digit : omega) out.push_back(conjugate_digit(D, j, digit));
        return out;
    };
    IdealDescriptor d;
    d.dj = c.dj;
    d.k = k;
    switch (c.kase) {
        case IdealCase::I:
            d.kase = IdealCase::I;
            d.i = k - c.i;
            break;
        case IdealCase::II:
            if (c.s == 0) {
                d.kase = IdealCase::II; // <u^k, f> = <f>
                d.s = 0;
            } else {
                d.kase = IdealCase::V;
                d.i = k - c.s;
                d.s = 0;
            }
            break;
        case IdealCase::III:
            d.kase = IdealCase::III;
            d.i = k - c.i;
            d.t = k + c.t - 2 * c.i;
            d.omega = conj_omega(c.omega);
            break;
        case IdealCase::IV:
            if (c.t == 0) {
                d.kase = IdealCase::IV;
                d.i = c.i;
                d.t = 0;
            } else {
                d.kase = IdealCase::VI;
                d.i = c.i - c.t;
                d.s = k - c.i;
                d.t = 0;
            }
            d.omega = conj_omega(c.omega);
            break;
        case IdealCase::V:
            if (c.s == 0) {
                d.kase = IdealCase::II; // <u^k, u^{k-i} f> = <u^{k-i} f>
                d.s = k - c.i;
            } else {
                d.kase = IdealCase::V;
                d.i = k - c.s;
                d.s = k - c.i;
            }
            break;
        case IdealCase::VI:
            if (c.t == 0) {
                d.kase = IdealCase::IV;
                d.i = k - c.s;
                d.t = k - c.i - c.s;
            } else {
                d.kase = IdealCase::VI;
                d.i = k - c.s;
                d.s = k - c.i;
                d.t = k + c.t - c.i - c.s;
            }
            d.omega = conj_omega(c.omega);
            break;
    }
    validate(d);
    return d;
}

CyclicCode dual_code(const CyclicCode& c) {
    require_valid(c);
    const Decomposition& D = *c.decomp;
    std::vector<IdealDescriptor> parts(D.r());
    for (unsigned j = 0; j < D.r(); ++j)
        parts[D.rho[j]] = dual_part(D, j, c.parts[j]);
    return {c.decomp, std::move(parts)};
}

std::pair<unsigned, unsigned> euclidean_size_check(const CyclicCode& c) {
    return {code_log2(c), code_log2(dual_code(c))};
}

CodeEnumerator::CodeEnumerator(std::shared_ptr<const Decomposition> decomp)
    : decomp_(std::move(decomp)) {
    for (unsigned j = 0; j < decomp_->r(); ++j)
        streams_.emplace_back(decomp_->dj(j), decomp_->m, decomp_->k);
}

std::optional<CyclicCode> CodeEnumerator::next() {
    const unsigned r = decomp_->r();
    if (!started_) {
        current_.clear();
        for (unsigned j = 0; j < r; ++j) {
            auto d = streams_[j].next();
            if (!d) return std::nullopt;
            current_.push_back(std::move(*d));
        }
        started_ = true;
        return CyclicCode{decomp_, current_};
    }
    for (unsigned j = r; j-- > 0;) {
        if (auto d = streams_[j].next()) {
            current_[j] = std::move(*d);
            return CyclicCode{decomp_, current_};
        }
        streams_[j].reset();
        current_[j] = *streams_[j].next();
    }
    return std::nullopt;
}

namespace {

// Digits a in the residue field with a = e_j x^{2n-d_j} a(x^{-1}) mod f_j,
// sorted by encoding. The map is F_{2^m}-linear, so this is a kernel span.
std::vector<std::vector<fe_t>> admissible_digits(const Decomposition& D, unsigned j) {
    const unsigned d = D.dj(j);
    const FieldSpec& F = D.spec;
    std::vector<std::vector<fe_t>> columns;
    for (unsigned l = 0; l < d; ++l) {
        std::vector<fe_t> unit(d, 0);
        unit[l] = 1;
        std::vector<fe_t> image = conjugate_digit(D, j, unit);
        for (unsigned c = 0; c < d; ++c) image[c] ^= unit[c];
        columns.push_back(std::move(image));
    }
    std::vector<std::vector<fe_t>> basis = kernel_basis(columns, F);
    // Enumerate the span.
    std::vector<std::vector<fe_t>> span;
    std::vector<fe_t> coeffs(basis.size(), 0);
    const fe_t mask = static_cast<fe_t>(F.order() - 1);
    for (;;) {
        std::vector<fe_t> v(d, 0);
        for (std::size_t b = 0; b < basis.size(); ++b) {
            if (coeffs[b] == 0) continue;
            for (unsigned c = 0; c < d; ++c)
                v[c] ^= F.mul(coeffs[b], basis[b][c]);
        }
        span.push_back(std::move(v));
        std::size_t b = 0;
        for (; b < coeffs.size(); ++b) {
            coeffs[b] = (coeffs[b] + 1) & mask;
            if (coeffs[b] != 0) break;
        }
        if (b == coeffs.size()) break;
    }
    std::sort(span.begin(), span.end(),
              [](const auto& a, const auto& b) { return ResidueField::cmp(a, b) < 0; });
    return span;
}

// All omegas of the given precision with every digit drawn from S and digit 0
// nonzero, in lexicographic order (digit 0 most significant).
void append_omegas(std::vector<IdealDescriptor>& out, const IdealDescriptor& proto,
                   const std::vector<std::vector<fe_t>>& S, unsigned precision) {
    if (S.size() < 2) return; // only the zero digit satisfies the condition
    std::vector<std::size_t> idx(precision, 0);
    idx[0] = 1; // skip the zero digit in position 0
    for (;;) {
        IdealDescriptor d = proto;
        d.omega.clear();
        for (unsigned h = 0; h < precision; ++h) d.omega.push_back(S[idx[h]]);
        out.push_back(std::move(d));
        std::size_t h = precision;
        bool carried = false;
        while (h-- > 0) {
            if (++idx[h] < S.size()) {
                carried = true;
                break;
            }
            idx[h] = (h == 0) ? 1 : 0;
            if (h == 0) return; // digit 0 wrapped: done
        }
        if (!carried) return;
    }
}

} // namespace

std::vector<IdealDescriptor> selfdual_parts(const Decomposition& D, unsigned j) {
    if (j >= D.lambda)
        throw std::invalid_argument("selfdual_parts: index must be a fixed point of rho");
    const unsigned k = D.k;
    const unsigned dj = D.dj(j);
    const std::vector<std::vector<fe_t>> S = admissible_digits(D, j);
    std::vector<IdealDescriptor> out;
    IdealDescriptor proto;
    proto.dj = dj;
    proto.k = k;

    if (k % 2 == 0) {
        const unsigned half = k / 2;
        // <u^{k/2}>
        proto.kase = IdealCase::I;
        proto.i = half;
        out.push_back(proto);
        // <f>
        proto = {IdealCase::II, 0, 0, 0, {}, dj, k};
        out.push_back(proto);
        // <u^{k/2} + u^t f w>, w self-conjugate of precision k/2 - t
        for (unsigned t = 0; t < half; ++t)
            append_omegas(out, {IdealCase::III, half, 0, t, {}, dj, k}, S, half - t);
        // <u^i + f w>, i > k/2
        for (unsigned i = half + 1; i <= k - 1; ++i)
            append_omegas(out, {IdealCase::IV, i, 0, 0, {}, dj, k}, S, k - i);
        // <u^i, u^{k-i} f>, i > k/2
        for (unsigned i = half + 1; i <= k - 1; ++i)
            out.push_back({IdealCase::V, i, k - i, 0, {}, dj, k});
        // <u^i + u^t f w, u^{k-i} f>, i > k/2, 1 <= t < k-i
        for (unsigned i = half + 1; i <= k - 1; ++i)
            for (unsigned t = 1; t < k - i; ++t)
                append_omegas(out, {IdealCase::VI, i, k - i, t, {}, dj, k}, S, k - i - t);
    } else {
        const unsigned lo = (k + 1) / 2;
        proto = {IdealCase::II, 0, 0, 0, {}, dj, k};
        out.push_back(proto);
        for (unsigned i = lo; i <= k - 1; ++i)
            append_omegas(out, {IdealCase::IV, i, 0, 0, {}, dj, k}, S, k - i);
        for (unsigned i = lo; i <= k - 1; ++i)
            out.push_back({IdealCase::V, i, k - i, 0, {}, dj, k});
        for (unsigned i = lo; i <= k - 1; ++i)
            for (unsigned t = 1; t < k - i; ++t)
                append_omegas(out, {IdealCase::VI, i, k - i, t, {}, dj, k}, S, k - i - t);
    }
    return out;
}

SelfDualEnumerator::SelfDualEnumerator(std::shared_ptr<const Decomposition> decomp)
    : decomp_(std::move(decomp)) {
    for (unsigned j = 0; j < decomp_->lambda; ++j)
        fixed_choices_.push_back(selfdual_parts(*decomp_, j));
    fixed_index_.assign(decomp_->lambda, 0);
    for (unsigned l = 0; l < decomp_->eps_pairs; ++l)
        pair_streams_.emplace_back(decomp_->dj(decomp_->lambda + l), decomp_->m,
                                   decomp_->k);
    for (const auto& choices : fixed_choices_)
        if (choices.empty()) done_ = true;
}

std::optional<CyclicCode> SelfDualEnumerator::next() {
    if (done_) return std::nullopt;
    const Decomposition& D = *decomp_;
    if (!started_) {
        pair_current_.clear();
        for (auto& st : pair_streams_) {
            auto d = st.next();
            if (!d) return std::nullopt;
            pair_current_.push_back(std::move(*d));
        }
        started_ = true;
    } else {
        // Odometer: pair streams fastest (last first), then fixed indices.
        bool advanced = false;
        for (unsigned l = D.eps_pairs; l-- > 0 && !advanced;) {
            if (auto d = pair_streams_[l].next()) {
                pair_current_[l] = std::move(*d);
                advanced = true;
            } else {
                pair_streams_[l].reset();
                pair_current_[l] = *pair_streams_[l].next();
            }
        }
        for (unsigned j = D.lambda; j-- > 0 && !advanced;) {
            if (++fixed_index_[j] < fixed_choices_[j].size()) {
                advanced = true;
            } else {
                fixed_index_[j] = 0;
            }
        }
        if (!advanced) {
            done_ = true;
            return std::nullopt;
        }
    }
    std::vector<IdealDescriptor> parts(D.r());
    for (unsigned j = 0; j < D.lambda; ++j)
        parts[j] = fixed_choices_[j][fixed_index_[j]];
    for (unsigned l = 0; l < D.eps_pairs; ++l) {
        const unsigned j = D.lambda + l;
        parts[j] = pair_current_[l];
        parts[D.rho[j]] = dual_part(D, j, pair_current_[l]);
    }
    return CyclicCode{decomp_, std::move(parts)};
}

BigInt selfdual_count(const Decomposition& D) {
    BigInt total = 1;
    for (unsigned j = 0; j < D.lambda; ++j) {
        const BigInt S = static_cast<std::uint64_t>(admissible_digits(D, j).size());
        const unsigned k = D.k;
        auto units = [&](unsigned precision) {
            return (S - 1) * boost::multiprecision::pow(S, precision - 1);
        };
        BigInt a = 0;
        if (k % 2 == 0) {
            const unsigned half = k / 2;
            a += 1; // <u^{k/2}>
            a += 1; // <f>
            for (unsigned t = 0; t < half; ++t) a += units(half - t);
            for (unsigned i = half + 1; i <= k - 1; ++i) a += units(k - i);
            a += (k >= half + 2) ? (k - 1 - half) : 0;
            for (unsigned i = half + 1; i <= k - 1; ++i)
                for (unsigned t = 1; t < k - i; ++t) a += units(k - i - t);
        } else {
            const unsigned lo = (k + 1) / 2;
            a += 1; // <f>
            for (unsigned i = lo; i <= k - 1; ++i) a += units(k - i);
            a += (k >= lo + 1) ? (k - lo) : 0;
            for (unsigned i = lo; i <= k - 1; ++i)
                for (unsigned t = 1; t < k - i; ++t) a += units(k - i - t);
        }
        total *= a;
    }
    for (unsigned l = 0; l < D.eps_pairs; ++l)
        total *= count_ideals(1ull << (D.m * D.dj(D.lambda + l)), D.k);
    return total;
}

std::vector<Codeword> expand_codewords(const CyclicCode& c,
                                       std::optional<std::uint64_t> limit) {
    require_valid(c);
    const Decomposition& D = *c.decomp;
    if (!limit && code_log2(c) > 24)
        throw std::invalid_argument("expand_codewords: code too large without a limit");
    if (limit && *limit == 0) return {};

    // Per part: every element of the ideal, already embedded through eps_j.
    std::vector<std::vector<Codeword>> contribs;
    for (unsigned j = 0; j < D.r(); ++j) {
        ComponentRing ring(D.fact.factors[j], D.k);
        std::vector<ComponentRing::Elem> gens = generators(c.parts[j], ring);
        std::vector<ComponentRing::Elem> basis = ring.ideal_basis(gens);
        if (static_cast<unsigned>(basis.size()) * D.m != card_log2(c.parts[j], D.m))
            throw std::logic_error("expand_codewords: ideal dimension mismatch");
        std::vector<Codeword> elems;
        const FieldSpec& F = D.spec;
        const fe_t mask = static_cast<fe_t>(F.order() - 1);
        std::vector<fe_t> coeffs(basis.size(), 0);
        for (;;) {
            ComponentRing::Elem e = ring.zero();
            for (std::size_t b = 0; b < basis.size(); ++b) {
                if (coeffs[b] == 0) continue;
                for (std::size_t p = 0; p < e.size(); ++p)
                    e[p] ^= F.mul(coeffs[b], basis[b][p]);
            }
            elems.push_back(embed_component(D, j, ring.to_digits(e)));
            std::size_t b = 0;
            for (; b < coeffs.size(); ++b) {
                coeffs[b] = (coeffs[b] + 1) & mask;
                if (coeffs[b] != 0) break;
            }
            if (b == coeffs.size()) break;
        }
        contribs.push_back(std::move(elems));
    }

    std::vector<Codeword> out;
    std::vector<std::size_t> idx(contribs.size(), 0);
    for (;;) {
        Codeword w = zero_codeword(D);
        for (std::size_t j = 0; j < contribs.size(); ++j)
            xor_into(w, contribs[j][idx[j]]);
        out.push_back(std::move(w));
        if (limit && out.size() >= *limit) return out;
        std::size_t j = contribs.size();
        bool advanced = false;
        while (j-- > 0) {
            if (++idx[j] < contribs[j].size()) {
                advanced = true;
                break;
            }
            idx[j] = 0;
        }
        if (!advanced) return out;
    }
}

bool contains(const CyclicCode& c, const Codeword& w) {
    require_valid(c);
    const Decomposition& D = *c.decomp;
    if (w.entries.size() != 2 * D.n)
        throw std::invalid_argument("contains: codeword length mismatch");
    const Polynomial mod = x2n_modulus(D);
    // u-digit polynomials of w.
    std::vector<Polynomial> wdigits;
    for (unsigned l = 0; l < D.k; ++l) {
        std::vector<fe_t> coeffs(2 * D.n, 0);
        for (unsigned i = 0; i < 2 * D.n; ++i) coeffs[i] = w.entries[i][l];
        wdigits.emplace_back(D.spec, std::move(coeffs));
    }
    for (unsigned j = 0; j < D.r(); ++j) {
        ComponentRing ring(D.fact.factors[j], D.k);
        std::vector<ComponentRing::Elem> basis =
            ring.ideal_basis(generators(c.parts[j], ring));
        // Component of w at factor j, pulled back to K_j[u]/<u^k>.
        std::vector<Polynomial> digits;
        for (unsigned l = 0; l < D.k; ++l)
            digits.push_back(poly_mod(poly_mod(poly_mul(D.idempotents[j], wdigits[l]), mod),
                                      ring.f_squared()));
        if (!ring.in_span(basis, ring.from_digits(digits))) return false;
    }
    return true;
}

std::vector<Codeword> generating_codewords(const CyclicCode& c) {
    require_valid(c);
    const Decomposition& D = *c.decomp;
    std::vector<Codeword> out;
    for (unsigned j = 0; j < D.r(); ++j) {
        ComponentRing ring(D.fact.factors[j], D.k);
        for (const ComponentRing::Elem& g : generators(c.parts[j], ring)) {
            Codeword base = embed_component(D, j, ring.to_digits(g));
            Codeword cur = base;
            for (unsigned a = 0; a < 2 * D.n; ++a) {
                out.push_back(cur);
                cur = xshift(cur);
            }
        }
    }
    return out;
}

std::vector<fe_t> inner_product(const Codeword& a, const Codeword& b,
                                const FieldSpec& spec) {
    if (a.entries.size() != b.entries.size())
        throw std::invalid_argument("inner_product: length mismatch");
    if (a.entries.empty()) return {};
    const unsigned k = static_cast<unsigned>(a.entries[0].size());
    std::vector<fe_t> acc(k, 0);
    for (std::size_t i = 0; i < a.entries.size(); ++i)
        for (unsigned p = 0; p < k; ++p) {
            if (a.entries[i][p] == 0) continue;
            for (unsigned q = 0; p + q < k; ++q)
                acc[p + q] ^= spec.mul(a.entries[i][p], b.entries[i][q]);
        }
    return acc;
}

} // namespace ccc
