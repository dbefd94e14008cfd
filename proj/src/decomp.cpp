#include "ccc/decomp.hpp"

#include <algorithm>
#include <stdexcept>

namespace ccc {

ReciprocalArrangement reciprocal_permutation(const Factorization& fact) {
    const unsigned r = static_cast<unsigned>(fact.factors.size());
    std::vector<unsigned> partner(r);
    std::vector<fe_t> unit(r);
    for (unsigned a = 0; a < r; ++a) {
        ReciprocalResult rec = reciprocal(fact.factors[a]);
        bool found = false;
        for (unsigned b = 0; b < r; ++b) {
            if (fact.factors[b] == rec.monic) {
                partner[a] = b;
                unit[a] = rec.unit;
                found = true;
                break;
            }
        }
        if (!found)
            throw std::logic_error("reciprocal_permutation: factor set not closed");
    }

    ReciprocalArrangement out;
    std::vector<std::pair<unsigned, unsigned>> pairs;
    for (unsigned a = 0; a < r; ++a) {
        if (partner[a] == a) {
            out.order.push_back(a);
        } else if (a < partner[a]) {
            pairs.emplace_back(a, partner[a]);
        }
    }
    out.lambda = static_cast<unsigned>(out.order.size());
    out.eps_pairs = static_cast<unsigned>(pairs.size());
    for (const auto& p : pairs) out.order.push_back(p.first);
    for (const auto& p : pairs) out.order.push_back(p.second);

    out.rho.resize(r);
    for (unsigned j = 0; j < out.lambda; ++j) out.rho[j] = j;
    for (unsigned l = 0; l < out.eps_pairs; ++l) {
        out.rho[out.lambda + l] = out.lambda + out.eps_pairs + l;
        out.rho[out.lambda + out.eps_pairs + l] = out.lambda + l;
    }
    out.e.resize(r);
    for (unsigned j = 0; j < r; ++j) out.e[j] = unit[out.order[j]];
    return out;
}

namespace {

void verify_idempotent_identities(const Decomposition& D) {
    const FieldSpec& F = D.spec;
    const Polynomial mod =
        poly_add(Polynomial::monomial(F, 2 * D.n), Polynomial::one(F));
    Polynomial sum = Polynomial::zero(F);
    for (unsigned j = 0; j < D.r(); ++j) {
        sum = poly_add(sum, D.idempotents[j]);
        Polynomial sq = poly_mod(poly_mul(D.idempotents[j], D.idempotents[j]), mod);
        if (!(sq == D.idempotents[j]))
            throw std::logic_error("idempotent check: eps_j^2 != eps_j");
        for (unsigned l = j + 1; l < D.r(); ++l) {
            Polynomial prod =
                poly_mod(poly_mul(D.idempotents[j], D.idempotents[l]), mod);
            if (!prod.is_zero())
                throw std::logic_error("idempotent check: eps_j * eps_l != 0");
        }
    }
    if (!(sum == Polynomial::one(F)))
        throw std::logic_error("idempotent check: sum of eps_j != 1");
}

} // namespace

Decomposition compute_idempotents(const Factorization& fact, unsigned k) {
    if (k < 2) throw std::invalid_argument("compute_idempotents: k must be >= 2");
    const FieldSpec& F = fact.spec;
    ReciprocalArrangement arr = reciprocal_permutation(fact);

    Decomposition D;
    D.m = F.m();
    D.n = fact.n;
    D.k = k;
    D.spec = F;
    D.fact.n = fact.n;
    D.fact.spec = F;
    for (unsigned j = 0; j < fact.factors.size(); ++j) {
        D.fact.factors.push_back(fact.factors[arr.order[j]]);
        D.fact.degrees.push_back(fact.degrees[arr.order[j]]);
    }
    D.rho = arr.rho;
    D.e = arr.e;
    D.lambda = arr.lambda;
    D.eps_pairs = arr.eps_pairs;

    const Polynomial mod =
        poly_add(Polynomial::monomial(F, 2 * D.n), Polynomial::one(F));
    for (const Polynomial& f : D.fact.factors) {
        const Polynomial fsq = poly_mul(f, f);
        auto [Fj, rem] = poly_divmod(mod, fsq);
        if (!rem.is_zero())
            throw std::logic_error("compute_idempotents: f_j^2 does not divide x^{2n}-1");
        Egcd bez = extended_gcd(Fj, fsq);
        if (!(bez.g == Polynomial::one(F)))
            throw std::logic_error("compute_idempotents: gcd(F_j, f_j^2) != 1");
        D.idempotents.push_back(poly_mod(poly_mul(bez.s, Fj), mod));
    }

    verify_idempotent_identities(D);
    return D;
}

Decomposition decompose(unsigned m, unsigned n, unsigned k) {
    return decompose(n, k, FieldSpec::standard(m));
}

Decomposition decompose(unsigned n, unsigned k, const FieldSpec& spec) {
    return compute_idempotents(factor_xn_minus_1(n, spec), k);
}

RingElementMatrix psi_forward(const std::vector<std::vector<fe_t>>& coeffs,
                              unsigned two_n, unsigned k) {
    if (coeffs.size() != two_n)
        throw std::invalid_argument("psi_forward: expected 2n coefficients");
    RingElementMatrix mat(two_n, std::vector<fe_t>(k, 0));
    for (unsigned i = 0; i < two_n; ++i) {
        if (coeffs[i].size() != k)
            throw std::invalid_argument("psi_forward: coefficient needs k u-digits");
        for (unsigned l = 0; l < k; ++l) mat[i][l] = coeffs[i][l];
    }
    return mat;
}

std::vector<std::vector<fe_t>> psi_backward(const RingElementMatrix& mat) {
    return mat;
}

Polynomial varrho(const Polynomial& a, unsigned two_n) {
    if (a.degree() >= static_cast<int>(two_n))
        throw std::invalid_argument("varrho: degree must be < 2n");
    std::vector<fe_t> out(two_n, 0);
    for (int i = 0; i <= a.degree(); ++i)
        out[(two_n - i) % two_n] ^= a.coeff(i);
    return Polynomial(a.spec(), std::move(out));
}

} // namespace ccc
