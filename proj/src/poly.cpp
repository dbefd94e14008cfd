#include "ccc/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace ccc {

Polynomial::Polynomial(FieldSpec spec, std::vector<fe_t> coeffs)
    : spec_(spec), c_(std::move(coeffs)) {
    strip();
}

void Polynomial::strip() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial Polynomial::one(const FieldSpec& spec) {
    return Polynomial(spec, {1});
}

Polynomial Polynomial::monomial(const FieldSpec& spec, unsigned deg, fe_t c) {
    std::vector<fe_t> v(deg + 1, 0);
    v[deg] = c;
    return Polynomial(spec, std::move(v));
}

Polynomial Polynomial::from_bits(const FieldSpec& spec, std::uint64_t bits) {
    if (spec.m() != 1)
        throw std::invalid_argument("from_bits: only defined for m = 1");
    std::vector<fe_t> v;
    for (unsigned i = 0; (bits >> i) != 0; ++i) v.push_back((bits >> i) & 1u);
    return Polynomial(spec, std::move(v));
}

namespace {
void require_same_spec(const Polynomial& a, const Polynomial& b) {
    if (!(a.spec() == b.spec()))
        throw std::invalid_argument("poly op: mismatched FieldSpec");
}
} // namespace

Polynomial poly_add(const Polynomial& a, const Polynomial& b) {
    require_same_spec(a, b);
    std::vector<fe_t> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = a.coeff(i) ^ b.coeff(i);
    return Polynomial(a.spec(), std::move(c));
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
    require_same_spec(a, b);
    if (a.is_zero() || b.is_zero()) return Polynomial::zero(a.spec());
    const FieldSpec& F = a.spec();
    std::vector<fe_t> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        const fe_t ai = a.coeffs()[i];
        if (ai == 0) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            c[i + j] ^= F.mul(ai, b.coeffs()[j]);
    }
    return Polynomial(F, std::move(c));
}

std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a, const Polynomial& b) {
    require_same_spec(a, b);
    if (b.is_zero()) throw std::invalid_argument("poly_divmod: division by zero");
    const FieldSpec& F = a.spec();
    if (a.degree() < b.degree()) return {Polynomial::zero(F), a};
    std::vector<fe_t> r = a.coeffs();
    std::vector<fe_t> q(a.degree() - b.degree() + 1, 0);
    const fe_t lead_inv = F.inv(b.lead());
    for (int d = static_cast<int>(r.size()) - 1; d >= b.degree(); --d) {
        if (r[d] == 0) continue;
        const fe_t f = F.mul(r[d], lead_inv);
        const int off = d - b.degree();
        q[off] = f;
        for (std::size_t i = 0; i < b.coeffs().size(); ++i)
            r[off + i] ^= F.mul(f, b.coeffs()[i]);
    }
    return {Polynomial(F, std::move(q)), Polynomial(F, std::move(r))};
}

Polynomial poly_mod(const Polynomial& a, const Polynomial& b) {
    return poly_divmod(a, b).second;
}

Polynomial scale(const Polynomial& a, fe_t c) {
    const FieldSpec& F = a.spec();
    std::vector<fe_t> v = a.coeffs();
    for (fe_t& x : v) x = F.mul(x, c);
    return Polynomial(F, std::move(v));
}

Polynomial make_monic(const Polynomial& a) {
    if (a.is_zero() || a.is_monic()) return a;
    return scale(a, a.spec().inv(a.lead()));
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial r0 = a, r1 = b;
    while (!r1.is_zero()) {
        Polynomial r2 = poly_mod(r0, r1);
        r0 = r1;
        r1 = r2;
    }
    return make_monic(r0);
}

Egcd extended_gcd(const Polynomial& a, const Polynomial& b) {
    require_same_spec(a, b);
    if (a.is_zero() && b.is_zero())
        throw std::invalid_argument("extended_gcd: both arguments zero");
    const FieldSpec& F = a.spec();
    Polynomial r0 = a, r1 = b;
    Polynomial s0 = Polynomial::one(F), s1 = Polynomial::zero(F);
    Polynomial t0 = Polynomial::zero(F), t1 = Polynomial::one(F);
    while (!r1.is_zero()) {
        auto [q, r2] = poly_divmod(r0, r1);
        r0 = r1;
        r1 = r2;
        Polynomial s2 = poly_add(s0, poly_mul(q, s1));
        s0 = s1;
        s1 = s2;
        Polynomial t2 = poly_add(t0, poly_mul(q, t1));
        t0 = t1;
        t1 = t2;
    }
    const fe_t u = F.inv(r0.lead());
    return {scale(r0, u), scale(s0, u), scale(t0, u)};
}

int poly_cmp(const Polynomial& a, const Polynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (int i = a.degree(); i >= 0; --i) {
        const fe_t ca = a.coeff(i), cb = b.coeff(i);
        if (ca != cb) return ca < cb ? -1 : 1;
    }
    return 0;
}

std::string to_string(const Polynomial& a) {
    if (a.is_zero()) return "0";
    std::string out;
    for (int i = a.degree(); i >= 0; --i) {
        const fe_t c = a.coeff(i);
        if (c == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(c);
        } else {
            if (c != 1) out += std::to_string(c) + "*";
            out += (i == 1) ? "x" : "x^" + std::to_string(i);
        }
    }
    return out;
}

std::vector<std::vector<unsigned>> cyclotomic_cosets(unsigned n, std::uint64_t q) {
    std::vector<std::vector<unsigned>> cosets;
    std::vector<bool> seen(n, false);
    const std::uint64_t qm = q % n;
    for (unsigned c = 0; c < n; ++c) {
        if (seen[c]) continue;
        std::vector<unsigned> coset;
        unsigned v = c;
        do {
            seen[v] = true;
            coset.push_back(v);
            v = static_cast<unsigned>((static_cast<std::uint64_t>(v) * qm) % n);
        } while (v != c);
        std::sort(coset.begin(), coset.end());
        cosets.push_back(std::move(coset));
    }
    return cosets;
}

namespace {

std::vector<unsigned> prime_factors(std::uint64_t v) {
    std::vector<unsigned> out;
    for (std::uint64_t p = 2; p * p <= v; ++p) {
        if (v % p == 0) {
            out.push_back(static_cast<unsigned>(p));
            while (v % p == 0) v /= p;
        }
    }
    if (v > 1) out.push_back(static_cast<unsigned>(v));
    return out;
}

std::uint64_t mul_order(std::uint64_t q, std::uint64_t n) {
    std::uint64_t v = q % n, ord = 1;
    while (v != 1) {
        v = (v * (q % n)) % n;
        ++ord;
        if (ord > n) throw std::logic_error("mul_order: q not invertible mod n");
    }
    return ord;
}

// (2^M - 1) / n as exponent bits, most significant first. Exact by choice of M.
std::vector<bool> pow2m1_div_msb(unsigned M, std::uint64_t n) {
    std::vector<bool> bits;
    bits.reserve(M);
    std::uint64_t rem = 0;
    for (unsigned i = 0; i < M; ++i) {
        rem = rem * 2 + 1;
        if (rem >= n) {
            bits.push_back(true);
            rem -= n;
        } else {
            bits.push_back(false);
        }
    }
    if (rem != 0) throw std::logic_error("pow2m1_div_msb: n does not divide 2^M - 1");
    return bits;
}

Polynomial mulmod(const Polynomial& a, const Polynomial& b, const Polynomial& h) {
    return poly_mod(poly_mul(a, b), h);
}

Polynomial powmod_u64(Polynomial base, std::uint64_t e, const Polynomial& h) {
    Polynomial r = Polynomial::one(h.spec());
    while (e != 0) {
        if (e & 1u) r = mulmod(r, base, h);
        base = mulmod(base, base, h);
        e >>= 1;
    }
    return r;
}

Polynomial powmod_bits(const Polynomial& base, const std::vector<bool>& e_msb,
                       const Polynomial& h) {
    Polynomial r = Polynomial::one(h.spec());
    for (bool bit : e_msb) {
        r = mulmod(r, r, h);
        if (bit) r = mulmod(r, base, h);
    }
    return r;
}

// y^{2^count} mod h by repeated squaring.
Polynomial frobenius_power(const Polynomial& y, unsigned count, const Polynomial& h) {
    Polynomial r = y;
    for (unsigned i = 0; i < count; ++i) r = mulmod(r, r, h);
    return r;
}

// Rabin test for monic h of degree D over F_{2^m}.
bool irreducible_over_fq(const Polynomial& h) {
    const FieldSpec& F = h.spec();
    const unsigned D = static_cast<unsigned>(h.degree());
    const unsigned M = F.m() * D;
    const Polynomial y = Polynomial::monomial(F, 1);
    if (!(frobenius_power(y, M, h) == poly_mod(y, h))) return false;
    for (unsigned p : prime_factors(D)) {
        Polynomial g = poly_gcd(poly_add(frobenius_power(y, M / p, h), y), h);
        if (g.degree() > 0) return false;
    }
    return true;
}

// Element of degree < deg with coefficients drawn from a counter in base 2^m.
Polynomial element_from_counter(const FieldSpec& F, unsigned deg, std::uint64_t c) {
    std::vector<fe_t> v(deg, 0);
    const std::uint64_t mask = F.order() - 1;
    for (unsigned i = 0; i < deg && c != 0; ++i) {
        v[i] = static_cast<fe_t>(c & mask);
        c >>= F.m();
    }
    return Polynomial(F, std::move(v));
}

// Monic candidate of the given degree with counter-driven lower coefficients.
Polynomial candidate_from_counter(const FieldSpec& F, unsigned deg, std::uint64_t c) {
    std::vector<fe_t> v = element_from_counter(F, deg, c).coeffs();
    v.resize(deg + 1, 0);
    v[deg] = 1;
    return Polynomial(F, std::move(v));
}

// First monic irreducible of degree D over F_{2^m} in counter order.
Polynomial find_irreducible_over_fq(const FieldSpec& F, unsigned D) {
    if (D == 1) return Polynomial(F, {1, 1});
    for (std::uint64_t c = 1;; c += 2) { // odd counter: nonzero constant term
        Polynomial h = candidate_from_counter(F, D, c);
        if (irreducible_over_fq(h)) return h;
        if (c > (1u << 20))
            throw std::logic_error("find_irreducible_over_fq: sieve exhausted");
    }
}

// Element of multiplicative order exactly n in F_{2^m}[y]/<h>.
Polynomial find_nth_root(const Polynomial& h, unsigned n) {
    const FieldSpec& F = h.spec();
    const unsigned D = static_cast<unsigned>(h.degree());
    const unsigned M = F.m() * D;
    const std::vector<bool> exp_bits = pow2m1_div_msb(M, n);
    const std::vector<unsigned> pf = prime_factors(n);
    for (std::uint64_t c = 2;; ++c) {
        Polynomial cand = element_from_counter(F, D, c);
        if (cand.is_zero()) continue;
        Polynomial alpha = powmod_bits(cand, exp_bits, h);
        if (!(powmod_u64(alpha, n, h) == Polynomial::one(F))) continue;
        bool exact = true;
        for (unsigned p : pf) {
            if (powmod_u64(alpha, n / p, h) == Polynomial::one(F)) {
                exact = false;
                break;
            }
        }
        if (exact) return alpha;
        if (c > (1u << 24)) throw std::logic_error("find_nth_root: search exhausted");
    }
}

} // namespace

Factorization factor_xn_minus_1(unsigned n, const FieldSpec& spec) {
    if (n == 0 || n % 2 == 0)
        throw std::invalid_argument("factor_xn_minus_1: n must be odd and positive");
    Factorization out;
    out.n = n;
    out.spec = spec;
    if (n == 1) {
        out.factors.push_back(Polynomial(spec, {1, 1}));
        out.degrees.push_back(1);
        return out;
    }

    const std::uint64_t q = spec.order();
    const auto cosets = cyclotomic_cosets(n, q);
    const unsigned D = static_cast<unsigned>(mul_order(q, n));
    const Polynomial h = find_irreducible_over_fq(spec, D);
    const Polynomial alpha = find_nth_root(h, n);

    std::vector<Polynomial> alpha_pow;
    alpha_pow.reserve(n);
    alpha_pow.push_back(Polynomial::one(spec));
    for (unsigned i = 1; i < n; ++i)
        alpha_pow.push_back(mulmod(alpha_pow.back(), alpha, h));

    for (const auto& coset : cosets) {
        // Minimal polynomial: product of (Y + alpha^i) over the coset, with
        // coefficients accumulated in the splitting field.
        std::vector<Polynomial> mp = {Polynomial::one(spec)};
        for (unsigned i : coset) {
            std::vector<Polynomial> next(mp.size() + 1, Polynomial::zero(spec));
            for (std::size_t l = 0; l < mp.size(); ++l) {
                next[l + 1] = poly_add(next[l + 1], mp[l]);
                next[l] = poly_add(next[l], mulmod(alpha_pow[i], mp[l], h));
            }
            mp = std::move(next);
        }
        std::vector<fe_t> coeffs(mp.size(), 0);
        for (std::size_t l = 0; l < mp.size(); ++l) {
            if (mp[l].degree() > 0)
                throw std::logic_error("factor_xn_minus_1: coefficient escaped base field");
            coeffs[l] = mp[l].constant();
        }
        Polynomial f(spec, std::move(coeffs));
        if (!f.is_monic() || f.degree() != static_cast<int>(coset.size()))
            throw std::logic_error("factor_xn_minus_1: malformed minimal polynomial");
        out.factors.push_back(std::move(f));
    }

    std::sort(out.factors.begin(), out.factors.end(),
              [](const Polynomial& a, const Polynomial& b) { return poly_cmp(a, b) < 0; });
    for (const Polynomial& f : out.factors)
        out.degrees.push_back(static_cast<unsigned>(f.degree()));

    // Self-check: the factors multiply back to x^n - 1.
    Polynomial prod = Polynomial::one(spec);
    for (const Polynomial& f : out.factors) prod = poly_mul(prod, f);
    Polynomial target = poly_add(Polynomial::monomial(spec, n), Polynomial::one(spec));
    if (!(prod == target))
        throw std::logic_error("factor_xn_minus_1: product check failed");
    return out;
}

ReciprocalResult reciprocal(const Polynomial& f) {
    if (f.is_zero() || f.constant() == 0)
        throw std::invalid_argument("reciprocal: zero constant term");
    const unsigned d = static_cast<unsigned>(f.degree());
    std::vector<fe_t> rev(d + 1, 0);
    for (unsigned i = 0; i <= d; ++i) rev[d - i] = f.coeff(i);
    Polynomial tilde(f.spec(), std::move(rev));
    const fe_t e = tilde.lead(); // equals f(0)
    return {scale(tilde, f.spec().inv(e)), e};
}

} // namespace ccc
