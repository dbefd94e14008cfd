#include "ccc/ideals.hpp"

#include <algorithm>
#include <stdexcept>

namespace ccc {

BigInt bigint_pow(std::uint64_t base, unsigned exp) {
    BigInt r = 1, b = base;
    while (exp != 0) {
        if (exp & 1u) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

const char* to_string(IdealCase c) {
    switch (c) {
        case IdealCase::I: return "I";
        case IdealCase::II: return "II";
        case IdealCase::III: return "III";
        case IdealCase::IV: return "IV";
        case IdealCase::V: return "V";
        case IdealCase::VI: return "VI";
    }
    throw std::logic_error("to_string: bad IdealCase");
}

IdealCase ideal_case_from_string(const std::string& s) {
    if (s == "I") return IdealCase::I;
    if (s == "II") return IdealCase::II;
    if (s == "III") return IdealCase::III;
    if (s == "IV") return IdealCase::IV;
    if (s == "V") return IdealCase::V;
    if (s == "VI") return IdealCase::VI;
    throw std::invalid_argument("ideal_case_from_string: unknown case " + s);
}

bool IdealDescriptor::operator==(const IdealDescriptor& o) const {
    if (kase != o.kase || dj != o.dj || k != o.k) return false;
    switch (kase) {
        case IdealCase::I: return i == o.i;
        case IdealCase::II: return s == o.s;
        case IdealCase::III:
        case IdealCase::IV: return i == o.i && t == o.t && omega == o.omega;
        case IdealCase::V: return i == o.i && s == o.s;
        case IdealCase::VI:
            return i == o.i && s == o.s && t == o.t && omega == o.omega;
    }
    return false;
}

namespace {

bool omega_is_unit(const std::vector<std::vector<fe_t>>& omega) {
    if (omega.empty()) return false;
    for (fe_t c : omega[0])
        if (c != 0) return true;
    return false;
}

} // namespace

void validate(const IdealDescriptor& d) {
    const unsigned k = d.k;
    if (d.dj < 1 || k < 1) throw std::invalid_argument("descriptor: bad dj/k");
    auto check_omega = [&](unsigned precision) {
        if (d.omega.size() != precision)
            throw std::invalid_argument("descriptor: omega precision mismatch");
        for (const auto& digit : d.omega)
            if (digit.size() != d.dj)
                throw std::invalid_argument("descriptor: omega digit width mismatch");
        if (!omega_is_unit(d.omega))
            throw std::invalid_argument("descriptor: omega must be a unit");
    };
    switch (d.kase) {
        case IdealCase::I:
            if (d.i > k) throw std::invalid_argument("case I: need 0 <= i <= k");
            break;
        case IdealCase::II:
            if (d.s > k - 1) throw std::invalid_argument("case II: need 0 <= s <= k-1");
            break;
        case IdealCase::III:
            if (!(d.t < d.i && d.i <= k - 1))
                throw std::invalid_argument("case III: need 0 <= t < i <= k-1");
            if (static_cast<int>(d.t) < 2 * static_cast<int>(d.i) - static_cast<int>(k))
                throw std::invalid_argument("case III: need t >= 2i-k");
            check_omega(d.i - d.t);
            break;
        case IdealCase::IV:
            if (!(d.t < d.i && d.i <= k - 1))
                throw std::invalid_argument("case IV: need 0 <= t < i <= k-1");
            if (static_cast<int>(d.t) >= 2 * static_cast<int>(d.i) - static_cast<int>(k))
                throw std::invalid_argument("case IV: need t < 2i-k");
            check_omega(k - d.i);
            break;
        case IdealCase::V:
            if (!(d.s < d.i && d.i <= k - 1))
                throw std::invalid_argument("case V: need 0 <= s < i <= k-1");
            break;
        case IdealCase::VI:
            if (!(d.t < d.s && d.s < d.i && d.i <= k - 1))
                throw std::invalid_argument("case VI: need 0 <= t < s < i <= k-1");
            if (d.i + d.s > k + d.t - 1)
                throw std::invalid_argument("case VI: need i+s <= k+t-1");
            check_omega(d.s - d.t);
            break;
    }
}

BigInt omega1(std::uint64_t q, unsigned k) {
    const BigInt qb = q;
    BigInt num;
    if (k % 2 == 0) {
        num = bigint_pow(q, k / 2 + 1) + bigint_pow(q, k / 2) - 2;
    } else {
        num = 2 * (bigint_pow(q, (k + 1) / 2) - 1);
    }
    if (num % (qb - 1) != 0) throw std::logic_error("omega1: inexact division");
    return num / (qb - 1) - (k + 1);
}

BigInt omega2(std::uint64_t q, unsigned k) {
    const unsigned lo = (k % 2 == 0) ? k / 2 + 1 : (k + 1) / 2;
    BigInt sum = 0;
    for (unsigned i = lo; i + 1 <= k; ++i)
        sum += BigInt(2 * i - k) * bigint_pow(q, k - i - 1);
    return (BigInt(q) - 1) * sum;
}

BigInt gamma_count(std::uint64_t q, unsigned k) {
    if (k < 1) throw std::invalid_argument("gamma_count: k must be >= 1");
    if (k <= 3) return 0;
    BigInt g = 1; // value at 4
    for (unsigned rho = 5; rho <= k; ++rho) {
        BigInt add = 0;
        for (unsigned s = 1; s + 1 <= rho / 2; ++s)
            add += BigInt(rho - 2 * s - 1) * bigint_pow(q, s - 1);
        g += add;
    }
    return g;
}

BigInt count_ideals(std::uint64_t q, unsigned k) {
    return 1 + BigInt(k) * (k + 3) / 2 + omega1(q, k) + omega2(q, k) +
           (BigInt(q) - 1) * gamma_count(q, k);
}

unsigned card_log2(const IdealDescriptor& d, unsigned m) {
    const unsigned md = m * d.dj;
    switch (d.kase) {
        case IdealCase::I: return 2 * md * (d.k - d.i);
        case IdealCase::II: return md * (d.k - d.s);
        case IdealCase::III: return 2 * md * (d.k - d.i);
        case IdealCase::IV: return md * (d.k - d.t);
        case IdealCase::V: return md * (2 * d.k - (d.i + d.s));
        case IdealCase::VI: return md * (2 * d.k - (d.i + d.s));
    }
    throw std::logic_error("card_log2: bad IdealCase");
}

IdealEnumerator::IdealEnumerator(unsigned dj, unsigned m, unsigned k)
    : dj_(dj), m_(m), k_(k) {
    if (dj < 1 || m < 1 || k < 2)
        throw std::invalid_argument("IdealEnumerator: need dj >= 1, m >= 1, k >= 2");
    for (unsigned i = 0; i <= k; ++i)
        frames_.push_back({IdealCase::I, i, 0, 0, 0});
    for (unsigned s = 0; s <= k - 1; ++s)
        frames_.push_back({IdealCase::II, 0, s, 0, 0});
    for (unsigned i = 1; i <= k - 1; ++i) {
        const int tmin = std::max(0, 2 * static_cast<int>(i) - static_cast<int>(k));
        for (unsigned t = static_cast<unsigned>(tmin); t < i; ++t)
            frames_.push_back({IdealCase::III, i, 0, t, i - t});
    }
    for (unsigned i = 1; i <= k - 1; ++i) {
        const int tmax = 2 * static_cast<int>(i) - static_cast<int>(k); // exclusive
        for (unsigned t = 0; static_cast<int>(t) < tmax && t < i; ++t)
            frames_.push_back({IdealCase::IV, i, 0, t, k - i});
    }
    for (unsigned i = 1; i <= k - 1; ++i)
        for (unsigned s = 0; s < i; ++s)
            frames_.push_back({IdealCase::V, i, s, 0, 0});
    for (unsigned i = 2; i <= k - 1; ++i)
        for (unsigned s = 1; s < i; ++s) {
            const int tmin = std::max(0, static_cast<int>(i + s) - static_cast<int>(k) + 1);
            for (unsigned t = static_cast<unsigned>(tmin); t < s; ++t)
                frames_.push_back({IdealCase::VI, i, s, t, s - t});
        }
}

void IdealEnumerator::reset() {
    frame_ = 0;
    omega_live_ = false;
}

bool IdealEnumerator::advance_omega() {
    // Odometer: last digit fastest, each digit counting in coefficient
    // encoding order; digit 0 cycles through nonzero values only.
    const fe_t mask = static_cast<fe_t>((1u << m_) - 1);
    for (std::size_t digit = omega_.size(); digit-- > 0;) {
        for (unsigned c = 0; c < dj_; ++c) {
            omega_[digit][c] = (omega_[digit][c] + 1) & mask;
            if (omega_[digit][c] != 0) return true;
        }
        // This digit wrapped to zero; digit 0 wrapping ends the frame.
        if (digit == 0) return false;
    }
    return false;
}

std::optional<IdealDescriptor> IdealEnumerator::next() {
    while (frame_ < frames_.size()) {
        const Frame& fr = frames_[frame_];
        if (fr.omega_precision == 0) {
            IdealDescriptor d{fr.kase, fr.i, fr.s, fr.t, {}, dj_, k_};
            ++frame_;
            return d;
        }
        if (!omega_live_) {
            omega_.assign(fr.omega_precision, std::vector<fe_t>(dj_, 0));
            omega_[0][0] = 1;
            omega_live_ = true;
            return IdealDescriptor{fr.kase, fr.i, fr.s, fr.t, omega_, dj_, k_};
        }
        if (advance_omega())
            return IdealDescriptor{fr.kase, fr.i, fr.s, fr.t, omega_, dj_, k_};
        omega_live_ = false;
        ++frame_;
    }
    return std::nullopt;
}

std::vector<IdealDescriptor> all_ideals(unsigned dj, unsigned m, unsigned k) {
    IdealEnumerator en(dj, m, k);
    std::vector<IdealDescriptor> out;
    while (auto d = en.next()) out.push_back(std::move(*d));
    return out;
}

std::vector<ComponentRing::Elem> generators(const IdealDescriptor& d,
                                            const ComponentRing& ring) {
    validate(d);
    if (ring.d() != d.dj || ring.k() != d.k)
        throw std::invalid_argument("generators: ring shape mismatch");
    const unsigned w = 2 * ring.d();
    const FieldSpec& F = ring.base();

    auto u_power = [&](unsigned i) {
        ComponentRing::Elem e = ring.zero();
        if (i < ring.k()) e[i * w] = 1; // u^k = 0
        return e;
    };
    auto us_f = [&](unsigned s) {
        // u^s * f as an element: digit s holds f (degree d < 2d).
        ComponentRing::Elem e = ring.zero();
        for (int c = 0; c <= ring.f().degree(); ++c)
            e[s * w + c] = ring.f().coeff(c);
        return e;
    };
    auto principal_with_omega = [&](unsigned i, unsigned t) {
        // u^i + u^t f w: digit t+h accumulates f * w_h, a plain product of
        // degree < 2d.
        ComponentRing::Elem e = u_power(i);
        for (unsigned h = 0; h < d.omega.size(); ++h) {
            Polynomial wh(F, d.omega[h]);
            Polynomial p = poly_mul(ring.f(), wh);
            for (int c = 0; c <= p.degree(); ++c)
                e[(t + h) * w + c] ^= p.coeff(c);
        }
        return e;
    };

    switch (d.kase) {
        case IdealCase::I: return {u_power(d.i)};
        case IdealCase::II: return {us_f(d.s)};
        case IdealCase::III:
        case IdealCase::IV: return {principal_with_omega(d.i, d.t)};
        case IdealCase::V: return {u_power(d.i), us_f(d.s)};
        case IdealCase::VI: return {principal_with_omega(d.i, d.t), us_f(d.s)};
    }
    throw std::logic_error("generators: bad IdealCase");
}

} // namespace ccc
