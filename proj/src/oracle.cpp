#include "ccc/oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>

namespace ccc {

std::size_t ElementSet::count() const {
    std::size_t c = 0;
    for (std::uint64_t word : w) c += std::popcount(word);
    return c;
}

bool ElementSet::subset_of(const ElementSet& o) const {
    for (std::size_t i = 0; i < w.size(); ++i)
        if ((w[i] & ~o.w[i]) != 0) return false;
    return true;
}

SmallRing::SmallRing(Polynomial f, unsigned k) : ring_(std::move(f), k) {
    if (ring_.bits() > 16)
        throw OracleRangeError("SmallRing: ring larger than 2^16 elements");
    kdigit_bits_ = ring_.base().m() * 2 * ring_.d();
    kdigits_ = k;
    // Multiplication table for K = F_{2^m}[x]/<f^2>.
    const std::uint32_t ksize = 1u << kdigit_bits_;
    const unsigned m = ring_.base().m();
    const fe_t mask = static_cast<fe_t>(ring_.base().order() - 1);
    const unsigned w = 2 * ring_.d();
    auto unpack_k = [&](std::uint32_t a) {
        std::vector<fe_t> v(w, 0);
        for (unsigned c = 0; c < w; ++c) v[c] = (a >> (c * m)) & mask;
        return Polynomial(ring_.base(), std::move(v));
    };
    auto pack_k = [&](const Polynomial& p) {
        std::uint32_t a = 0;
        for (int c = 0; c <= p.degree(); ++c)
            a |= static_cast<std::uint32_t>(p.coeff(c)) << (c * m);
        return a;
    };
    ktab_.assign(static_cast<std::size_t>(ksize) * ksize, 0);
    for (std::uint32_t a = 0; a < ksize; ++a) {
        const Polynomial pa = unpack_k(a);
        for (std::uint32_t b = a; b < ksize; ++b) {
            const std::uint16_t prod = static_cast<std::uint16_t>(
                pack_k(poly_mod(poly_mul(pa, unpack_k(b)), ring_.f_squared())));
            ktab_[static_cast<std::size_t>(a) * ksize + b] = prod;
            ktab_[static_cast<std::size_t>(b) * ksize + a] = prod;
        }
    }
}

std::uint32_t SmallRing::mul(std::uint32_t a, std::uint32_t b) const {
    const std::uint32_t kmask = (1u << kdigit_bits_) - 1;
    const std::uint32_t ksize = 1u << kdigit_bits_;
    std::uint32_t out = 0;
    for (unsigned i = 0; i < kdigits_; ++i) {
        const std::uint32_t da = (a >> (i * kdigit_bits_)) & kmask;
        if (da == 0) continue;
        for (unsigned j = 0; i + j < kdigits_; ++j) {
            const std::uint32_t db = (b >> (j * kdigit_bits_)) & kmask;
            if (db == 0) continue;
            out ^= static_cast<std::uint32_t>(
                       ktab_[static_cast<std::size_t>(da) * ksize + db])
                   << ((i + j) * kdigit_bits_);
        }
    }
    return out;
}

std::uint32_t SmallRing::pack(const ComponentRing::Elem& e) const {
    const unsigned m = ring_.base().m();
    std::uint32_t out = 0;
    for (std::size_t p = 0; p < e.size(); ++p)
        out |= static_cast<std::uint32_t>(e[p]) << (p * m);
    return out;
}

ComponentRing::Elem SmallRing::unpack(std::uint32_t a) const {
    const unsigned m = ring_.base().m();
    const fe_t mask = static_cast<fe_t>(ring_.base().order() - 1);
    ComponentRing::Elem e(ring_.slots(), 0);
    for (std::size_t p = 0; p < e.size(); ++p) e[p] = (a >> (p * m)) & mask;
    return e;
}

namespace {

ElementSet principal_ideal(const SmallRing& R, std::uint32_t g) {
    ElementSet s(R.size());
    for (std::uint32_t r = 0; r < R.size(); ++r) s.set(R.mul(r, g));
    return s;
}

ElementSet ideal_sum(const SmallRing& R, const ElementSet& A, const ElementSet& B) {
    if (A.subset_of(B)) return B;
    if (B.subset_of(A)) return A;
    std::vector<std::uint32_t> a, b;
    for (std::uint32_t i = 0; i < R.size(); ++i) {
        if (A.test(i)) a.push_back(i);
        if (B.test(i)) b.push_back(i);
    }
    ElementSet s(R.size());
    for (std::uint32_t x : a)
        for (std::uint32_t y : b) s.set(x ^ y);
    return s;
}

} // namespace

std::vector<ElementSet> brute_ideals(const SmallRing& ring) {
    std::set<ElementSet> family;
    for (std::uint32_t g = 0; g < ring.size(); ++g)
        family.insert(principal_ideal(ring, g));
    // Close under pairwise sums; sums of ideals are ideals, and every ideal
    // is a finite sum of the principal ideals it contains.
    bool grew = true;
    while (grew) {
        grew = false;
        const std::vector<ElementSet> members(family.begin(), family.end());
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                if (family.insert(ideal_sum(ring, members[i], members[j])).second)
                    grew = true;
    }
    return {family.begin(), family.end()};
}

ElementSet ideal_from_generators(const SmallRing& ring,
                                 const std::vector<ComponentRing::Elem>& gens) {
    ElementSet acc(ring.size());
    acc.set(0);
    for (const ComponentRing::Elem& g : gens)
        acc = ideal_sum(ring, acc, principal_ideal(ring, ring.pack(g)));
    return acc;
}

std::uint32_t pack_codeword(const Codeword& w, unsigned m, unsigned k) {
    std::uint32_t out = 0;
    unsigned pos = 0;
    for (const auto& entry : w.entries)
        for (unsigned l = 0; l < k; ++l) {
            out |= static_cast<std::uint32_t>(entry[l]) << pos;
            pos += m;
        }
    return out;
}

Codeword unpack_codeword(std::uint32_t bits, unsigned two_n, unsigned m, unsigned k) {
    const fe_t mask = static_cast<fe_t>((1u << m) - 1);
    Codeword w{std::vector<std::vector<fe_t>>(two_n, std::vector<fe_t>(k, 0))};
    unsigned pos = 0;
    for (unsigned i = 0; i < two_n; ++i)
        for (unsigned l = 0; l < k; ++l) {
            w.entries[i][l] = (bits >> pos) & mask;
            pos += m;
        }
    return w;
}

std::vector<std::uint32_t> brute_dual(const CyclicCode& c) {
    const Decomposition& D = *c.decomp;
    const unsigned space_bits = 2 * D.n * D.m * D.k;
    if (space_bits > 24)
        throw OracleRangeError("brute_dual: ambient space larger than 2^24");
    const std::vector<Codeword> gens = generating_codewords(c);
    std::vector<std::uint32_t> out;
    const std::uint32_t total = 1u << space_bits;
    for (std::uint32_t v = 0; v < total; ++v) {
        Codeword w = unpack_codeword(v, 2 * D.n, D.m, D.k);
        bool ortho = true;
        for (const Codeword& g : gens) {
            const std::vector<fe_t> ip = inner_product(w, g, D.spec);
            if (std::any_of(ip.begin(), ip.end(), [](fe_t x) { return x != 0; })) {
                ortho = false;
                break;
            }
        }
        if (ortho) out.push_back(v);
    }
    return out;
}

namespace {

std::string fmt_params(const Decomposition& D, const std::string& extra = "") {
    std::ostringstream os;
    os << "m=" << D.m << " n=" << D.n << " k=" << D.k;
    if (!extra.empty()) os << " " << extra;
    return os.str();
}

std::vector<std::uint32_t> packed_codeword_set(const CyclicCode& c) {
    const Decomposition& D = *c.decomp;
    std::vector<std::uint32_t> out;
    for (const Codeword& w : expand_codewords(c))
        out.push_back(pack_codeword(w, D.m, D.k));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<CheckResult> run_verification(unsigned n, unsigned k, const FieldSpec& spec) {
    auto decomp = std::make_shared<const Decomposition>(decompose(n, k, spec));
    const Decomposition& D = *decomp;

    const unsigned space_bits_guard = 2 * D.n * D.m * D.k;
    if (space_bits_guard > 24)
        throw OracleRangeError("out of oracle range: ambient space has 2^" +
                               std::to_string(space_bits_guard) +
                               " vectors, limit is 2^24");
    for (unsigned j = 0; j < D.r(); ++j) {
        const unsigned ring_bits = 2 * D.m * D.dj(j) * D.k;
        if (ring_bits > 16)
            throw OracleRangeError("out of oracle range: component ring has 2^" +
                                   std::to_string(ring_bits) +
                                   " elements, limit is 2^16");
    }

    std::vector<CheckResult> results;

    // Per-factor ideal census: brute enumeration vs descriptor enumeration.
    for (unsigned j = 0; j < D.r(); ++j) {
        SmallRing ring(D.fact.factors[j], k);
        const std::vector<ElementSet> brute = brute_ideals(ring);
        const std::vector<IdealDescriptor> descs = all_ideals(D.dj(j), D.m, k);
        const BigInt expected = count_ideals(1ull << (D.m * D.dj(j)), k);

        bool pass = BigInt(brute.size()) == expected &&
                    BigInt(descs.size()) == expected;
        std::map<ElementSet, bool> seen;
        for (const ElementSet& s : brute) seen.emplace(s, false);
        for (const IdealDescriptor& d : descs) {
            if (!pass) break;
            ElementSet s =
                ideal_from_generators(ring, generators(d, ring.component()));
            auto it = seen.find(s);
            if (it == seen.end() || it->second ||
                s.count() != (1ull << card_log2(d, D.m))) {
                pass = false;
                break;
            }
            it->second = true;
        }
        if (pass)
            for (const auto& [s, hit] : seen) pass = pass && hit;
        CheckResult r;
        r.name = "ideal-census-bijection";
        r.params = fmt_params(D, "factor=" + to_string(D.fact.factors[j]));
        r.expected = expected.str() + " ideals, bijective";
        std::ostringstream act;
        act << "brute=" << brute.size() << " descriptors=" << descs.size()
            << (pass ? " bijective" : " MISMATCH");
        r.actual = act.str();
        r.pass = pass;
        results.push_back(std::move(r));
    }

    // Exhaustive dual checks over every cyclic code.
    const unsigned space_bits = 2 * D.n * D.m * D.k;
    std::size_t n_codes = 0, dual_ok = 0, inv_ok = 0, size_ok = 0, ortho_ok = 0;
    std::vector<CyclicCode> selfdual_brute;
    CodeEnumerator codes(decomp);
    while (auto c = codes.next()) {
        ++n_codes;
        const std::vector<std::uint32_t> brute = brute_dual(*c);
        const CyclicCode dual = dual_code(*c);
        if (packed_codeword_set(dual) == brute) ++dual_ok;
        if (dual_code(dual) == *c) ++inv_ok;
        const auto [lc, ld] = euclidean_size_check(*c);
        if (lc + ld == space_bits) ++size_ok;
        bool ortho = true;
        for (const Codeword& a : expand_codewords(*c)) {
            for (std::uint32_t vb : brute) {
                const Codeword b = unpack_codeword(vb, 2 * D.n, D.m, D.k);
                const std::vector<fe_t> ip = inner_product(a, b, D.spec);
                if (std::any_of(ip.begin(), ip.end(), [](fe_t x) { return x != 0; })) {
                    ortho = false;
                    break;
                }
            }
            if (!ortho) break;
        }
        if (ortho) ++ortho_ok;
        if (packed_codeword_set(*c) == brute) selfdual_brute.push_back(*c);
    }
    auto push_count_check = [&](const std::string& name, std::size_t ok) {
        CheckResult r;
        r.name = name;
        r.params = fmt_params(D);
        r.expected = "all " + std::to_string(n_codes) + " codes";
        r.actual = std::to_string(ok) + " of " + std::to_string(n_codes);
        r.pass = ok == n_codes;
        results.push_back(std::move(r));
    };
    push_count_check("dual-agreement", dual_ok);
    push_count_check("dual-involution", inv_ok);
    push_count_check("size-complement", size_ok);
    push_count_check("cross-orthogonality", ortho_ok);

    // Self-dual census: brute membership vs the census stream and count.
    {
        std::vector<CyclicCode> census;
        SelfDualEnumerator sd(decomp);
        while (auto c = sd.next()) census.push_back(std::move(*c));
        const BigInt counted = selfdual_count(D);
        bool pass = BigInt(census.size()) == counted &&
                    census.size() == selfdual_brute.size();
        if (pass)
            for (const CyclicCode& c : selfdual_brute)
                pass = pass && std::find(census.begin(), census.end(), c) != census.end();
        CheckResult r;
        r.name = "self-dual-census";
        r.params = fmt_params(D);
        r.expected = counted.str() + " codes, equal sets";
        r.actual = "census=" + std::to_string(census.size()) +
                   " brute=" + std::to_string(selfdual_brute.size()) +
                   (pass ? " equal" : " MISMATCH");
        r.pass = pass;
        results.push_back(std::move(r));
    }
    return results;
}

} // namespace ccc
