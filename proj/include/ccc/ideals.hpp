#pragma once
// Classification of the ideals of K[u]/<u^k>: six descriptor cases with
// counting functions, a deterministic enumerator, cardinality, and concrete
// generator realization.

#include "ccc/chain.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <vector>

namespace ccc {

using BigInt = boost::multiprecision::cpp_int;

BigInt bigint_pow(std::uint64_t base, unsigned exp);

enum class IdealCase : std::uint8_t { I, II, III, IV, V, VI };

const char* to_string(IdealCase c);
IdealCase ideal_case_from_string(const std::string& s);

// Tagged descriptor of one ideal of K[u]/<u^k>. Field use by case:
//   I:   <u^i>                         0 <= i <= k
//   II:  <u^s f>                       0 <= s <= k-1
//   III: <u^i + u^t f w>               0 <= t < i <= k-1, t >= 2i-k, |w| = i-t
//   IV:  <u^i + u^t f w>               0 <= t < i <= k-1, t <  2i-k, |w| = k-i
//   V:   <u^i, u^s f>                  0 <= s < i <= k-1
//   VI:  <u^i + u^t f w, u^s f>        0 <= t < s < i <= k-1, i+s <= k+t-1,
//                                      |w| = s-t
// where |w| is the u-precision of the unit w and each digit is a coefficient
// vector of length dj over F_{2^m}.
struct IdealDescriptor {
    IdealCase kase = IdealCase::I;
    unsigned i = 0, s = 0, t = 0;
    std::vector<std::vector<fe_t>> omega;
    unsigned dj = 0, k = 0;

    bool operator==(const IdealDescriptor& o) const;
};

// Validates the case constraints; throws std::invalid_argument on violation.
void validate(const IdealDescriptor& d);

// Number of case III ideals.
BigInt omega1(std::uint64_t q, unsigned k);
// Number of case IV ideals.
BigInt omega2(std::uint64_t q, unsigned k);
// Case VI ideals number (q-1)*gamma_count(q, k); recurrence with base
// values 0, 0, 0, 1 for k = 1..4.
BigInt gamma_count(std::uint64_t q, unsigned k);
// Total ideal count of K[u]/<u^k> for |residue field| = q.
BigInt count_ideals(std::uint64_t q, unsigned k);

// log2 of the ideal cardinality.
unsigned card_log2(const IdealDescriptor& d, unsigned m);

// Streams every descriptor exactly once: case tag ascending, then (i, s, t)
// ascending, then omega in lexicographic u-digit order (digit 0 most
// significant, digits ordered by coefficient-vector encoding).
class IdealEnumerator {
public:
    IdealEnumerator(unsigned dj, unsigned m, unsigned k);

    std::optional<IdealDescriptor> next();
    void reset();

private:
    struct Frame {
        IdealCase kase;
        unsigned i, s, t;
        unsigned omega_precision; // 0 when the case carries no omega
    };

    unsigned dj_, m_, k_;
    std::vector<Frame> frames_;
    std::size_t frame_ = 0;
    std::vector<std::vector<fe_t>> omega_;
    bool omega_live_ = false;

    bool advance_omega();
};

std::vector<IdealDescriptor> all_ideals(unsigned dj, unsigned m, unsigned k);

// Concrete generators in K[u]/<u^k> realizing the descriptor; one or two
// elements. ring.d() must equal d.dj and ring.k() must equal d.k.
std::vector<ComponentRing::Elem> generators(const IdealDescriptor& d,
                                            const ComponentRing& ring);

} // namespace ccc
