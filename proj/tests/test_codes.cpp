#include "ccc/codes.hpp"

#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <random>

using namespace ccc;

namespace {

std::shared_ptr<const Decomposition> shared_decomp(unsigned m, unsigned n, unsigned k) {
    return std::make_shared<const Decomposition>(decompose(m, n, k));
}

CyclicCode all_case_I(std::shared_ptr<const Decomposition> D, unsigned i) {
    std::vector<IdealDescriptor> parts;
    for (unsigned j = 0; j < D->r(); ++j)
        parts.push_back({IdealCase::I, i, 0, 0, {}, D->dj(j), D->k});
    return make_code(D, std::move(parts));
}

std::vector<CyclicCode> all_codes(std::shared_ptr<const Decomposition> D) {
    std::vector<CyclicCode> out;
    CodeEnumerator en(D);
    while (auto c = en.next()) out.push_back(std::move(*c));
    return out;
}

} // namespace

TEST_SUITE("codes") {

TEST_CASE("code counts") {
    CHECK(code_count(1, 7, 4) == 293687);
    CHECK(code_count(1, 1, 2) == 7);
    CHECK(code_count(1, 1, 4) == 23);
}

TEST_CASE("dual of a principal u-power code permutes slots") {
    auto D = shared_decomp(1, 7, 4);
    std::vector<IdealDescriptor> parts{{IdealCase::I, 1, 0, 0, {}, 1, 4},
                                       {IdealCase::I, 2, 0, 0, {}, 3, 4},
                                       {IdealCase::I, 3, 0, 0, {}, 3, 4}};
    const CyclicCode c = make_code(D, parts);
    const CyclicCode d = dual_code(c);
    CHECK(d.parts[0] == IdealDescriptor{IdealCase::I, 3, 0, 0, {}, 1, 4});
    // Slot 2 receives the dual of part 1 and vice versa.
    CHECK(d.parts[2] == IdealDescriptor{IdealCase::I, 2, 0, 0, {}, 3, 4});
    CHECK(d.parts[1] == IdealDescriptor{IdealCase::I, 1, 0, 0, {}, 3, 4});
}

TEST_CASE("dual omega transform across a reciprocal pair") {
    // <u + f_2 w> with w = 1 dualizes to <u^3 + u^2 f_3 w'> at the partner
    // slot, w' = x^11 mod f_3 = x^2 + x + 1.
    auto D = shared_decomp(1, 7, 4);
    std::vector<IdealDescriptor> parts{
        {IdealCase::I, 0, 0, 0, {}, 1, 4},
        {IdealCase::III, 1, 0, 0, {{1, 0, 0}}, 3, 4},
        {IdealCase::I, 0, 0, 0, {}, 3, 4}};
    const CyclicCode d = dual_code(make_code(D, parts));
    CHECK(d.parts[2] ==
          IdealDescriptor{IdealCase::III, 3, 0, 2, {{1, 1, 1}}, 3, 4});
    // <u^2 + f_2 w, u f_2> dualizes to the principal <u^3 + u f_3 w'>.
    parts[1] = {IdealCase::VI, 2, 1, 0, {{1, 0, 0}}, 3, 4};
    const CyclicCode d2 = dual_code(make_code(D, parts));
    CHECK(d2.parts[2] ==
          IdealDescriptor{IdealCase::IV, 3, 0, 1, {{1, 1, 1}}, 3, 4});
}

TEST_CASE("dual involution, exhaustive at small parameters") {
    for (unsigned k : {2u, 3u, 4u}) {
        auto D = shared_decomp(1, 1, k);
        for (const CyclicCode& c : all_codes(D)) {
            CHECK(dual_code(dual_code(c)) == c);
            const auto [lc, ld] = euclidean_size_check(c);
            CHECK(lc + ld == 2 * D->n * D->m * D->k);
        }
    }
}

TEST_CASE("dual involution on sampled codes of length 14") {
    auto D = shared_decomp(1, 7, 4);
    std::vector<std::vector<IdealDescriptor>> choices;
    for (unsigned j = 0; j < D->r(); ++j)
        choices.push_back(all_ideals(D->dj(j), D->m, D->k));
    std::mt19937_64 rng(2024);
    for (int iter = 0; iter < 500; ++iter) {
        std::vector<IdealDescriptor> parts;
        for (const auto& ch : choices)
            parts.push_back(ch[rng() % ch.size()]);
        const CyclicCode c = make_code(D, std::move(parts));
        CHECK(dual_code(dual_code(c)) == c);
        const auto [lc, ld] = euclidean_size_check(c);
        CHECK(lc + ld == 56);
    }
}

TEST_CASE("dual involution over F_4 with a nontrivial reciprocal unit") {
    auto D = shared_decomp(2, 3, 2);
    for (const CyclicCode& c : all_codes(D)) {
        CHECK(dual_code(dual_code(c)) == c);
        const auto [lc, ld] = euclidean_size_check(c);
        CHECK(lc + ld == 2 * D->n * D->m * D->k);
    }
}

TEST_CASE("size check on the trivial codes") {
    auto D = shared_decomp(1, 3, 2);
    const unsigned space = 2 * D->n * D->m * D->k;
    const auto zero = euclidean_size_check(all_case_I(D, D->k));
    CHECK(zero == std::pair<unsigned, unsigned>{0, space});
    const auto full = euclidean_size_check(all_case_I(D, 0));
    CHECK(full == std::pair<unsigned, unsigned>{space, 0});
}

TEST_CASE("self-dual census at (1, 1, 2)") {
    auto D = shared_decomp(1, 1, 2);
    SelfDualEnumerator en(D);
    std::vector<CyclicCode> census;
    while (auto c = en.next()) census.push_back(std::move(*c));
    REQUIRE(census.size() == 3);
    CHECK(census[0].parts[0] == IdealDescriptor{IdealCase::I, 1, 0, 0, {}, 1, 2});
    CHECK(census[1].parts[0] == IdealDescriptor{IdealCase::II, 0, 0, 0, {}, 1, 2});
    CHECK(census[2].parts[0] ==
          IdealDescriptor{IdealCase::III, 1, 0, 0, {{1}}, 1, 2});
    CHECK(selfdual_count(*D) == 3);
}

TEST_CASE("self-dual admissible parts at (1, 7, 4)") {
    auto D = shared_decomp(1, 7, 4);
    const std::vector<IdealDescriptor> parts = selfdual_parts(*D, 0);
    const std::vector<IdealDescriptor> expected{
        {IdealCase::I, 2, 0, 0, {}, 1, 4},
        {IdealCase::II, 0, 0, 0, {}, 1, 4},
        {IdealCase::III, 2, 0, 0, {{1}, {0}}, 1, 4},
        {IdealCase::III, 2, 0, 0, {{1}, {1}}, 1, 4},
        {IdealCase::III, 2, 0, 1, {{1}}, 1, 4},
        {IdealCase::IV, 3, 0, 0, {{1}}, 1, 4},
        {IdealCase::V, 3, 1, 0, {}, 1, 4}};
    CHECK(parts == expected);
}

TEST_CASE("self-dual counts") {
    CHECK(selfdual_count(decompose(1, 7, 4)) == 791);
    CHECK(selfdual_count(decompose(1, 1, 4)) == 7);
    auto D = shared_decomp(1, 7, 4);
    SelfDualEnumerator en(D);
    std::size_t streamed = 0;
    while (auto c = en.next()) {
        CHECK(dual_code(*c) == *c);
        ++streamed;
    }
    CHECK(streamed == 791);
}

TEST_CASE("codeword expansion sizes") {
    auto D = shared_decomp(1, 1, 2);
    const CyclicCode zero = all_case_I(D, 2);
    CHECK(expand_codewords(zero).size() == 1);

    const CyclicCode c =
        make_code(D, {{IdealCase::III, 1, 0, 0, {{1}}, 1, 2}});
    const std::vector<Codeword> words = expand_codewords(c);
    CHECK(words.size() == 4);

    for (auto Dp : {shared_decomp(1, 1, 2), shared_decomp(1, 3, 2)}) {
        for (const CyclicCode& code : all_codes(Dp)) {
            std::vector<Codeword> ws = expand_codewords(code);
            CHECK(ws.size() == (std::size_t{1} << code_log2(code)));
            // No duplicates: the decomposition is direct.
            std::sort(ws.begin(), ws.end(),
                      [](const Codeword& a, const Codeword& b) {
                          return a.entries < b.entries;
                      });
            CHECK(std::adjacent_find(ws.begin(), ws.end()) == ws.end());
        }
    }
}

TEST_CASE("expansion respects the limit") {
    auto D = shared_decomp(1, 1, 2);
    const CyclicCode full = all_case_I(D, 0);
    CHECK(expand_codewords(full, 5).size() == 5);
    CHECK(expand_codewords(full, 0).empty());
}

TEST_CASE("membership") {
    auto D = shared_decomp(1, 1, 2);
    const CyclicCode c =
        make_code(D, {{IdealCase::III, 1, 0, 0, {{1}}, 1, 2}});
    const Codeword zero{{std::vector<fe_t>(2, 0), std::vector<fe_t>(2, 0)}};
    CHECK(contains(c, zero));
    for (const Codeword& g : generating_codewords(c)) CHECK(contains(c, g));
    // w = (1, 0) is not in <u + (x+1)>.
    const Codeword w{{{1, 0}, {0, 0}}};
    CHECK_FALSE(contains(c, w));
    // Exhaustive agreement with expansion.
    std::vector<Codeword> words = expand_codewords(c);
    std::size_t members = 0;
    for (std::uint32_t v = 0; v < 16; ++v) {
        Codeword cand{{{(v >> 0) & 1u, (v >> 1) & 1u}, {(v >> 2) & 1u, (v >> 3) & 1u}}};
        const bool in = contains(c, cand);
        const bool listed = std::find(words.begin(), words.end(), cand) != words.end();
        CHECK(in == listed);
        if (in) ++members;
    }
    CHECK(members == 4);
}

TEST_CASE("codes are closed under the cyclic shift") {
    auto D = shared_decomp(1, 3, 2);
    for (const CyclicCode& c : all_codes(D)) {
        const std::vector<Codeword> words = expand_codewords(c);
        for (const Codeword& w : words) {
            Codeword shifted = w;
            const std::size_t two_n = w.entries.size();
            for (std::size_t i = 0; i < two_n; ++i)
                shifted.entries[(i + 1) % two_n] = w.entries[i];
            CHECK(contains(c, shifted));
        }
    }
}

} // TEST_SUITE
