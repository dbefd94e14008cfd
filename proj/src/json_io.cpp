#include "ccc/json_io.hpp"

#include <stdexcept>

namespace ccc {

std::string format_bit_string(std::uint32_t bits) {
    std::string s = "0b";
    bool seen = false;
    for (int i = 31; i >= 0; --i) {
        if ((bits >> i) & 1u) seen = true;
        if (seen) s += ((bits >> i) & 1u) ? '1' : '0';
    }
    if (!seen) s += '0';
    return s;
}

std::uint32_t parse_bit_string(const std::string& s) {
    std::size_t pos = 0;
    unsigned base = 10;
    if (s.rfind("0b", 0) == 0 || s.rfind("0B", 0) == 0) {
        pos = 2;
        base = 2;
    }
    if (pos >= s.size()) throw std::invalid_argument("bit string: empty");
    std::uint64_t v = 0;
    for (; pos < s.size(); ++pos) {
        const char c = s[pos];
        if (c < '0' || c >= static_cast<char>('0' + base))
            throw std::invalid_argument("bit string: bad digit in " + s);
        v = v * base + static_cast<unsigned>(c - '0');
        if (v > 0xFFFFFFFFull) throw std::invalid_argument("bit string: overflow");
    }
    return static_cast<std::uint32_t>(v);
}

json to_json(const FieldSpec& spec) {
    return json{{"m", spec.m()}, {"modulus", format_bit_string(spec.modulus())}};
}

FieldSpec field_spec_from_json(const json& j) {
    const unsigned m = j.at("m").get<unsigned>();
    if (!j.contains("modulus")) return FieldSpec::standard(m);
    const auto& mod = j.at("modulus");
    if (mod.is_string()) return FieldSpec(m, parse_bit_string(mod.get<std::string>()));
    return FieldSpec(m, mod.get<std::uint32_t>());
}

json to_json(const Polynomial& p) {
    if (p.spec().m() == 1) return to_string(p);
    json arr = json::array();
    for (int i = 0; i <= p.degree(); ++i) arr.push_back(p.coeff(i));
    return arr;
}

json to_json(const IdealDescriptor& d) {
    json j{{"case", to_string(d.kase)}, {"dj", d.dj}, {"k", d.k}};
    switch (d.kase) {
        case IdealCase::I: j["i"] = d.i; break;
        case IdealCase::II: j["s"] = d.s; break;
        case IdealCase::III:
        case IdealCase::IV:
            j["i"] = d.i;
            j["t"] = d.t;
            break;
        case IdealCase::V:
            j["i"] = d.i;
            j["s"] = d.s;
            break;
        case IdealCase::VI:
            j["i"] = d.i;
            j["s"] = d.s;
            j["t"] = d.t;
            break;
    }
    if (!d.omega.empty()) {
        json omega = json::array();
        for (const auto& digit : d.omega) omega.push_back(digit);
        j["omega"] = omega;
    }
    return j;
}

IdealDescriptor descriptor_from_json(const json& j) {
    IdealDescriptor d;
    d.kase = ideal_case_from_string(j.at("case").get<std::string>());
    d.dj = j.at("dj").get<unsigned>();
    d.k = j.at("k").get<unsigned>();
    if (j.contains("i")) d.i = j.at("i").get<unsigned>();
    if (j.contains("s")) d.s = j.at("s").get<unsigned>();
    if (j.contains("t")) d.t = j.at("t").get<unsigned>();
    if (j.contains("omega"))
        for (const auto& digit : j.at("omega"))
            d.omega.push_back(digit.get<std::vector<fe_t>>());
    validate(d);
    return d;
}

json to_json(const CyclicCode& c) {
    json parts = json::array();
    for (const IdealDescriptor& p : c.parts) parts.push_back(to_json(p));
    return json{{"m", c.decomp->m},
                {"n", c.decomp->n},
                {"k", c.decomp->k},
                {"parts", parts}};
}

std::vector<IdealDescriptor> code_parts_from_json(const json& j) {
    std::vector<IdealDescriptor> parts;
    for (const auto& p : j.at("parts")) parts.push_back(descriptor_from_json(p));
    return parts;
}

json to_json(const Codeword& w) {
    json arr = json::array();
    for (const auto& entry : w.entries) arr.push_back(entry);
    return arr;
}

Codeword codeword_from_json(const json& j) {
    Codeword w;
    for (const auto& entry : j) w.entries.push_back(entry.get<std::vector<fe_t>>());
    return w;
}

json to_json(const Decomposition& D) {
    json factors = json::array(), idem = json::array(), rho = json::array(),
         e = json::array();
    for (const Polynomial& f : D.fact.factors) factors.push_back(to_json(f));
    for (const Polynomial& p : D.idempotents) idem.push_back(to_json(p));
    for (unsigned j = 0; j < D.r(); ++j) {
        rho.push_back(D.rho[j] + 1); // 1-based
        e.push_back(D.e[j]);
    }
    return json{{"m", D.m},
                {"n", D.n},
                {"k", D.k},
                {"field", to_json(D.spec)},
                {"factors", factors},
                {"degrees", D.fact.degrees},
                {"idempotents", idem},
                {"rho", rho},
                {"e", e},
                {"lambda", D.lambda},
                {"eps_pairs", D.eps_pairs}};
}

json to_json(const CheckResult& r) {
    return json{{"name", r.name},
                {"params", r.params},
                {"expected", r.expected},
                {"actual", r.actual},
                {"pass", r.pass}};
}

} // namespace ccc
