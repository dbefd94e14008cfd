// ccc: count, enumerate, and dualize cyclic codes of oddly even length over
// F_{2^m}[u]/<u^k>, with a brute-force verification mode at desk scale.

#include "ccc/json_io.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

using namespace ccc;

namespace {

struct RunConfig {
    unsigned m = 1, n = 1, k = 2;
    std::string modulus; // bit string override, empty = default table
    bool as_json = false;
    std::uint64_t limit = UINT64_MAX;
    bool self_dual = false;
    unsigned parallel = 0;
    std::string code_input; // file path or "-" for stdin
};

FieldSpec make_spec(const RunConfig& cfg) {
    if (!cfg.modulus.empty())
        return FieldSpec(cfg.m, parse_bit_string(cfg.modulus));
    if (const char* table = std::getenv("CCC_FIELD_TABLE")) {
        std::ifstream in(table);
        if (!in) throw std::runtime_error(std::string("cannot open field table ") + table);
        json j = json::parse(in);
        const std::string key = std::to_string(cfg.m);
        if (j.contains(key))
            return FieldSpec(cfg.m, parse_bit_string(j.at(key).get<std::string>()));
    }
    return FieldSpec::standard(cfg.m);
}

void validate_config(const RunConfig& cfg) {
    if (cfg.n % 2 == 0) throw CLI::ValidationError("--n must be odd");
    if (cfg.k < 2) throw CLI::ValidationError("--k must be >= 2");
    if (cfg.m < 1) throw CLI::ValidationError("--m must be >= 1");
}

// Exact integer, plus scientific notation when it exceeds 10^15.
std::string show_count(const BigInt& v) {
    const std::string s = v.str();
    if (v <= BigInt(1000000000000000ull)) return s;
    std::ostringstream os;
    os << s << " (" << s[0] << "." << s.substr(1, 3) << "e" << (s.size() - 1) << ")";
    return os.str();
}

int cmd_factor(const RunConfig& cfg) {
    const Decomposition D = decompose(cfg.n, cfg.k, make_spec(cfg));
    if (cfg.as_json) {
        std::cout << to_json(D).dump() << "\n";
        return 0;
    }
    std::cout << "x^" << cfg.n << " - 1 over F_" << D.spec.order() << " = product of "
              << D.r() << " irreducible factors\n";
    for (unsigned j = 0; j < D.r(); ++j) {
        std::cout << "  f_" << (j + 1) << " = " << to_string(D.fact.factors[j])
                  << "  (degree " << D.dj(j) << ", rho -> " << (D.rho[j] + 1)
                  << ", e = " << D.e[j] << ")\n";
    }
    std::cout << "lambda = " << D.lambda << ", pairs = " << D.eps_pairs << "\n";
    for (unsigned j = 0; j < D.r(); ++j)
        std::cout << "  eps_" << (j + 1) << " = " << to_string(D.idempotents[j]) << "\n";
    return 0;
}

int cmd_count(const RunConfig& cfg) {
    const FieldSpec spec = make_spec(cfg);
    const Decomposition D = decompose(cfg.n, cfg.k, spec);
    BigInt total = 1;
    std::vector<BigInt> per_factor;
    for (unsigned j = 0; j < D.r(); ++j) {
        per_factor.push_back(count_ideals(1ull << (D.m * D.dj(j)), D.k));
        total *= per_factor.back();
    }
    const BigInt sd = selfdual_count(D);
    if (cfg.as_json) {
        json jf = json::array();
        for (const BigInt& v : per_factor) jf.push_back(v.str());
        std::cout << json{{"m", cfg.m},
                          {"n", cfg.n},
                          {"k", cfg.k},
                          {"per_factor", jf},
                          {"total", total.str()},
                          {"self_dual", sd.str()}}
                         .dump()
                  << "\n";
        return 0;
    }
    std::cout << "cyclic codes of length " << 2 * cfg.n << " over F_" << spec.order()
              << "[u]/<u^" << cfg.k << ">\n";
    for (unsigned j = 0; j < D.r(); ++j)
        std::cout << "  N(f_" << (j + 1) << ") = " << show_count(per_factor[j]) << "\n";
    std::cout << "total     = " << show_count(total) << "\n";
    std::cout << "self-dual = " << show_count(sd) << "\n";
    return 0;
}

int cmd_enumerate(const RunConfig& cfg) {
    auto D = std::make_shared<const Decomposition>(decompose(cfg.n, cfg.k, make_spec(cfg)));
    const std::uint64_t limit = cfg.limit;
    if (limit == 0) return 0;
    std::uint64_t emitted = 0;

    // Partitioned enumeration splits on the leading factor choice and merges
    // in canonical order, so the output is byte-identical to the serial path.
    if (cfg.parallel > 1 && D->r() >= 1) {
        std::vector<IdealDescriptor> heads = all_ideals(D->dj(0), D->m, D->k);
        std::vector<std::string> chunks(heads.size());
        std::vector<std::thread> workers;
        std::atomic<std::size_t> next_head{0};
        for (unsigned w = 0; w < cfg.parallel; ++w) {
            workers.emplace_back([&] {
                for (;;) {
                    const std::size_t h = next_head.fetch_add(1);
                    if (h >= heads.size()) return;
                    std::ostringstream os;
                    std::vector<IdealDescriptor> parts{heads[h]};
                    std::function<void(unsigned)> rec = [&](unsigned j) {
                        if (j == D->r()) {
                            CyclicCode c{D, parts};
                            if (!cfg.self_dual || dual_code(c) == c)
                                os << to_json(c).dump() << "\n";
                            return;
                        }
                        IdealEnumerator en(D->dj(j), D->m, D->k);
                        while (auto d = en.next()) {
                            parts.push_back(*d);
                            rec(j + 1);
                            parts.pop_back();
                        }
                    };
                    rec(1);
                    chunks[h] = os.str();
                }
            });
        }
        for (auto& t : workers) t.join();
        for (const std::string& chunk : chunks) {
            std::istringstream is(chunk);
            std::string line;
            while (emitted < limit && std::getline(is, line)) {
                std::cout << line << "\n";
                ++emitted;
            }
            if (emitted >= limit) break;
        }
        return 0;
    }

    if (cfg.self_dual) {
        SelfDualEnumerator en(D);
        while (emitted < limit) {
            auto c = en.next();
            if (!c) break;
            std::cout << to_json(*c).dump() << "\n";
            ++emitted;
        }
    } else {
        CodeEnumerator en(D);
        while (emitted < limit) {
            auto c = en.next();
            if (!c) break;
            std::cout << to_json(*c).dump() << "\n";
            ++emitted;
        }
    }
    return 0;
}

int cmd_dual(const RunConfig& cfg) {
    json j;
    if (cfg.code_input.empty() || cfg.code_input == "-") {
        j = json::parse(std::cin);
    } else {
        std::ifstream in(cfg.code_input);
        if (!in) throw std::runtime_error("cannot open " + cfg.code_input);
        j = json::parse(in);
    }
    RunConfig merged = cfg;
    merged.m = j.value("m", cfg.m);
    merged.n = j.value("n", cfg.n);
    merged.k = j.value("k", cfg.k);
    validate_config(merged);
    auto D = std::make_shared<const Decomposition>(
        decompose(merged.n, merged.k, make_spec(merged)));
    const CyclicCode c = make_code(D, code_parts_from_json(j));
    const CyclicCode d = dual_code(c);
    const auto [lc, ld] = euclidean_size_check(c);
    const unsigned space = 2 * merged.n * merged.m * merged.k;
    if (cfg.as_json) {
        json out = to_json(d);
        out["log2_size"] = ld;
        out["log2_primal_size"] = lc;
        out["size_complement_ok"] = (lc + ld == space);
        out["involution_ok"] = (dual_code(d) == c);
        std::cout << out.dump() << "\n";
    } else {
        std::cout << to_json(d).dump() << "\n";
        std::cout << "log2|C| = " << lc << ", log2|C-dual| = " << ld << ", sum "
                  << (lc + ld == space ? "==" : "!=") << " 2nmk = " << space << "\n";
        std::cout << "involution: " << (dual_code(d) == c ? "ok" : "BROKEN") << "\n";
    }
    return (lc + ld == space) ? 0 : 1;
}

int cmd_verify(const RunConfig& cfg) {
    std::vector<CheckResult> results;
    try {
        results = run_verification(cfg.n, cfg.k, make_spec(cfg));
    } catch (const OracleRangeError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    bool all_pass = true;
    if (cfg.as_json) {
        json arr = json::array();
        for (const CheckResult& r : results) {
            arr.push_back(to_json(r));
            all_pass = all_pass && r.pass;
        }
        std::cout << arr.dump() << "\n";
    } else {
        for (const CheckResult& r : results) {
            std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name << " [" << r.params
                      << "] expected " << r.expected << ", got " << r.actual << "\n";
            all_pass = all_pass && r.pass;
        }
    }
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cyclic codes of oddly even length over F_{2^m}[u]/<u^k>"};
    app.require_subcommand(1);

    RunConfig cfg;
    auto add_common = [&](CLI::App* sub, bool with_limit) {
        sub->add_option("--m", cfg.m, "extension degree of the coefficient field");
        sub->add_option("--n", cfg.n, "odd half-length; codes have length 2n");
        sub->add_option("--k", cfg.k, "nilpotency index of u");
        sub->add_option("--modulus", cfg.modulus,
                        "field modulus bit string, e.g. 0b1011 (default: built-in table)");
        sub->add_flag("--json", cfg.as_json, "emit JSON instead of text");
        if (with_limit) {
            sub->add_option("--limit", cfg.limit, "stop after this many lines");
            sub->add_flag("--self-dual", cfg.self_dual, "restrict to self-dual codes");
            sub->add_option("--parallel", cfg.parallel,
                            "worker threads for partitioned enumeration");
        }
    };

    CLI::App* factor = app.add_subcommand("factor", "factors, permutation, idempotents");
    add_common(factor, false);
    CLI::App* count = app.add_subcommand("count", "total and self-dual code counts");
    add_common(count, false);
    CLI::App* enumerate = app.add_subcommand("enumerate", "stream code JSON lines");
    add_common(enumerate, true);
    CLI::App* dual = app.add_subcommand("dual", "dual of a code given as JSON");
    add_common(dual, false);
    dual->add_option("code", cfg.code_input, "code JSON file, or - for stdin");
    CLI::App* verify = app.add_subcommand("verify", "brute-force validation suite");
    add_common(verify, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(factor) || app.got_subcommand(count) ||
            app.got_subcommand(enumerate) || app.got_subcommand(verify))
            validate_config(cfg);
        if (app.got_subcommand(factor)) return cmd_factor(cfg);
        if (app.got_subcommand(count)) return cmd_count(cfg);
        if (app.got_subcommand(enumerate)) return cmd_enumerate(cfg);
        if (app.got_subcommand(dual)) return cmd_dual(cfg);
        if (app.got_subcommand(verify)) return cmd_verify(cfg);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
