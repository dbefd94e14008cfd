#pragma once
// JSON forms of the public value types.

#include "ccc/codes.hpp"
#include "ccc/oracle.hpp"

#include <json.hpp>

namespace ccc {

using json = nlohmann::json;

json to_json(const FieldSpec& spec);
FieldSpec field_spec_from_json(const json& j);

// m == 1: text form "x^3+x+1"; otherwise coefficient list, index = degree,
// each coefficient an F_{2^m} bit-integer.
json to_json(const Polynomial& p);

json to_json(const IdealDescriptor& d);
IdealDescriptor descriptor_from_json(const json& j);

json to_json(const CyclicCode& c);
std::vector<IdealDescriptor> code_parts_from_json(const json& j);

json to_json(const Codeword& w);
Codeword codeword_from_json(const json& j);

json to_json(const Decomposition& D);

json to_json(const CheckResult& r);

// "0b1011" (LSB = constant term) or a plain integer string.
std::uint32_t parse_bit_string(const std::string& s);
std::string format_bit_string(std::uint32_t bits);

} // namespace ccc
