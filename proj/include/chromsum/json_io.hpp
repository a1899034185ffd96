#pragma once

// JSON encodings of the public value types. Counts and caps travel as
// decimal strings; set elements and structure constants as JSON numbers.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "chromsum/intset.hpp"
#include "chromsum/lemmas.hpp"
#include "chromsum/repcount.hpp"
#include "chromsum/structure.hpp"

namespace chromsum::json {

using nlohmann::json;

json encode(const FiniteSet& s);
json encode(const HVec& h);
json encode(const SetTuple& tuple, const std::vector<std::string>& labels = {});
json encode(const NormalizationRecord& r);
json encode(const CountTable& table);
json encode(const StructureResult& r);
json encode(const SetTuple& tuple, const WitnessSet& w);
json encode(const std::vector<LemmaCheck>& checks);

// Decoders throw Error(ErrorKind::Parse) on malformed input and let domain
// errors from the value constructors through.
FiniteSet decode_set(const json& j);
HVec decode_hvec(const json& j);
/// Accepts {"sets": [...], "labels": [...]} or a bare array of sets.
SetTuple decode_tuple(const json& j, std::vector<std::string>* labels = nullptr);
NormalizationRecord decode_record(const json& j);
CountTable decode_count_table(const json& j);
StructureResult decode_structure(const json& j);
/// Decimal string or JSON integer.
BigCount decode_count(const json& j);

/// json::parse with errors mapped to ErrorKind::Parse.
json parse(const std::string& text);

}  // namespace chromsum::json
