#include <algorithm>

#include "chromsum/json_io.hpp"

namespace chromsum::json {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorKind::Parse, what); }

Int decode_int(const json& j, const char* what) {
    if (j.is_number_integer()) return j.get<Int>();
    if (j.is_number_unsigned()) {
        const auto u = j.get<std::uint64_t>();
        if (u > static_cast<std::uint64_t>(INT64_MAX)) bad(std::string(what) + " out of range");
        return static_cast<Int>(u);
    }
    if (j.is_string()) {
        try {
            std::size_t used = 0;
            const std::string s = j.get<std::string>();
            const long long v = std::stoll(s, &used);
            if (used == s.size()) return v;
        } catch (const std::exception&) {
        }
    }
    bad(std::string(what) + " must be an integer, got " + j.dump());
}

std::vector<Int> decode_ints(const json& j, const char* what) {
    if (!j.is_array()) bad(std::string(what) + " must be an array of integers");
    std::vector<Int> out;
    out.reserve(j.size());
    for (const auto& x : j) out.push_back(decode_int(x, what));
    return out;
}

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
    return j.at(key);
}

}  // namespace

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        bad(std::string("invalid JSON: ") + e.what());
    }
}

json encode(const FiniteSet& s) { return json(s.elements()); }

json encode(const HVec& h) { return json(h.coords()); }

json encode(const SetTuple& tuple, const std::vector<std::string>& labels) {
    json sets = json::array();
    for (const FiniteSet& s : tuple.sets()) sets.push_back(encode(s));
    json out{{"sets", sets}};
    if (!labels.empty()) out["labels"] = labels;
    return out;
}

json encode(const NormalizationRecord& r) { return json{{"d", r.d}, {"offsets", r.offsets}}; }

json encode(const CountTable& table) {
    json counts = json::array();
    for (const BigCount& c : table.counts()) counts.push_back(c.str());
    return json{{"offset", table.offset()},
                {"cap", table.cap() ? json(table.cap()->str()) : json(nullptr)},
                {"counts", counts}};
}

json encode(const StructureResult& r) {
    return json{{"C", encode(r.C)},
                {"c", r.c},
                {"D", encode(r.D)},
                {"d", r.d},
                {"h_t", encode(r.h_t)},
                {"strategy", std::string(to_string(r.strategy))},
                {"verified_box", json::array({encode(r.box_lower), encode(r.box_upper)})}};
}

json encode(const SetTuple& tuple, const WitnessSet& w) {
    json reps = json::array();
    json profiles = json::array();
    for (const Multiplicities& m : w.reps) {
        reps.push_back(m);
        profiles.push_back(encode(parts_per_color(m)));
    }
    return json{{"n", w.n}, {"sets", encode(tuple)["sets"]}, {"multiplicities", reps}, {"parts_per_color", profiles}};
}

json encode(const std::vector<LemmaCheck>& checks) {
    json out = json::array();
    for (const LemmaCheck& c : checks)
        out.push_back(json{{"name", c.name}, {"status", std::string(to_string(c.status))}, {"detail", c.detail}});
    return out;
}

FiniteSet decode_set(const json& j) {
    const auto v = decode_ints(j, "set element");
    return v.empty() ? FiniteSet::empty() : FiniteSet::make(v);
}

HVec decode_hvec(const json& j) { return HVec(decode_ints(j, "exponent")); }

SetTuple decode_tuple(const json& j, std::vector<std::string>* labels) {
    const json& sets = j.is_array() ? j : field(j, "sets");
    if (!sets.is_array()) bad("'sets' must be an array of arrays");
    std::vector<FiniteSet> out;
    for (const auto& s : sets) out.push_back(decode_set(s));
    if (labels && j.is_object() && j.contains("labels")) {
        const json& l = j.at("labels");
        if (!l.is_array() || l.size() != sets.size()) bad("'labels' must have one string per set");
        labels->clear();
        for (const auto& x : l) {
            if (!x.is_string()) bad("labels must be strings");
            labels->push_back(x.get<std::string>());
        }
    }
    return SetTuple(std::move(out));
}

NormalizationRecord decode_record(const json& j) {
    NormalizationRecord r;
    r.d = decode_int(field(j, "d"), "d");
    r.offsets = decode_ints(field(j, "offsets"), "offset");
    return r;
}

BigCount decode_count(const json& j) {
    if (j.is_number_integer() || j.is_number_unsigned()) return BigCount(decode_int(j, "count"));
    if (!j.is_string()) bad("counts must be decimal strings");
    const std::string s = j.get<std::string>();
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
        bad("malformed count '" + s + "'");
    return BigCount(s);
}

CountTable decode_count_table(const json& j) {
    std::optional<BigCount> cap;
    if (j.contains("cap") && !j.at("cap").is_null()) cap = decode_count(j.at("cap"));
    const json& counts = field(j, "counts");
    if (!counts.is_array()) bad("'counts' must be an array");
    std::vector<BigCount> values;
    for (const auto& c : counts) values.push_back(decode_count(c));
    return CountTable(decode_int(field(j, "offset"), "offset"), std::move(values), std::move(cap));
}

StructureResult decode_structure(const json& j) {
    StructureResult r;
    r.C = decode_set(field(j, "C"));
    r.c = decode_int(field(j, "c"), "c");
    r.D = decode_set(field(j, "D"));
    r.d = decode_int(field(j, "d"), "d");
    r.h_t = decode_hvec(field(j, "h_t"));
    const json& s = field(j, "strategy");
    if (!s.is_string()) bad("'strategy' must be a string");
    r.strategy = parse_strategy(s.get<std::string>());
    const json& box = field(j, "verified_box");
    if (!box.is_array() || box.size() != 2) bad("'verified_box' must be [lower, upper]");
    r.box_lower = decode_hvec(box[0]);
    r.box_upper = decode_hvec(box[1]);
    if (r.c < 0 || r.d < 0) bad("c and d must be nonnegative");
    return r;
}

}  // namespace chromsum::json
