#include "doctest.h"

#include "chromsum/errors.hpp"
#include "chromsum/json_io.hpp"
#include "support.hpp"

using namespace chromsum;
using namespace testing_support;
namespace cj = chromsum::json;

namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an Error");
    return ErrorKind::Overflow;
}

}  // namespace

TEST_SUITE("json_io") {

TEST_CASE("tuples with and without labels") {
    std::vector<std::string> labels;
    const SetTuple t = cj::decode_tuple(cj::parse(R"({"sets": [[3,0,2],[1,0]], "labels": ["A1","A2"]})"), &labels);
    CHECK(t == SetTuple({FiniteSet::make({0, 2, 3}), FiniteSet::make({0, 1})}));
    CHECK(labels == std::vector<std::string>{"A1", "A2"});
    CHECK(cj::decode_tuple(cj::parse("[[0,2,3],[0,1]]")) == t);
    CHECK(cj::encode(t, labels).dump() == R"({"labels":["A1","A2"],"sets":[[0,2,3],[0,1]]})");
    CHECK(cj::decode_tuple(cj::encode(t, labels)) == t);
}

TEST_CASE("malformed input maps to parse errors") {
    CHECK(kind_of([] { cj::parse("[[0,1"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { cj::decode_tuple(cj::parse(R"({"set": []})")); }) == ErrorKind::Parse);
    CHECK(kind_of([] { cj::decode_tuple(cj::parse("[[0, 1.5]]")); }) == ErrorKind::Parse);
    CHECK(kind_of([] { cj::decode_tuple(cj::parse("[[0], []]")); }) == ErrorKind::EmptySet);
    CHECK(kind_of([] { cj::decode_count(cj::json("12x")); }) == ErrorKind::Parse);
    CHECK(kind_of([] { cj::decode_structure(cj::parse(R"({"C": []})")); }) == ErrorKind::Parse);
}

TEST_CASE("count tables keep big counts as decimal strings") {
    const auto table = multiset_count_table(FiniteSet::interval(0, 29), 100);
    const cj::json j = cj::encode(table);
    CHECK(j["counts"][1450].is_string());
    CHECK(j["cap"].is_null());
    CHECK(cj::decode_count_table(cj::parse(j.dump())) == table);

    const auto capped = chromatic_count_table(SetTuple({FiniteSet::make({0, 1, 2})}), HVec{4}, BigCount(2));
    const cj::json jc = cj::encode(capped);
    CHECK(jc["cap"] == "2");
    CHECK(cj::decode_count_table(jc) == capped);
}

TEST_CASE("property: structure reports round-trip") {
    Rng rng(9);
    for (int iter = 0; iter < 10; ++iter) {
        const SetTuple tuple = random_normalized_tuple(rng, {1, 2, 2, 3, 5});
        const StructureResult r = structure_constants(tuple, 1, Strategy::Empirical);
        CHECK(cj::decode_structure(cj::parse(cj::encode(r).dump())) == r);
    }
}

TEST_CASE("normalization records round-trip") {
    const NormalizationRecord r{4, {6, 4}};
    CHECK(cj::decode_record(cj::encode(r)) == r);
}

TEST_CASE("witness reports") {
    const SetTuple t({FiniteSet::make({0, 2}), FiniteSet::make({0, 3})});
    const cj::json j = cj::encode(t, witness_representations(t, 30, 2));
    CHECK(j["n"] == 30);
    CHECK(j["multiplicities"].size() == 2);
    CHECK(j["parts_per_color"].size() == 2);
    CHECK(j["sets"] == cj::parse("[[0,2],[0,3]]"));
}

}  // TEST_SUITE
