#include "doctest.h"

#include "chromsum/errors.hpp"
#include "chromsum/oracle.hpp"
#include "support.hpp"

using namespace chromsum;
using namespace testing_support;

TEST_SUITE("oracle") {

TEST_CASE("enumeration examples") {
    const SetTuple a({FiniteSet::make({0, 1, 2})});
    const auto reps = oracle::enumerate_representations(a, HVec{2}, 2);
    REQUIRE(reps.size() == 2);
    CHECK(reps[0] == oracle::Representation{{0, 2}});
    CHECK(reps[1] == oracle::Representation{{1, 1}});

    CHECK(oracle::enumerate_representations(a, HVec{2}, 5).empty());
    CHECK(oracle::enumerate_representations(a, HVec{2}, -1).empty());

    const auto empty = oracle::enumerate_representations(a, HVec{0}, 0);
    REQUIRE(empty.size() == 1);
    CHECK(empty[0] == oracle::Representation{{}});
}

TEST_CASE("oracle count tables") {
    const SetTuple a({FiniteSet::make({0, 1}), FiniteSet::make({0, 2})});
    CHECK(as_words(oracle::oracle_count_table(a, HVec{1, 1})) == std::vector<std::uint64_t>{1, 1, 1, 1});
    CHECK(as_words(oracle::oracle_count_table(a, HVec{0, 0})) == std::vector<std::uint64_t>{1});
}

TEST_CASE("budget is enforced") {
    const SetTuple a({FiniteSet::interval(0, 7), FiniteSet::interval(0, 7)});
    CHECK(oracle::representation_space_size(a, HVec{10, 10}) == binomial(17, 10) * binomial(17, 10));
    try {
        oracle::oracle_count_table(a, HVec{10, 10}, 1000);
        FAIL("expected BudgetError");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Budget);
    }
}

TEST_CASE("partition enumeration") {
    const auto parts = FiniteSet::make({2, 3});
    const auto p12 = oracle::oracle_partitions(parts, 12);
    REQUIRE(p12.size() == 3);
    CHECK(p12[0] == std::vector<Int>{2, 2, 2, 2, 2, 2});
    CHECK(p12[1] == std::vector<Int>{2, 2, 2, 3, 3});
    CHECK(p12[2] == std::vector<Int>{3, 3, 3, 3});
    const auto p0 = oracle::oracle_partitions(parts, 0);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0].empty());
    CHECK(oracle::oracle_partitions(parts, 1).empty());
}

TEST_CASE("property: every enumerated representation is valid and counted once") {
    Rng rng(4242);
    for (int iter = 0; iter < 80; ++iter) {
        const SetTuple tuple = random_normalized_tuple(rng, {1, 3, 1, 3, 6});
        const HVec h = random_h(rng, tuple.q(), 0, 3);
        const auto brute = brute_counts(tuple, h);
        const Int n = rng.uniform(0, h.dot(tuple.maxima()));
        const auto reps = oracle::enumerate_representations(tuple, h, n);
        const auto it = brute.find(n);
        CHECK(reps.size() == (it == brute.end() ? 0 : it->second));
        for (std::size_t k = 0; k < reps.size(); ++k) {
            Int sum = 0;
            for (std::size_t i = 0; i < tuple.q(); ++i) {
                CHECK(static_cast<Int>(reps[k][i].size()) == h[i]);
                CHECK(std::is_sorted(reps[k][i].begin(), reps[k][i].end()));
                for (Int x : reps[k][i]) {
                    CHECK(tuple.set(i).contains(x));
                    sum += x;
                }
            }
            CHECK(sum == n);
            if (k > 0) CHECK(reps[k - 1] < reps[k]);
        }
    }
}

}  // TEST_SUITE
