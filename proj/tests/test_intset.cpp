#include "doctest.h"

#include <limits>

#include "chromsum/errors.hpp"
#include "chromsum/intset.hpp"
#include "support.hpp"

using namespace chromsum;
using testing_support::Rng;

namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an Error");
    return ErrorKind::Parse;
}

}  // namespace

TEST_SUITE("intset") {

TEST_CASE("finite sets sort and deduplicate") {
    CHECK(FiniteSet::make({3, 0, 3, 2}).elements() == std::vector<Int>{0, 2, 3});
    CHECK(FiniteSet::make({0}).elements() == std::vector<Int>{0});
    CHECK(FiniteSet::make({-4, 2}).elements() == std::vector<Int>{-4, 2});
    CHECK(kind_of([] { FiniteSet::make(std::span<const Int>{}); }) == ErrorKind::EmptySet);
    CHECK(FiniteSet::interval(2, 5) == FiniteSet::make({2, 3, 4, 5}));
    CHECK(FiniteSet::interval(3, 2).is_empty());
}

TEST_CASE("set operations") {
    const auto a = FiniteSet::make({0, 2, 3});
    CHECK(reflect(a) == FiniteSet::make({0, 1, 3}));
    CHECK(reflect(FiniteSet::make({0, 1, 2})) == FiniteSet::make({0, 1, 2}));
    CHECK(reflect(FiniteSet::make({0, 5})) == FiniteSet::make({0, 5}));
    CHECK(kind_of([] { reflect(FiniteSet::make({1, 2})); }) == ErrorKind::NotNormalized);

    CHECK(dilate(3, FiniteSet::make({0, 1, 2})) == FiniteSet::make({0, 3, 6}));
    CHECK(dilate(1, a) == a);
    CHECK(dilate(2, a) == FiniteSet::make({0, 4, 6}));
    CHECK(kind_of([&] { dilate(0, a); }) == ErrorKind::Domain);

    CHECK(sumset(a, FiniteSet::make({0, 1})) == FiniteSet::make({0, 1, 2, 3, 4}));
    CHECK(translate(a, -2) == FiniteSet::make({-2, 0, 1}));
    CHECK(set_union(a, FiniteSet::make({1})) == FiniteSet::make({0, 1, 2, 3}));
    CHECK(gcd(FiniteSet::make({0, 4, 6})) == 2);
    CHECK(gcd(FiniteSet::make({0})) == 0);
}

TEST_CASE("exponent vectors") {
    CHECK(hvec_leq(HVec{1, 2}, HVec{2, 2}));
    CHECK_FALSE(hvec_leq(HVec{3, 0}, HVec{2, 2}));
    const std::vector<HVec> hs{HVec{1, 3}, HVec{2, 0}};
    CHECK(hvec_sup(hs) == HVec{2, 3});
    CHECK(hvec_add_unit(HVec{1, 1}, 1) == HVec{1, 2});
    CHECK(hvec_add_scalar(HVec{1, 4}, 3) == HVec{4, 7});
    CHECK(HVec{2, 5}.norm() == 7);
    CHECK(kind_of([] { HVec{1, -1}; }) == ErrorKind::Domain);
    CHECK(kind_of([] { hvec_leq(HVec{1}, HVec{1, 2}); }) == ErrorKind::Dimension);
}

TEST_CASE("checked arithmetic reports overflow") {
    constexpr Int big = std::numeric_limits<Int>::max();
    CHECK(kind_of([] { checked::add(big, 1); }) == ErrorKind::Overflow);
    CHECK(kind_of([] { checked::mul(big / 2, 3); }) == ErrorKind::Overflow);
    CHECK(checked::sub(5, 7) == -2);
}

TEST_CASE("normalization examples") {
    {
        const auto [norm, rec] = normalize_tuple(SetTuple({FiniteSet::make({6, 10}), FiniteSet::make({4, 8})}));
        CHECK(norm == SetTuple({FiniteSet::make({0, 1}), FiniteSet::make({0, 1})}));
        CHECK(rec.d == 4);
        CHECK(rec.offsets == std::vector<Int>{6, 4});
    }
    {
        const SetTuple t({FiniteSet::make({0, 2, 3})});
        const auto [norm, rec] = normalize_tuple(t);
        CHECK(norm == t);
        CHECK(rec.d == 1);
        CHECK(rec.offsets == std::vector<Int>{0});
    }
    {
        const auto [norm, rec] = normalize_tuple(SetTuple({FiniteSet::make({5}), FiniteSet::make({7, 9})}));
        CHECK(norm == SetTuple({FiniteSet::make({0}), FiniteSet::make({0, 1})}));
        CHECK(rec.d == 2);
        CHECK(rec.offsets == std::vector<Int>{5, 7});
    }
    CHECK(kind_of([] { normalize_tuple(SetTuple({FiniteSet::make({3}), FiniteSet::make({8})})); }) ==
          ErrorKind::DegenerateTuple);
    CHECK(kind_of([] { SetTuple(std::vector<FiniteSet>{}); }) == ErrorKind::Dimension);
    CHECK(kind_of([] { SetTuple({FiniteSet::make({0}), FiniteSet::empty()}); }) == ErrorKind::EmptySet);
}

TEST_CASE("property: normalization round-trips and is idempotent") {
    Rng rng(0x1a2b);
    for (int iter = 0; iter < 300; ++iter) {
        const auto q = static_cast<std::size_t>(rng.uniform(1, 3));
        std::vector<FiniteSet> sets;
        const Int scale = rng.uniform(1, 5);
        for (std::size_t i = 0; i < q; ++i) {
            std::vector<Int> v;
            const Int shift = rng.uniform(-20, 20);
            const Int size = rng.uniform(1, 4);
            for (Int j = 0; j < size; ++j) v.push_back(shift + scale * rng.uniform(0, 6));
            sets.push_back(FiniteSet::make(v));
        }
        const SetTuple tuple(std::move(sets));
        bool all_singletons = true;
        for (const auto& s : tuple.sets()) all_singletons = all_singletons && s.size() == 1;
        if (all_singletons) continue;

        const auto [norm, rec] = normalize_tuple(tuple);
        CHECK(norm.normalized());
        CHECK(denormalize_tuple(norm, rec) == tuple);
        const auto [again, rec2] = normalize_tuple(norm);
        CHECK(again == norm);
        CHECK(rec2.d == 1);
    }
}

TEST_CASE("property: reflection is an involution and flips the tuple") {
    Rng rng(77);
    for (int iter = 0; iter < 200; ++iter) {
        const SetTuple tuple = testing_support::random_normalized_tuple(rng, {});
        const SetTuple mirror = reflect_tuple(tuple);
        CHECK(reflect_tuple(mirror) == tuple);
        CHECK(mirror.maxima() == tuple.maxima());
        CHECK(mirror.normalized());
        for (std::size_t i = 0; i < tuple.q(); ++i)
            for (Int x : tuple.set(i)) CHECK(mirror.set(i).contains(tuple.set(i).max() - x));
    }
}

TEST_CASE("property: sumset is commutative and contains translates") {
    Rng rng(5);
    for (int iter = 0; iter < 200; ++iter) {
        const auto a = testing_support::random_anchored_set(rng, static_cast<std::size_t>(rng.uniform(1, 4)), 9);
        const auto b = testing_support::random_anchored_set(rng, static_cast<std::size_t>(rng.uniform(1, 4)), 9);
        const auto s = sumset(a, b);
        CHECK(s == sumset(b, a));
        for (Int x : b) CHECK(translate(a, x).is_subset_of(s));
        CHECK(s.max() == a.max() + b.max());
    }
}

TEST_CASE("color overlap detection") {
    CHECK(colors_disjoint_off_zero(SetTuple({FiniteSet::make({0, 2}), FiniteSet::make({0, 3})})));
    CHECK_FALSE(colors_disjoint_off_zero(SetTuple({FiniteSet::make({0, 2, 3}), FiniteSet::make({0, 3})})));
}

}  // TEST_SUITE
