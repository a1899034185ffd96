#pragma once

// Shared helpers for the unit and acceptance tests: seeded generators for
// random instances and brute-force reference computations that do not use
// the library's counting code or its oracle module.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "chromsum/intset.hpp"
#include "chromsum/repcount.hpp"

namespace testing_support {

using chromsum::FiniteSet;
using chromsum::HVec;
using chromsum::Int;
using chromsum::SetTuple;

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    Int uniform(Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(gen_); }
    bool coin() { return uniform(0, 1) == 1; }

private:
    std::mt19937_64 gen_;
};

// {0} plus size - 1 distinct values from [1, top].
inline FiniteSet random_anchored_set(Rng& rng, std::size_t size, Int top) {
    std::vector<Int> pool(static_cast<std::size_t>(top));
    std::iota(pool.begin(), pool.end(), 1);
    for (std::size_t i = 0; i + 1 < size && i < pool.size(); ++i) {
        const auto j = static_cast<std::size_t>(rng.uniform(static_cast<Int>(i), static_cast<Int>(pool.size()) - 1));
        std::swap(pool[i], pool[j]);
    }
    std::vector<Int> elems{0};
    elems.insert(elems.end(), pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(std::min(size - 1, pool.size())));
    return FiniteSet::make(elems);
}

struct TupleShape {
    std::size_t q_min = 1;
    std::size_t q_max = 3;
    std::size_t size_min = 1;
    std::size_t size_max = 4;
    Int top_max = 8;
};

// Normalized tuple: every set contains 0 and the union has gcd 1.
inline SetTuple random_normalized_tuple(Rng& rng, const TupleShape& shape) {
    while (true) {
        const auto q = static_cast<std::size_t>(rng.uniform(static_cast<Int>(shape.q_min), static_cast<Int>(shape.q_max)));
        std::vector<FiniteSet> sets;
        for (std::size_t i = 0; i < q; ++i) {
            const auto size = static_cast<std::size_t>(
                rng.uniform(static_cast<Int>(shape.size_min), static_cast<Int>(shape.size_max)));
            sets.push_back(random_anchored_set(rng, size, rng.uniform(1, shape.top_max)));
        }
        SetTuple tuple(std::move(sets));
        if (tuple.normalized()) return tuple;
    }
}

inline HVec random_h(Rng& rng, std::size_t q, Int lo, Int hi) {
    std::vector<Int> h(q);
    for (Int& x : h) x = rng.uniform(lo, hi);
    return HVec(std::move(h));
}

// Calls fn(mult) for every vector of |a| nonnegative multiplicities summing
// to h (stars and bars).
template <class Fn>
void for_each_multiplicity(std::size_t parts, Int h, Fn&& fn) {
    std::vector<Int> mult(parts, 0);
    auto rec = [&](auto&& self, std::size_t i, Int left) -> void {
        if (i + 1 == parts) {
            mult[i] = left;
            fn(mult);
            return;
        }
        for (Int x = 0; x <= left; ++x) {
            mult[i] = x;
            self(self, i + 1, left - x);
        }
    };
    if (parts == 0) return;
    rec(rec, 0, h);
}

// r_{A,h}(n) by enumerating per-color multiplicity vectors and combining
// the per-color sum distributions.
inline std::map<Int, std::uint64_t> brute_counts(const SetTuple& tuple, const HVec& h) {
    std::map<Int, std::uint64_t> total{{0, 1}};
    for (std::size_t i = 0; i < tuple.q(); ++i) {
        const auto& elems = tuple.set(i).elements();
        std::map<Int, std::uint64_t> color;
        for_each_multiplicity(elems.size(), h[i], [&](const std::vector<Int>& m) {
            Int s = 0;
            for (std::size_t j = 0; j < elems.size(); ++j) s += m[j] * elems[j];
            ++color[s];
        });
        std::map<Int, std::uint64_t> next;
        for (const auto& [a, x] : total)
            for (const auto& [b, y] : color) next[a + b] += x * y;
        total = std::move(next);
    }
    return total;
}

inline std::map<Int, std::uint64_t> brute_counts_with_translates(const SetTuple& tuple, const HVec& h,
                                                                   const FiniteSet& b) {
    std::map<Int, std::uint64_t> out;
    for (const auto& [n, c] : brute_counts(tuple, h))
        for (Int x : b) out[n + x] += c;
    return out;
}

inline FiniteSet brute_tfold(const std::map<Int, std::uint64_t>& counts, std::uint64_t t) {
    std::vector<Int> out;
    for (const auto& [n, c] : counts)
        if (c >= t) out.push_back(n);
    return FiniteSet::from_sorted(std::move(out));
}

// Number of multisets of the given positive parts summing to n, counted
// top-down over (remaining, smallest allowed part index) with memoization.
inline std::uint64_t brute_partition_count(const std::vector<Int>& parts, Int n) {
    std::map<std::pair<Int, std::size_t>, std::uint64_t> memo;
    auto rec = [&](auto&& self, Int left, std::size_t from) -> std::uint64_t {
        if (left == 0) return 1;
        const auto key = std::make_pair(left, from);
        if (const auto it = memo.find(key); it != memo.end()) return it->second;
        std::uint64_t total = 0;
        for (std::size_t j = from; j < parts.size(); ++j)
            if (parts[j] <= left) total += self(self, left - parts[j], j);
        memo.emplace(key, total);
        return total;
    };
    return rec(rec, n, 0);
}

inline std::vector<std::uint64_t> as_words(const chromsum::CountTable& table) {
    std::vector<std::uint64_t> out;
    for (const auto& c : table.counts()) out.push_back(c.convert_to<std::uint64_t>());
    return out;
}

// Dense vector of brute counts over [lo, hi].
inline std::vector<std::uint64_t> dense(const std::map<Int, std::uint64_t>& counts, Int lo, Int hi) {
    std::vector<std::uint64_t> out;
    for (Int n = lo; n <= hi; ++n) {
        const auto it = counts.find(n);
        out.push_back(it == counts.end() ? 0 : it->second);
    }
    return out;
}

}  // namespace testing_support
