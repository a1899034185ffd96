#pragma once

// Exact counting kernels for representation functions.
//
//   r_{A,h}(n)      multisets of size h from A summing to n
//   r_{A,h}(n)      (bold) per-color multisets, color i of size h_i
//   r_{A,h,B}(n)    the same plus one translate b in B
//   p(n)            multisets of nonzero parts of any length
//
// Counts are exact big integers unless a saturation cap is given, in which
// case a stored value equal to the cap means "at least cap".

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "chromsum/intset.hpp"

namespace chromsum {

using BigCount = boost::multiprecision::cpp_int;

class CountTable {
public:
    CountTable() = default;
    /// Throws Domain on a negative count, a nonpositive cap, or a count
    /// above the cap.
    CountTable(Int offset, std::vector<BigCount> counts, std::optional<BigCount> cap = std::nullopt);

    Int offset() const noexcept { return offset_; }
    /// Last index covered; offset - 1 for an empty table.
    Int last() const noexcept { return offset_ + static_cast<Int>(counts_.size()) - 1; }
    std::size_t size() const noexcept { return counts_.size(); }
    const std::vector<BigCount>& counts() const noexcept { return counts_; }
    const std::optional<BigCount>& cap() const noexcept { return cap_; }

    /// Count at n; zero outside the covered range.
    BigCount at(Int n) const;
    BigCount total() const;
    /// {n : count(n) >= 1}
    FiniteSet support() const;
    /// {n : count(n) >= t}
    FiniteSet at_least(const BigCount& t) const;

    friend bool operator==(const CountTable&, const CountTable&) = default;

private:
    Int offset_ = 0;
    std::vector<BigCount> counts_;
    std::optional<BigCount> cap_;
};

/// r_{A,h} over [0, h max(A)]. Requires min(A) = 0.
CountTable multiset_count_table(const FiniteSet& a, Int h, const std::optional<BigCount>& cap = std::nullopt);

/// r_{A,h} by per-color tables and iterated convolution. Sets need not be
/// anchored at zero; the table then starts at sum_i h_i min(A_i). For a
/// normalized tuple the range is [0, h . a*].
CountTable chromatic_count_table(const SetTuple& tuple, const HVec& h,
                                 const std::optional<BigCount>& cap = std::nullopt);

/// (h . A)^(t) = {n : r_{A,h}(n) >= t}; computed with cap t.
FiniteSet tfold_set(const SetTuple& tuple, const HVec& h, Int t);

/// Multisets of nonzero parts summing to n, for n in [0, N], saturated at
/// cap. Zero parts are ignored; p(0) = 1.
CountTable partition_count_table(const FiniteSet& parts, Int N, const BigCount& cap);

/// r_{A,h,B}(n) = sum_{b in B} r_{A,h}(n - b).
CountTable inhomogeneous_count_table(const SetTuple& tuple, const HVec& h, const FiniteSet& b,
                                     const std::optional<BigCount>& cap = std::nullopt);

/// (h . A + B)^(t)
FiniteSet inhomogeneous_tfold_set(const SetTuple& tuple, const HVec& h, const FiniteSet& b, Int t);

/// Schoolbook convolution; saturates when cap is given.
CountTable convolve(const CountTable& x, const CountTable& y, const std::optional<BigCount>& cap = std::nullopt);

/// binomial(n, k) exactly.
BigCount binomial(Int n, Int k);

namespace detail {

/// Saturating word-size chromatic counts (cap <= 2^62), index 0 is
/// sum_i h_i min(A_i). Used by the structure searches.
std::vector<std::uint64_t> saturated_chromatic_counts(const SetTuple& tuple, const HVec& h, std::uint64_t cap);

/// Saturating counts of (h . A + B), index 0 is the table offset
/// sum_i h_i min(A_i) + min(B).
std::vector<std::uint64_t> saturated_inhomogeneous_counts(const SetTuple& tuple, const HVec& h, const FiniteSet& b,
                                                          std::uint64_t cap);

inline constexpr std::uint64_t kMaxWordCap = std::uint64_t{1} << 62;

}  // namespace detail

}  // namespace chromsum
