#pragma once

// Integer-set primitives: finite sets, q-tuples of sets, exponent vectors
// with the componentwise partial order, normalization and reflection.

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chromsum/errors.hpp"

namespace chromsum {

/// Element and index type. Every arithmetic step that could leave the
/// 64-bit range goes through the checked helpers below and raises
/// ErrorKind::Overflow instead of wrapping.
using Int = std::int64_t;

namespace checked {
Int add(Int a, Int b);
Int sub(Int a, Int b);
Int mul(Int a, Int b);
}  // namespace checked

/// gcd over the nonzero entries; 0 when every entry is zero.
Int gcd_nonzero(std::span<const Int> values);

/// Sorted, deduplicated finite set of integers.
class FiniteSet {
public:
    FiniteSet() = default;

    /// Sorts and dedupes. Throws EmptySet on empty input.
    static FiniteSet make(std::span<const Int> values);
    static FiniteSet make(std::initializer_list<Int> values) {
        return make(std::span<const Int>(values.begin(), values.size()));
    }
    /// The empty set. Only tuple construction rejects it.
    static FiniteSet empty() { return FiniteSet(); }
    /// Wraps an already strictly increasing sequence (checked).
    static FiniteSet from_sorted(std::vector<Int> sorted);
    /// [lo, hi] as a set; empty when hi < lo.
    static FiniteSet interval(Int lo, Int hi);

    bool is_empty() const noexcept { return elems_.empty(); }
    std::size_t size() const noexcept { return elems_.size(); }
    Int min() const;
    Int max() const;
    bool contains(Int value) const noexcept;

    const std::vector<Int>& elements() const noexcept { return elems_; }
    auto begin() const noexcept { return elems_.begin(); }
    auto end() const noexcept { return elems_.end(); }

    bool is_subset_of(const FiniteSet& other) const;

    friend bool operator==(const FiniteSet&, const FiniteSet&) = default;

private:
    explicit FiniteSet(std::vector<Int> elems) : elems_(std::move(elems)) {}
    std::vector<Int> elems_;
};

FiniteSet set_union(const FiniteSet& a, const FiniteSet& b);
/// {a + b : a in A, b in B}
FiniteSet sumset(const FiniteSet& a, const FiniteSet& b);
/// {a + shift : a in A}
FiniteSet translate(const FiniteSet& a, Int shift);
/// d*A = {d a : a in A}; d must be positive.
FiniteSet dilate(Int d, const FiniteSet& a);
/// max(A) - A. Requires min(A) = 0 (NotNormalized otherwise).
FiniteSet reflect(const FiniteSet& a);
/// gcd of the nonzero elements.
Int gcd(const FiniteSet& a);

/// Exponent vector h in N_0^q.
class HVec {
public:
    HVec() = default;
    /// Throws Domain on a negative coordinate.
    explicit HVec(std::vector<Int> coords);
    HVec(std::initializer_list<Int> coords) : HVec(std::vector<Int>(coords)) {}

    static HVec zeros(std::size_t q) { return HVec(std::vector<Int>(q, 0)); }
    static HVec diagonal(std::size_t q, Int m) { return HVec(std::vector<Int>(q, m)); }

    std::size_t size() const noexcept { return coords_.size(); }
    Int operator[](std::size_t i) const { return coords_.at(i); }
    const std::vector<Int>& coords() const noexcept { return coords_; }

    /// ||h|| = sum of coordinates.
    Int norm() const;
    /// h . v, checked.
    Int dot(std::span<const Int> v) const;

    friend bool operator==(const HVec&, const HVec&) = default;

private:
    std::vector<Int> coords_;
};

/// h1 <= h2 componentwise. DimensionError on length mismatch.
bool hvec_leq(const HVec& h1, const HVec& h2);
/// Componentwise max of a nonempty family.
HVec hvec_sup(std::span<const HVec> hs);
HVec hvec_sup(const HVec& a, const HVec& b);
/// h + e_i.
HVec hvec_add_unit(const HVec& h, std::size_t i);
/// h + (m, ..., m).
HVec hvec_add_scalar(const HVec& h, Int m);

/// q-tuple (A_1, ..., A_q) of nonempty finite sets with cached union,
/// maxima and the normalization flag.
class SetTuple {
public:
    SetTuple() = default;
    /// Throws Dimension when q = 0 and EmptySet when some A_i is empty.
    explicit SetTuple(std::vector<FiniteSet> sets);

    std::size_t q() const noexcept { return sets_.size(); }
    const FiniteSet& set(std::size_t i) const { return sets_.at(i); }
    const std::vector<FiniteSet>& sets() const noexcept { return sets_; }
    const FiniteSet& set_union() const noexcept { return union_; }
    /// a* = (max A_1, ..., max A_q)
    const std::vector<Int>& maxima() const noexcept { return maxima_; }
    /// max_i a_i*
    Int max_element() const noexcept { return union_.max(); }
    /// min(A_i) = 0 for all i and gcd of the union is 1.
    bool normalized() const noexcept { return normalized_; }
    /// min(A_i) = 0 for all i (gcd not required).
    bool anchored_at_zero() const noexcept;

    friend bool operator==(const SetTuple& a, const SetTuple& b) { return a.sets_ == b.sets_; }

private:
    std::vector<FiniteSet> sets_;
    FiniteSet union_;
    std::vector<Int> maxima_;
    bool normalized_ = false;
};

/// Throws NotNormalized unless the tuple is normalized.
void require_normalized(const SetTuple& tuple);
/// Throws Dimension unless h has one coordinate per color.
void require_dimension(const SetTuple& tuple, const HVec& h);

/// A'_i = d * A_i + offsets[i]
struct NormalizationRecord {
    Int d = 1;
    std::vector<Int> offsets;

    friend bool operator==(const NormalizationRecord&, const NormalizationRecord&) = default;
};

/// Splits an arbitrary tuple into a normalized tuple and the affine map
/// back. DegenerateTuple when every set is a singleton.
std::pair<SetTuple, NormalizationRecord> normalize_tuple(const SetTuple& tuple);
SetTuple denormalize_tuple(const SetTuple& normalized, const NormalizationRecord& record);

/// Per-color reflection (A_1^, ..., A_q^). Requires min(A_i) = 0.
SetTuple reflect_tuple(const SetTuple& tuple);

/// True when no nonzero element carries more than one color.
bool colors_disjoint_off_zero(const SetTuple& tuple);

std::string to_string(const FiniteSet& s);
std::string to_string(const HVec& h);

}  // namespace chromsum
