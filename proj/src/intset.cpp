#include "chromsum/intset.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace chromsum {

namespace checked {

Int add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) fail(ErrorKind::Overflow, "integer overflow in addition");
    return r;
}

Int sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) fail(ErrorKind::Overflow, "integer overflow in subtraction");
    return r;
}

Int mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) fail(ErrorKind::Overflow, "integer overflow in multiplication");
    return r;
}

}  // namespace checked

Int gcd_nonzero(std::span<const Int> values) {
    Int g = 0;
    for (Int v : values) {
        if (v == 0) continue;
        if (v == INT64_MIN) fail(ErrorKind::Overflow, "gcd of INT64_MIN");
        g = std::gcd(g, v);
    }
    return g;
}

// ---------------------------------------------------------------- FiniteSet

FiniteSet FiniteSet::make(std::span<const Int> values) {
    if (values.empty()) fail(ErrorKind::EmptySet, "cannot build a set from no values");
    std::vector<Int> v(values.begin(), values.end());
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return FiniteSet(std::move(v));
}

FiniteSet FiniteSet::from_sorted(std::vector<Int> sorted) {
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        if (sorted[i - 1] >= sorted[i]) fail(ErrorKind::Domain, "from_sorted: sequence not strictly increasing");
    }
    return FiniteSet(std::move(sorted));
}

FiniteSet FiniteSet::interval(Int lo, Int hi) {
    std::vector<Int> v;
    if (hi >= lo) {
        v.reserve(static_cast<std::size_t>(checked::sub(hi, lo)) + 1);
        for (Int x = lo;; ++x) {
            v.push_back(x);
            if (x == hi) break;
        }
    }
    return FiniteSet(std::move(v));
}

Int FiniteSet::min() const {
    if (elems_.empty()) fail(ErrorKind::EmptySet, "min of the empty set");
    return elems_.front();
}

Int FiniteSet::max() const {
    if (elems_.empty()) fail(ErrorKind::EmptySet, "max of the empty set");
    return elems_.back();
}

bool FiniteSet::contains(Int value) const noexcept {
    return std::binary_search(elems_.begin(), elems_.end(), value);
}

bool FiniteSet::is_subset_of(const FiniteSet& other) const {
    return std::includes(other.elems_.begin(), other.elems_.end(), elems_.begin(), elems_.end());
}

FiniteSet set_union(const FiniteSet& a, const FiniteSet& b) {
    std::vector<Int> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return FiniteSet::from_sorted(std::move(out));
}

FiniteSet sumset(const FiniteSet& a, const FiniteSet& b) {
    if (a.is_empty() || b.is_empty()) return FiniteSet::empty();
    std::vector<Int> out;
    out.reserve(a.size() * b.size());
    for (Int x : a)
        for (Int y : b) out.push_back(checked::add(x, y));
    return FiniteSet::make(out);
}

FiniteSet translate(const FiniteSet& a, Int shift) {
    std::vector<Int> out;
    out.reserve(a.size());
    for (Int x : a) out.push_back(checked::add(x, shift));
    return FiniteSet::from_sorted(std::move(out));
}

FiniteSet dilate(Int d, const FiniteSet& a) {
    if (d <= 0) fail(ErrorKind::Domain, "dilation factor must be positive");
    std::vector<Int> out;
    out.reserve(a.size());
    for (Int x : a) out.push_back(checked::mul(d, x));
    return FiniteSet::from_sorted(std::move(out));
}

FiniteSet reflect(const FiniteSet& a) {
    if (a.is_empty() || a.min() != 0) fail(ErrorKind::NotNormalized, "reflect requires min(A) = 0");
    const Int top = a.max();
    std::vector<Int> out(a.elements().rbegin(), a.elements().rend());
    for (Int& x : out) x = top - x;
    return FiniteSet::from_sorted(std::move(out));
}

Int gcd(const FiniteSet& a) { return gcd_nonzero(a.elements()); }

// --------------------------------------------------------------------- HVec

HVec::HVec(std::vector<Int> coords) : coords_(std::move(coords)) {
    for (Int c : coords_) {
        if (c < 0) fail(ErrorKind::Domain, "exponent vectors are nonnegative");
    }
}

Int HVec::norm() const {
    Int s = 0;
    for (Int c : coords_) s = checked::add(s, c);
    return s;
}

Int HVec::dot(std::span<const Int> v) const {
    if (v.size() != coords_.size()) fail(ErrorKind::Dimension, "dot: length mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) s = checked::add(s, checked::mul(coords_[i], v[i]));
    return s;
}

namespace {
void require_same_length(const HVec& a, const HVec& b) {
    if (a.size() != b.size()) {
        fail(ErrorKind::Dimension, "exponent vectors of lengths " + std::to_string(a.size()) + " and " +
                                       std::to_string(b.size()));
    }
}
}  // namespace

bool hvec_leq(const HVec& h1, const HVec& h2) {
    require_same_length(h1, h2);
    for (std::size_t i = 0; i < h1.size(); ++i)
        if (h1[i] > h2[i]) return false;
    return true;
}

HVec hvec_sup(std::span<const HVec> hs) {
    if (hs.empty()) fail(ErrorKind::Domain, "sup of an empty family");
    std::vector<Int> out = hs.front().coords();
    for (const HVec& h : hs.subspan(1)) {
        require_same_length(hs.front(), h);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(out[i], h[i]);
    }
    return HVec(std::move(out));
}

HVec hvec_sup(const HVec& a, const HVec& b) {
    const HVec pair[] = {a, b};
    return hvec_sup(pair);
}

HVec hvec_add_unit(const HVec& h, std::size_t i) {
    if (i >= h.size()) fail(ErrorKind::Dimension, "unit vector index out of range");
    std::vector<Int> out = h.coords();
    out[i] = checked::add(out[i], 1);
    return HVec(std::move(out));
}

HVec hvec_add_scalar(const HVec& h, Int m) {
    std::vector<Int> out = h.coords();
    for (Int& c : out) c = checked::add(c, m);
    return HVec(std::move(out));
}

// ----------------------------------------------------------------- SetTuple

SetTuple::SetTuple(std::vector<FiniteSet> sets) : sets_(std::move(sets)) {
    if (sets_.empty()) fail(ErrorKind::Dimension, "a tuple needs at least one set");
    maxima_.reserve(sets_.size());
    for (std::size_t i = 0; i < sets_.size(); ++i) {
        if (sets_[i].is_empty()) fail(ErrorKind::EmptySet, "set " + std::to_string(i + 1) + " of the tuple is empty");
        maxima_.push_back(sets_[i].max());
        union_ = i == 0 ? sets_[i] : chromsum::set_union(union_, sets_[i]);
    }
    normalized_ = anchored_at_zero() && gcd(union_) == 1;
}

bool SetTuple::anchored_at_zero() const noexcept {
    return std::all_of(sets_.begin(), sets_.end(), [](const FiniteSet& s) { return s.elements().front() == 0; });
}

void require_normalized(const SetTuple& tuple) {
    if (!tuple.normalized()) {
        fail(ErrorKind::NotNormalized, "tuple must be normalized (every min(A_i) = 0 and gcd of the union = 1)");
    }
}

void require_dimension(const SetTuple& tuple, const HVec& h) {
    if (h.size() != tuple.q()) {
        fail(ErrorKind::Dimension, "exponent vector has " + std::to_string(h.size()) + " coordinates, tuple has " +
                                       std::to_string(tuple.q()) + " sets");
    }
}

std::pair<SetTuple, NormalizationRecord> normalize_tuple(const SetTuple& tuple) {
    NormalizationRecord record;
    std::vector<Int> diffs;
    for (const FiniteSet& s : tuple.sets()) {
        const Int lo = s.min();
        record.offsets.push_back(lo);
        for (Int x : s) diffs.push_back(checked::sub(x, lo));
    }
    record.d = gcd_nonzero(diffs);
    if (record.d == 0) fail(ErrorKind::DegenerateTuple, "every set is a singleton; the common difference gcd is undefined");

    std::vector<FiniteSet> sets;
    sets.reserve(tuple.q());
    for (std::size_t i = 0; i < tuple.q(); ++i) {
        std::vector<Int> v;
        v.reserve(tuple.set(i).size());
        for (Int x : tuple.set(i)) v.push_back((x - record.offsets[i]) / record.d);
        sets.push_back(FiniteSet::from_sorted(std::move(v)));
    }
    return {SetTuple(std::move(sets)), std::move(record)};
}

SetTuple denormalize_tuple(const SetTuple& normalized, const NormalizationRecord& record) {
    if (record.offsets.size() != normalized.q()) fail(ErrorKind::Dimension, "record does not match the tuple");
    std::vector<FiniteSet> sets;
    sets.reserve(normalized.q());
    for (std::size_t i = 0; i < normalized.q(); ++i)
        sets.push_back(translate(dilate(record.d, normalized.set(i)), record.offsets[i]));
    return SetTuple(std::move(sets));
}

SetTuple reflect_tuple(const SetTuple& tuple) {
    std::vector<FiniteSet> sets;
    sets.reserve(tuple.q());
    for (const FiniteSet& s : tuple.sets()) sets.push_back(reflect(s));
    return SetTuple(std::move(sets));
}

bool colors_disjoint_off_zero(const SetTuple& tuple) {
    std::vector<Int> all;
    for (const FiniteSet& s : tuple.sets())
        for (Int x : s)
            if (x != 0) all.push_back(x);
    std::sort(all.begin(), all.end());
    return std::adjacent_find(all.begin(), all.end()) == all.end();
}

std::string to_string(const FiniteSet& s) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s.elements()[i];
    os << '}';
    return os.str();
}

std::string to_string(const HVec& h) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < h.size(); ++i) os << (i ? "," : "") << h[i];
    os << ')';
    return os.str();
}

}  // namespace chromsum
