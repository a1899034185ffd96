#include "chromsum/repcount.hpp"

#include <algorithm>

namespace chromsum {

namespace {

// Arithmetic policies for the kernels. Saturation is sound because every
// kernel only adds and multiplies nonnegative values: min(min(x,c)+min(y,c), c)
// equals min(x+y, c), and likewise for products of nonzero terms.

struct WordSaturating {
    using value_type = std::uint64_t;
    std::uint64_t cap;

    value_type zero() const { return 0; }
    value_type one() const { return std::min<std::uint64_t>(1, cap); }
    void add_to(value_type& acc, value_type x) const { acc = std::min(acc + x, cap); }
    value_type mul(value_type x, value_type y) const {
        if (x == 0 || y == 0) return 0;
        if (x > cap / y) return cap;
        return std::min(x * y, cap);
    }
};

struct BigArith {
    using value_type = BigCount;
    std::optional<BigCount> cap;

    value_type zero() const { return 0; }
    value_type one() const { return cap && *cap < 1 ? *cap : BigCount(1); }
    void add_to(value_type& acc, const value_type& x) const {
        acc += x;
        if (cap && acc > *cap) acc = *cap;
    }
    value_type mul(const value_type& x, const value_type& y) const {
        value_type r = x * y;
        if (cap && r > *cap) r = *cap;
        return r;
    }
};

std::size_t table_width(Int h, Int top) {
    const Int w = checked::add(checked::mul(h, top), 1);
    return static_cast<std::size_t>(w);
}

// Row h of f(j, m, n) = f(j-1, m, n) + f(j, m-1, n - a_j) with the elements
// taken in increasing order; f(., 0, 0) = 1. `elems` is sorted with min 0.
template <class Arith>
std::vector<typename Arith::value_type> multiset_row(const std::vector<Int>& elems, Int h, const Arith& ar) {
    using V = typename Arith::value_type;
    const Int top = elems.back();
    const std::size_t width = table_width(h, top);
    const std::size_t rows = static_cast<std::size_t>(h) + 1;
    std::vector<V> f(rows * width, ar.zero());
    f[0] = ar.one();
    for (Int a : elems) {
        const auto step = static_cast<std::size_t>(a);
        for (std::size_t m = 1; m < rows; ++m) {
            V* cur = &f[m * width];
            const V* prev = &f[(m - 1) * width];
            const std::size_t reach = m * static_cast<std::size_t>(top);
            for (std::size_t n = step; n <= reach; ++n) {
                if (prev[n - step] != 0) ar.add_to(cur[n], prev[n - step]);
            }
        }
    }
    return std::vector<V>(f.begin() + static_cast<std::ptrdiff_t>(h * static_cast<Int>(width)), f.end());
}

template <class Arith>
std::vector<typename Arith::value_type> convolve_raw(const std::vector<typename Arith::value_type>& x,
                                                     const std::vector<typename Arith::value_type>& y,
                                                     const Arith& ar) {
    using V = typename Arith::value_type;
    if (x.empty() || y.empty()) return {};
    std::vector<V> out(x.size() + y.size() - 1, ar.zero());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < y.size(); ++j) {
            if (y[j] == 0) continue;
            ar.add_to(out[i + j], ar.mul(x[i], y[j]));
        }
    }
    return out;
}

std::vector<Int> shifted_elements(const FiniteSet& s) {
    std::vector<Int> v;
    v.reserve(s.size());
    const Int lo = s.min();
    for (Int x : s) v.push_back(checked::sub(x, lo));
    return v;
}

// Chromatic counts with index 0 = sum_i h_i min(A_i).
template <class Arith>
std::vector<typename Arith::value_type> chromatic_raw(const SetTuple& tuple, const HVec& h, const Arith& ar) {
    std::vector<typename Arith::value_type> acc{ar.one()};
    for (std::size_t i = 0; i < tuple.q(); ++i) {
        if (h[i] == 0) continue;
        acc = convolve_raw(acc, multiset_row(shifted_elements(tuple.set(i)), h[i], ar), ar);
    }
    return acc;
}

template <class Arith>
std::vector<typename Arith::value_type> indicator(const FiniteSet& b, const Arith& ar) {
    std::vector<typename Arith::value_type> ind(static_cast<std::size_t>(checked::sub(b.max(), b.min())) + 1, ar.zero());
    for (Int x : b) ind[static_cast<std::size_t>(x - b.min())] = ar.one();
    return ind;
}

Int chromatic_offset(const SetTuple& tuple, const HVec& h) {
    Int off = 0;
    for (std::size_t i = 0; i < tuple.q(); ++i) off = checked::add(off, checked::mul(h[i], tuple.set(i).min()));
    return off;
}

std::vector<BigCount> widen(const std::vector<std::uint64_t>& v) {
    return std::vector<BigCount>(v.begin(), v.end());
}

void check_cap(const std::optional<BigCount>& cap) {
    if (cap && *cap <= 0) fail(ErrorKind::Domain, "saturation cap must be positive");
}

bool word_cap(const std::optional<BigCount>& cap) { return cap && *cap <= detail::kMaxWordCap; }

// Dispatch a kernel either to saturating words or to big integers.
template <class Fn>
std::vector<BigCount> with_arith(const std::optional<BigCount>& cap, Fn&& fn) {
    check_cap(cap);
    if (word_cap(cap)) return widen(fn(WordSaturating{cap->convert_to<std::uint64_t>()}));
    return fn(BigArith{cap});
}

FiniteSet threshold_indices(const std::vector<std::uint64_t>& counts, Int offset, std::uint64_t t) {
    std::vector<Int> out;
    for (std::size_t i = 0; i < counts.size(); ++i)
        if (counts[i] >= t) out.push_back(offset + static_cast<Int>(i));
    return FiniteSet::from_sorted(std::move(out));
}

}  // namespace

// --------------------------------------------------------------- CountTable

CountTable::CountTable(Int offset, std::vector<BigCount> counts, std::optional<BigCount> cap)
    : offset_(offset), counts_(std::move(counts)), cap_(std::move(cap)) {
    check_cap(cap_);
    for (const BigCount& c : counts_) {
        if (c < 0) fail(ErrorKind::Domain, "negative count");
        if (cap_ && c > *cap_) fail(ErrorKind::Domain, "count exceeds the saturation cap");
    }
}

BigCount CountTable::at(Int n) const {
    if (n < offset_ || n > last()) return 0;
    return counts_[static_cast<std::size_t>(n - offset_)];
}

BigCount CountTable::total() const {
    BigCount s = 0;
    for (const BigCount& c : counts_) s += c;
    return s;
}

FiniteSet CountTable::support() const { return at_least(1); }

FiniteSet CountTable::at_least(const BigCount& t) const {
    std::vector<Int> out;
    for (std::size_t i = 0; i < counts_.size(); ++i)
        if (counts_[i] >= t) out.push_back(offset_ + static_cast<Int>(i));
    return FiniteSet::from_sorted(std::move(out));
}

// ---------------------------------------------------------------- kernels

CountTable multiset_count_table(const FiniteSet& a, Int h, const std::optional<BigCount>& cap) {
    if (h < 0) fail(ErrorKind::Domain, "h must be nonnegative");
    if (a.is_empty()) fail(ErrorKind::EmptySet, "multiset counts over the empty set");
    if (a.min() != 0) fail(ErrorKind::NotNormalized, "multiset_count_table requires min(A) = 0");
    auto counts = with_arith(cap, [&](const auto& ar) { return multiset_row(a.elements(), h, ar); });
    return CountTable(0, std::move(counts), cap);
}

CountTable chromatic_count_table(const SetTuple& tuple, const HVec& h, const std::optional<BigCount>& cap) {
    require_dimension(tuple, h);
    auto counts = with_arith(cap, [&](const auto& ar) { return chromatic_raw(tuple, h, ar); });
    return CountTable(chromatic_offset(tuple, h), std::move(counts), cap);
}

FiniteSet tfold_set(const SetTuple& tuple, const HVec& h, Int t) {
    if (t < 1) fail(ErrorKind::Domain, "t must be a positive integer");
    require_dimension(tuple, h);
    const auto cap = static_cast<std::uint64_t>(t);
    if (cap <= detail::kMaxWordCap)
        return threshold_indices(detail::saturated_chromatic_counts(tuple, h, cap), chromatic_offset(tuple, h), cap);
    return chromatic_count_table(tuple, h, BigCount(t)).at_least(t);
}

CountTable partition_count_table(const FiniteSet& parts, Int N, const BigCount& cap) {
    if (N < 0) fail(ErrorKind::Domain, "N must be nonnegative");
    for (Int p : parts)
        if (p < 0) fail(ErrorKind::Domain, "partition parts must be nonnegative");
    auto counts = with_arith(cap, [&](const auto& ar) {
        using V = typename std::decay_t<decltype(ar)>::value_type;
        std::vector<V> p(static_cast<std::size_t>(N) + 1, ar.zero());
        p[0] = ar.one();
        for (Int part : parts) {
            if (part == 0) continue;
            const auto step = static_cast<std::size_t>(part);
            for (std::size_t n = step; n < p.size(); ++n)
                if (p[n - step] != 0) ar.add_to(p[n], p[n - step]);
        }
        return p;
    });
    return CountTable(0, std::move(counts), cap);
}

CountTable inhomogeneous_count_table(const SetTuple& tuple, const HVec& h, const FiniteSet& b,
                                     const std::optional<BigCount>& cap) {
    require_dimension(tuple, h);
    if (b.is_empty()) fail(ErrorKind::EmptySet, "translate set B is empty");
    auto counts = with_arith(cap, [&](const auto& ar) { return convolve_raw(chromatic_raw(tuple, h, ar), indicator(b, ar), ar); });
    return CountTable(checked::add(chromatic_offset(tuple, h), b.min()), std::move(counts), cap);
}

FiniteSet inhomogeneous_tfold_set(const SetTuple& tuple, const HVec& h, const FiniteSet& b, Int t) {
    if (t < 1) fail(ErrorKind::Domain, "t must be a positive integer");
    require_dimension(tuple, h);
    if (b.is_empty()) fail(ErrorKind::EmptySet, "translate set B is empty");
    const auto cap = static_cast<std::uint64_t>(t);
    if (cap <= detail::kMaxWordCap) {
        return threshold_indices(detail::saturated_inhomogeneous_counts(tuple, h, b, cap),
                                 checked::add(chromatic_offset(tuple, h), b.min()), cap);
    }
    return inhomogeneous_count_table(tuple, h, b, BigCount(t)).at_least(t);
}

CountTable convolve(const CountTable& x, const CountTable& y, const std::optional<BigCount>& cap) {
    check_cap(cap);
    BigArith ar{cap};
    auto counts = convolve_raw(x.counts(), y.counts(), ar);
    return CountTable(checked::add(x.offset(), y.offset()), std::move(counts), cap);
}

BigCount binomial(Int n, Int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigCount r = 1;
    for (Int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

namespace detail {

std::vector<std::uint64_t> saturated_chromatic_counts(const SetTuple& tuple, const HVec& h, std::uint64_t cap) {
    require_dimension(tuple, h);
    if (cap == 0 || cap > kMaxWordCap) fail(ErrorKind::Domain, "word cap out of range");
    return chromatic_raw(tuple, h, WordSaturating{cap});
}

std::vector<std::uint64_t> saturated_inhomogeneous_counts(const SetTuple& tuple, const HVec& h, const FiniteSet& b,
                                                          std::uint64_t cap) {
    require_dimension(tuple, h);
    if (cap == 0 || cap > kMaxWordCap) fail(ErrorKind::Domain, "word cap out of range");
    const WordSaturating ar{cap};
    return convolve_raw(chromatic_raw(tuple, h, ar), indicator(b, ar), ar);
}

}  // namespace detail

}  // namespace chromsum
