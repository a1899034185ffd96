#include <algorithm>

#include "chromsum/structure.hpp"
#include "parallel.hpp"

namespace chromsum {

namespace {

// One structure problem: the tuple, the translate set (B = {0} for the
// homogeneous form) and t.
struct Problem {
    const SetTuple& tuple;
    FiniteSet translates;
    Int t;
    SetTuple mirror;

    Problem(const SetTuple& tup, FiniteSet b, Int tt)
        : tuple(tup), translates(std::move(b)), t(tt), mirror(reflect_tuple(tup)) {}

    Int right_end(const HVec& h) const { return checked::add(h.dot(tuple.maxima()), translates.max()); }

    FiniteSet tfold(const HVec& h) const {
        if (translates.size() == 1 && translates.min() == 0) return tfold_set(tuple, h, t);
        return inhomogeneous_tfold_set(tuple, h, translates, t);
    }
};

struct Reading {
    FiniteSet C;
    Int c = 0;
    FiniteSet D;
    Int d = 0;

    friend bool operator==(const Reading&, const Reading&) = default;
};

// Splits S ⊆ [0, R] at the midpoint: c is one past the last gap at or
// left of the midpoint, d mirrors that on the right.
Reading read_constants(const FiniteSet& s, Int right_end) {
    const Int mid = right_end / 2;
    Reading r;
    for (Int n = mid; n >= 0; --n) {
        if (!s.contains(n)) {
            r.c = n + 1;
            break;
        }
    }
    for (Int m = right_end - mid - 1; m >= 0; --m) {
        if (!s.contains(right_end - m)) {
            r.d = m + 1;
            break;
        }
    }
    std::vector<Int> left, right;
    for (Int x : s) {
        if (x <= r.c - 2) left.push_back(x);
        if (right_end - x <= r.d - 2) right.push_back(right_end - x);
    }
    std::sort(right.begin(), right.end());
    r.C = FiniteSet::from_sorted(std::move(left));
    r.D = FiniteSet::from_sorted(std::move(right));
    return r;
}

StructureResult as_result(const Reading& r) {
    StructureResult out;
    out.C = r.C;
    out.c = r.c;
    out.D = r.D;
    out.d = r.d;
    out.strategy = Strategy::Empirical;
    return out;
}

Int smallest_nonzero(const FiniteSet& s) {
    for (Int x : s)
        if (x != 0) return x;
    return 0;
}

// Persistence certificate at h: the set has the pattern form with a middle
// interval of length >= max a_i*, and no count in either fringe can still
// change when some h_i grows. A representation of n uses at most
// n / min(A_i \ {0}) nonzero parts of color i, so the count of every
// n <= c - 1 is final once h_i reaches (c - 1) / min(A_i \ {0}); the right
// fringe is the left fringe of the reflected tuple.
bool certified(const Problem& p, const HVec& h, const FiniteSet& s, const Reading& r) {
    const Int right_end = p.right_end(h);
    if (right_end - r.d - r.c + 1 < p.tuple.max_element()) return false;
    for (std::size_t i = 0; i < p.tuple.q(); ++i) {
        const Int lo = smallest_nonzero(p.tuple.set(i));
        const Int lo_hat = smallest_nonzero(p.mirror.set(i));
        if (lo == 0) continue;
        if (r.c >= 1 && h[i] < (r.c - 1) / lo) return false;
        if (r.d >= 1 && h[i] < (r.d - 1) / lo_hat) return false;
    }
    return s == predicted_set(as_result(r), right_end);
}

struct Probe {
    bool ok = false;
    Reading reading;
};

Probe probe(const Problem& p, const HVec& h) {
    const FiniteSet s = p.tfold(h);
    Probe out;
    out.reading = read_constants(s, p.right_end(h));
    out.ok = certified(p, h, s, out.reading);
    return out;
}

Int default_ceiling(const SetTuple& tuple, Int t) {
    const FiniteSet& u = tuple.set_union();
    const auto k = static_cast<Int>(u.size());
    const Int top = u.max();
    const Int base = checked::add(checked::mul(checked::mul(std::max<Int>(k - 1, 1), checked::sub(checked::mul(t, top), 1)), top), 1);
    return checked::mul(4, base);
}

StructureResult search(const Problem& p, const SearchLimits& limits) {
    if (p.t < 1) fail(ErrorKind::Domain, "t must be a positive integer");
    if (limits.margin < 0) fail(ErrorKind::Domain, "margin must be nonnegative");
    const std::size_t q = p.tuple.q();
    const Int ceiling = limits.ceiling.value_or(default_ceiling(p.tuple, p.t));

    // Certification is monotone along the diagonal (it persists upward),
    // so gallop to a certified point and bisect back to the first one.
    Int lo = -1;  // largest known uncertified
    Int hi = -1;  // smallest known certified
    for (Int m = 0;; m = m == 0 ? 1 : std::min(checked::mul(m, 2), ceiling)) {
        if (probe(p, HVec::diagonal(q, m)).ok) {
            hi = m;
            break;
        }
        lo = m;
        if (m >= ceiling) {
            fail(ErrorKind::SearchExhausted, "no certified structure on the diagonal up to m = " + std::to_string(ceiling));
        }
    }
    while (hi - lo > 1) {
        const Int mid = lo + (hi - lo) / 2;
        (probe(p, HVec::diagonal(q, mid)).ok ? hi : lo) = mid;
    }

    HVec h = HVec::diagonal(q, hi);
    const Reading reading = probe(p, h).reading;
    for (std::size_t i = 0; i < q; ++i) {
        while (h[i] > 0) {
            std::vector<Int> lower = h.coords();
            --lower[i];
            HVec candidate(std::move(lower));
            const Probe pr = probe(p, candidate);
            if (!pr.ok || !(pr.reading == reading)) break;
            h = std::move(candidate);
        }
    }

    StructureResult r = as_result(reading);
    r.h_t = h;
    r.box_lower = h;
    r.box_upper = hvec_add_scalar(h, limits.margin);
    const auto points = box_points(r.box_lower, r.box_upper);
    const bool ok = detail::parallel_all_of(points, [&](const HVec& x) {
        return p.tfold(x) == predicted_set(r, p.right_end(x));
    });
    if (!ok) fail(ErrorKind::VerificationFailed, "certified structure failed on the verification box");
    return r;
}

}  // namespace

StructureResult threshold_empirical(const SetTuple& tuple, Int t, const SearchLimits& limits) {
    require_normalized(tuple);
    return search(Problem(tuple, FiniteSet::make({0}), t), limits);
}

StructureResult structure_constants_inhomogeneous(const SetTuple& tuple, const FiniteSet& b, Int t,
                                                  const SearchLimits& limits) {
    require_normalized(tuple);
    if (b.is_empty()) fail(ErrorKind::EmptySet, "translate set B is empty");
    if (b.min() != 0) fail(ErrorKind::Domain, "translate set B must have min(B) = 0");
    return search(Problem(tuple, b, t), limits);
}

bool verify_structure_inhomogeneous(const SetTuple& tuple, const FiniteSet& b, Int t, const StructureResult& result,
                                    const HVec& h) {
    require_dimension(tuple, h);
    if (b.is_empty()) fail(ErrorKind::EmptySet, "translate set B is empty");
    const Int right_end = checked::add(h.dot(tuple.maxima()), b.max());
    if (checked::add(result.c, result.d) > right_end) {
        fail(ErrorKind::Domain, "c + d exceeds h.a* + b*; the middle interval is malformed at h = " + to_string(h));
    }
    return inhomogeneous_tfold_set(tuple, h, b, t) == predicted_set(result, right_end);
}

}  // namespace chromsum
