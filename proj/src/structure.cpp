#include "chromsum/structure.hpp"

#include <algorithm>
#include <tuple>

#include "parallel.hpp"

namespace chromsum {

std::string_view to_string(Strategy s) noexcept {
    return s == Strategy::Constructive ? "constructive" : "empirical";
}

Strategy parse_strategy(std::string_view name) {
    if (name == "constructive") return Strategy::Constructive;
    if (name == "empirical") return Strategy::Empirical;
    fail(ErrorKind::Parse, "unknown strategy '" + std::string(name) + "'");
}

FiniteSet predicted_set(const StructureResult& r, Int right_end) {
    std::vector<Int> out(r.C.begin(), r.C.end());
    for (Int n = r.c; n <= right_end - r.d; ++n) out.push_back(n);
    for (Int x : r.D) out.push_back(checked::sub(right_end, x));
    return out.empty() ? FiniteSet::empty() : FiniteSet::make(out);
}

std::vector<HVec> box_points(const HVec& lower, const HVec& upper) {
    if (!hvec_leq(lower, upper)) fail(ErrorKind::Domain, "box corners are not ordered");
    std::vector<HVec> out;
    std::vector<Int> cur = lower.coords();
    while (true) {
        out.emplace_back(cur);
        std::size_t i = cur.size();
        while (i > 0) {
            --i;
            if (cur[i] < upper[i]) {
                ++cur[i];
                break;
            }
            cur[i] = lower[i];
            if (i == 0) return out;
        }
        if (cur.empty()) return out;
    }
}

// ------------------------------------------------------------- fringes

Int certified_rep_bound(const SetTuple& tuple, Int t) {
    require_normalized(tuple);
    if (t < 1) fail(ErrorKind::Domain, "t must be a positive integer");
    Int k = 0;
    for (const FiniteSet& s : tuple.sets()) k = checked::add(k, static_cast<Int>(s.size()) - 1);
    const Int top = tuple.max_element();
    return checked::mul(checked::mul(k, checked::sub(checked::mul(t, top), 1)), top);
}

namespace {

FiniteSet nonzero_part(const FiniteSet& s) {
    std::vector<Int> v;
    for (Int x : s)
        if (x != 0) v.push_back(x);
    return FiniteSet::from_sorted(std::move(v));
}

bool degenerate_alphabet(const SetTuple& tuple) {
    const FiniteSet parts = nonzero_part(tuple.set_union());
    return parts.size() == 1 && parts.min() == 1;
}

}  // namespace

Fringe compute_ct(const SetTuple& tuple, Int t) {
    const Int bound = certified_rep_bound(tuple, t);
    if (t >= 2 && degenerate_alphabet(tuple)) {
        fail(ErrorKind::DegenerateAlphabet,
             "the only nonzero part is 1, so every n has exactly one partition and c_t does not exist for t >= 2");
    }
    const CountTable p = partition_count_table(nonzero_part(tuple.set_union()), bound, BigCount(t));
    Int last_failure = -1;
    for (Int n = bound; n >= 0; --n) {
        if (p.at(n) < t) {
            last_failure = n;
            break;
        }
    }
    if (last_failure == bound) {
        fail(ErrorKind::VerificationFailed, "partition count below t at the certified bound");
    }
    Fringe f;
    f.threshold = last_failure + 1;
    std::vector<Int> isolated;
    for (Int n = 0; n <= f.threshold - 2; ++n)
        if (p.at(n) >= t) isolated.push_back(n);
    f.set = FiniteSet::from_sorted(std::move(isolated));
    return f;
}

Fringe compute_dt(const SetTuple& tuple, Int t) {
    require_normalized(tuple);
    return compute_ct(reflect_tuple(tuple), t);
}

Int single_set_threshold(const FiniteSet& a, Int t) {
    if (t < 1) fail(ErrorKind::Domain, "t must be a positive integer");
    if (a.size() < 2) fail(ErrorKind::Domain, "the single-set threshold needs |A| >= 2");
    if (a.min() != 0 || gcd(a) != 1) fail(ErrorKind::Domain, "the single-set threshold needs min(A) = 0 and gcd(A) = 1");
    const auto k = static_cast<Int>(a.size());
    const Int top = a.max();
    return checked::add(checked::mul(checked::mul(k - 1, checked::sub(checked::mul(t, top), 1)), top), 1);
}

// ------------------------------------------------------------ witnesses

Int represented_value(const SetTuple& tuple, const Multiplicities& m) {
    if (m.size() != tuple.q()) fail(ErrorKind::Dimension, "multiplicities do not match the tuple");
    Int sum = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        const auto& elems = tuple.set(i).elements();
        if (m[i].size() != elems.size()) fail(ErrorKind::Dimension, "multiplicities do not match set " + std::to_string(i + 1));
        for (std::size_t j = 0; j < elems.size(); ++j) sum = checked::add(sum, checked::mul(m[i][j], elems[j]));
    }
    return sum;
}

HVec parts_per_color(const Multiplicities& m) {
    std::vector<Int> out;
    out.reserve(m.size());
    for (const auto& row : m) {
        Int s = 0;
        for (Int x : row) s = checked::add(s, x);
        out.push_back(s);
    }
    return HVec(std::move(out));
}

namespace {

struct Generator {
    std::size_t color;
    std::size_t index;
    Int value;
};

// g = gcd(a, b) >= 0 with a x + b y = g.
std::tuple<BigCount, BigCount, BigCount> extended_gcd(BigCount a, BigCount b) {
    BigCount x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        const BigCount q = a / b;
        BigCount r = a - q * b;
        a = std::move(b);
        b = std::move(r);
        BigCount x2 = x0 - q * x1;
        x0 = std::move(x1);
        x1 = std::move(x2);
        BigCount y2 = y0 - q * y1;
        y0 = std::move(y1);
        y1 = std::move(y2);
    }
    if (a < 0) return {BigCount(-a), BigCount(-x0), BigCount(-y0)};
    return {a, x0, y0};
}

Multiplicities zero_multiplicities(const SetTuple& tuple) {
    Multiplicities m;
    m.reserve(tuple.q());
    for (const FiniteSet& s : tuple.sets()) m.emplace_back(s.size(), 0);
    return m;
}

}  // namespace

WitnessSet witness_representations(const SetTuple& tuple, Int n, Int t) {
    const Int bound = certified_rep_bound(tuple, t);
    std::vector<Generator> gens;
    for (std::size_t i = 0; i < tuple.q(); ++i) {
        const auto& elems = tuple.set(i).elements();
        for (std::size_t j = 0; j < elems.size(); ++j)
            if (elems[j] != 0) gens.push_back({i, j, elems[j]});
    }
    const Int top = tuple.max_element();
    if (gens.size() == 1 && t >= 2) {
        fail(ErrorKind::DegenerateAlphabet, "a single generator admits only one representation of each n");
    }
    if (n < bound) {
        fail(ErrorKind::Bound, "n = " + std::to_string(n) + " is below the certified bound " + std::to_string(bound));
    }
    const auto pivot = static_cast<std::size_t>(
        std::find_if(gens.begin(), gens.end(), [&](const Generator& g) { return g.value == top; }) - gens.begin());

    // Bezout coefficients folded left to right: sum coef[g] * value[g] = 1.
    std::vector<BigCount> coef{1};
    BigCount g = gens.front().value;
    for (std::size_t k = 1; k < gens.size(); ++k) {
        auto [next, u, v] = extended_gcd(g, gens[k].value);
        for (BigCount& c : coef) c *= u;
        coef.push_back(v);
        g = next;
    }
    if (g != 1) fail(ErrorKind::NotNormalized, "gcd of the generators is not 1");

    WitnessSet out;
    out.n = n;
    for (Int s = 1; s <= t; ++s) {
        Multiplicities m = zero_multiplicities(tuple);
        Int rest = 0;
        const Int window = checked::mul(s - 1, top);
        for (std::size_t k = 0; k < gens.size(); ++k) {
            if (k == pivot) continue;
            BigCount r = (BigCount(n) * coef[k]) % top;
            if (r < 0) r += top;
            const Int x = checked::add(window, r.convert_to<Int>());
            m[gens[k].color][gens[k].index] = x;
            rest = checked::add(rest, checked::mul(x, gens[k].value));
        }
        const Int remainder = checked::sub(n, rest);
        if (remainder < 0 || remainder % top != 0) {
            fail(ErrorKind::Bound, "residue construction produced a negative or fractional pivot coefficient");
        }
        m[gens[pivot].color][gens[pivot].index] = remainder / top;
        out.reps.push_back(std::move(m));
    }
    return out;
}

bool constructive_applicable(const SetTuple& tuple, Int t) {
    if (t == 1) return true;
    return colors_disjoint_off_zero(tuple) && colors_disjoint_off_zero(reflect_tuple(tuple));
}

// ------------------------------------------------- constructive threshold

namespace {

// First `count` partitions of n into nonzero union elements, largest parts
// first, each part colored by the smallest color containing it. Returns
// the per-color part counts of each.
std::vector<HVec> small_witness_profiles(const SetTuple& tuple, Int n, Int count) {
    std::vector<Int> parts(nonzero_part(tuple.set_union()).elements());
    std::reverse(parts.begin(), parts.end());
    std::vector<std::size_t> color_of(parts.size());
    for (std::size_t j = 0; j < parts.size(); ++j) {
        for (std::size_t i = 0; i < tuple.q(); ++i) {
            if (tuple.set(i).contains(parts[j])) {
                color_of[j] = i;
                break;
            }
        }
    }

    // reach[j][m]: m is a sum of parts[j..].
    const auto width = static_cast<std::size_t>(n) + 1;
    std::vector<std::vector<char>> reach(parts.size() + 1, std::vector<char>(width, 0));
    reach[parts.size()][0] = 1;
    for (std::size_t j = parts.size(); j-- > 0;) {
        const auto step = static_cast<std::size_t>(parts[j]);
        for (std::size_t m = 0; m < width; ++m)
            reach[j][m] = reach[j + 1][m] || (m >= step && reach[j][m - step]);
    }

    std::vector<HVec> out;
    std::vector<Int> per_color(tuple.q(), 0);
    // Every branch taken leads to a partition.
    auto descend = [&](auto&& self, std::size_t from, Int remaining) -> void {
        if (static_cast<Int>(out.size()) >= count) return;
        if (remaining == 0) {
            out.emplace_back(per_color);
            return;
        }
        for (std::size_t j = from; j < parts.size(); ++j) {
            if (parts[j] > remaining) continue;
            const auto rest = static_cast<std::size_t>(remaining - parts[j]);
            if (!reach[j][rest]) continue;
            ++per_color[color_of[j]];
            self(self, j, remaining - parts[j]);
            --per_color[color_of[j]];
            if (static_cast<Int>(out.size()) >= count) return;
        }
    };
    if (reach[0][static_cast<std::size_t>(n)]) descend(descend, 0, n);
    if (static_cast<Int>(out.size()) < count) {
        fail(ErrorKind::VerificationFailed, "fewer than t partitions of " + std::to_string(n));
    }
    return out;
}

// sup of h(n) over n in F ∪ [f, f + a* - 1].
HVec side_threshold(const SetTuple& tuple, Int t, const Fringe& fringe) {
    const Int bound = certified_rep_bound(tuple, t);
    std::vector<Int> targets(fringe.set.begin(), fringe.set.end());
    for (Int n = fringe.threshold; n <= fringe.threshold + tuple.max_element() - 1; ++n) targets.push_back(n);

    HVec h0 = HVec::zeros(tuple.q());
    for (Int n : targets) {
        std::vector<HVec> profiles;
        if (n >= bound) {
            for (const Multiplicities& m : witness_representations(tuple, n, t).reps) profiles.push_back(parts_per_color(m));
        } else {
            profiles = small_witness_profiles(tuple, n, t);
        }
        profiles.push_back(h0);
        h0 = hvec_sup(profiles);
    }
    return h0;
}

}  // namespace

HVec threshold_constructive(const SetTuple& tuple, Int t) {
    require_normalized(tuple);
    const Fringe left = compute_ct(tuple, t);
    const Fringe right = compute_dt(tuple, t);
    const SetTuple mirror = reflect_tuple(tuple);
    const Int top = tuple.max_element();
    const auto& amax = tuple.maxima();

    const HVec h0 = side_threshold(tuple, t, left);
    const HVec h0_hat = side_threshold(mirror, t, right);
    const Int d_prime = h0.dot(amax) - (left.threshold + top - 1);
    const Int c_prime = h0_hat.dot(amax) - (right.threshold + top - 1);

    HVec h = hvec_sup(h0, h0_hat);
    const Int need = std::max(checked::add(c_prime, d_prime), checked::add(left.threshold, right.threshold));
    const Int have = h.dot(amax);
    if (have < need) {
        const auto widest = static_cast<std::size_t>(std::max_element(amax.begin(), amax.end()) - amax.begin());
        std::vector<Int> coords = h.coords();
        coords[widest] = checked::add(coords[widest], (need - have + top - 1) / top);
        h = HVec(std::move(coords));
    }
    return h;
}

// ----------------------------------------------------------- verification

bool verify_structure(const SetTuple& tuple, Int t, const StructureResult& result, const HVec& h) {
    require_dimension(tuple, h);
    const Int right_end = h.dot(tuple.maxima());
    if (checked::add(result.c, result.d) > right_end) {
        fail(ErrorKind::Domain, "c + d exceeds h.a*; the middle interval is malformed at h = " + to_string(h));
    }
    return tfold_set(tuple, h, t) == predicted_set(result, right_end);
}

StructureResult structure_constants(const SetTuple& tuple, Int t, Strategy strategy, Int margin) {
    require_normalized(tuple);
    if (margin < 0) fail(ErrorKind::Domain, "margin must be nonnegative");
    if (strategy == Strategy::Empirical) return threshold_empirical(tuple, t, SearchLimits{margin, std::nullopt});

    if (!constructive_applicable(tuple, t)) {
        fail(ErrorKind::ColorOverlap,
             "a nonzero element lies in several sets (or in several reflected sets), so colored counts exceed partition counts; use the empirical strategy");
    }
    const Fringe left = compute_ct(tuple, t);
    const Fringe right = compute_dt(tuple, t);
    StructureResult r;
    r.C = left.set;
    r.c = left.threshold;
    r.D = right.set;
    r.d = right.threshold;
    r.h_t = threshold_constructive(tuple, t);
    r.strategy = Strategy::Constructive;
    r.box_lower = r.h_t;
    r.box_upper = hvec_add_scalar(r.h_t, margin);
    const auto points = box_points(r.box_lower, r.box_upper);
    if (!detail::parallel_all_of(points, [&](const HVec& h) { return verify_structure(tuple, t, r, h); })) {
        fail(ErrorKind::VerificationFailed, "constructive constants disagree with the t-fold sets on the verification box");
    }
    return r;
}

}  // namespace chromsum
