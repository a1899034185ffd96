#pragma once

// Asymptotic structure of (h . A)^(t) and (h . A + B)^(t):
//
//   (h . A)^(t) = C ∪ [c, h.a* - d] ∪ (h.a* - D)    for all h ⪰ h_t
//
// Two routes produce (C, c, D, d, h_t):
//   constructive  partition counts over the union of the sets give the
//                 fringes; explicit t-fold witnesses give h_t.
//   empirical     walk the diagonal h = (m, ..., m), read the constants off
//                 the t-fold set and accept the first h carrying a
//                 persistence certificate (see threshold_empirical).
// Both routes end with a check of the predicted set over a box of h.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chromsum/intset.hpp"
#include "chromsum/repcount.hpp"

namespace chromsum {

enum class Strategy { Constructive, Empirical };

std::string_view to_string(Strategy s) noexcept;
/// Throws Parse on an unknown name.
Strategy parse_strategy(std::string_view name);

struct StructureResult {
    FiniteSet C;
    Int c = 0;
    FiniteSet D;
    Int d = 0;
    HVec h_t;
    Strategy strategy = Strategy::Empirical;
    HVec box_lower;
    HVec box_upper;

    friend bool operator==(const StructureResult&, const StructureResult&) = default;
};

/// Fringe of the eventual structure on one side: the isolated set and the
/// start of the interval.
struct Fringe {
    FiniteSet set;
    Int threshold = 0;

    friend bool operator==(const Fringe&, const Fringe&) = default;
};

/// C ∪ [c, right_end - d] ∪ (right_end - D)
FiniteSet predicted_set(const StructureResult& r, Int right_end);

/// k (t a* - 1) a* with k = sum_i (|A_i| - 1) and a* = max_i a_i*.
Int certified_rep_bound(const SetTuple& tuple, Int t);

/// (C_t, c_t) from partition counts over the nonzero elements of the union.
/// DegenerateAlphabet when those elements are exactly {1} and t >= 2.
Fringe compute_ct(const SetTuple& tuple, Int t);
/// (D_t, d_t): compute_ct on the reflected tuple.
Fringe compute_dt(const SetTuple& tuple, Int t);

/// (k - 1)(t a* - 1) a* + 1 for a single set with |A| = k >= 2, min 0 and
/// gcd 1. Domain error otherwise.
Int single_set_threshold(const FiniteSet& a, Int t);

/// multiplicities[i][j] is how often element j of A_i is used in color i.
using Multiplicities = std::vector<std::vector<Int>>;

struct WitnessSet {
    Int n = 0;
    std::vector<Multiplicities> reps;
};

Int represented_value(const SetTuple& tuple, const Multiplicities& m);
/// Number of parts of each color.
HVec parts_per_color(const Multiplicities& m);

/// t pairwise distinct colored representations of n built by residue
/// shifting of a Bezout solution. BoundError below certified_rep_bound;
/// DegenerateAlphabet when only one generator exists and t >= 2.
WitnessSet witness_representations(const SetTuple& tuple, Int n, Int t);

/// True when the partition-count fringes describe the colored counts:
/// t = 1, or no nonzero element carries two colors in the tuple or in its
/// reflection.
bool constructive_applicable(const SetTuple& tuple, Int t);

/// Threshold vector from explicit witnesses on both sides, enlarged so the
/// left and right intervals overlap.
HVec threshold_constructive(const SetTuple& tuple, Int t);

struct SearchLimits {
    Int margin = 3;
    /// Diagonal ceiling; default is 4 times the single-set threshold of the
    /// union.
    std::optional<Int> ceiling;
};

/// Smallest certified threshold on the diagonal, then lowered one
/// coordinate at a time. A point h is certified when the t-fold set at h
/// has the pattern form, its middle interval is at least max_i a_i* long,
/// and every h_i is large enough that counts in both fringes have reached
/// their limits; the pattern then holds for every h' ⪰ h. The result is
/// also checked on [h_t, h_t + margin]. SearchExhausted past the ceiling.
StructureResult threshold_empirical(const SetTuple& tuple, Int t, const SearchLimits& limits = {});

/// tfold_set(tuple, h, t) == predicted set. Domain error if c + d > h.a*.
bool verify_structure(const SetTuple& tuple, Int t, const StructureResult& result, const HVec& h);

/// Runs the chosen route and checks the box [h_t, h_t + margin] before
/// returning; VerificationFailed if the box disagrees.
StructureResult structure_constants(const SetTuple& tuple, Int t, Strategy strategy, Int margin = 3);

/// Requires min(B) = 0. The right end is h.a* + max(B); B = {0} gives the
/// homogeneous constants.
StructureResult structure_constants_inhomogeneous(const SetTuple& tuple, const FiniteSet& b, Int t,
                                                  const SearchLimits& limits = {});

bool verify_structure_inhomogeneous(const SetTuple& tuple, const FiniteSet& b, Int t, const StructureResult& result,
                                    const HVec& h);

/// Every h with lower ⪯ h ⪯ upper, last coordinate fastest.
std::vector<HVec> box_points(const HVec& lower, const HVec& upper);

}  // namespace chromsum
