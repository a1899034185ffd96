#pragma once

// Exhaustive enumeration used as ground truth for the counting kernels.
// Deliberately naive; the counting itself does not use the repcount kernels.

#include <cstdint>
#include <vector>

#include "chromsum/intset.hpp"
#include "chromsum/repcount.hpp"

namespace chromsum::oracle {

inline constexpr std::uint64_t kDefaultBudget = 1'000'000;

/// One colored representation: per color, a non-decreasing sequence of
/// h_i elements of A_i.
using Representation = std::vector<std::vector<Int>>;

/// prod_i binomial(|A_i| + h_i - 1, h_i)
BigCount representation_space_size(const SetTuple& tuple, const HVec& h);

/// Every representation of n, in lexicographic order (color 1 first).
/// BudgetError when the representation space exceeds `budget`.
std::vector<Representation> enumerate_representations(const SetTuple& tuple, const HVec& h, Int n,
                                                      std::uint64_t budget = kDefaultBudget);

/// Entry n is the number of enumerated representations of n.
CountTable oracle_count_table(const SetTuple& tuple, const HVec& h, std::uint64_t budget = kDefaultBudget);

/// Every multiset of parts summing to n as a non-decreasing sequence, in
/// lexicographic order. Parts must be positive.
std::vector<std::vector<Int>> oracle_partitions(const FiniteSet& parts, Int n);

}  // namespace chromsum::oracle
