#pragma once

// Instance-level self-test: runs the inclusion, bound, interval-sum,
// reflection and translation identities on one (A, h, t[, B]).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chromsum/intset.hpp"
#include "chromsum/oracle.hpp"

namespace chromsum {

enum class CheckStatus { Pass, Fail, Skipped };

std::string_view to_string(CheckStatus s) noexcept;

struct LemmaCheck {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
};

/// Requires a normalized tuple. When B is absent the translation checks
/// use B = {0, 1}. The oracle comparison is skipped above `budget`.
std::vector<LemmaCheck> check_lemmas(const SetTuple& tuple, const HVec& h, Int t,
                                     const std::optional<FiniteSet>& b = std::nullopt,
                                     std::uint64_t budget = oracle::kDefaultBudget);

}  // namespace chromsum
