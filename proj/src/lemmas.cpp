#include "chromsum/lemmas.hpp"

#include <algorithm>

#include "chromsum/repcount.hpp"

namespace chromsum {

std::string_view to_string(CheckStatus s) noexcept {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skipped: return "skipped";
    }
    return "unknown";
}

namespace {

LemmaCheck verdict(std::string name, bool ok, std::string detail = {}) {
    return {std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail)};
}

// All (t_1, ..., t_q) in [1, t]^q with t_1 ... t_q >= t, capped in number.
std::vector<std::vector<Int>> product_splits(std::size_t q, Int t, std::size_t limit) {
    std::vector<std::vector<Int>> out;
    std::vector<Int> cur(q, 1);
    while (out.size() < limit) {
        BigCount prod = 1;
        for (Int x : cur) prod *= x;
        if (prod >= t) out.push_back(cur);
        std::size_t i = 0;
        while (i < q && cur[i] == t) cur[i++] = 1;
        if (i == q) break;
        ++cur[i];
    }
    return out;
}

}  // namespace

std::vector<LemmaCheck> check_lemmas(const SetTuple& tuple, const HVec& h, Int t, const std::optional<FiniteSet>& b,
                                     std::uint64_t budget) {
    require_normalized(tuple);
    require_dimension(tuple, h);
    if (t < 1) fail(ErrorKind::Domain, "t must be a positive integer");

    std::vector<LemmaCheck> out;
    const CountTable table = chromatic_count_table(tuple, h);
    const FiniteSet support = table.support();
    const FiniteSet tfold = table.at_least(t);
    const Int right_end = h.dot(tuple.maxima());

    {
        bool ok = true;
        for (std::size_t i = 0; i < tuple.q(); ++i)
            ok = ok && support.is_subset_of(chromatic_count_table(tuple, hvec_add_unit(h, i)).support());
        out.push_back(verdict("monotone_inclusion", ok, "h.A ⊆ (h + e_i).A for every i"));
    }
    {
        const FiniteSet wide = multiset_count_table(tuple.set_union(), h.norm()).support();
        out.push_back(verdict("union_bound", support.is_subset_of(wide), "h.A ⊆ ||h|| A"));
    }
    {
        const bool ok = support.is_empty() || (support.min() >= 0 && support.max() <= right_end);
        out.push_back(verdict("support_bounds", ok, "h.A ⊆ [0, h.a*]"));
    }
    {
        bool ok = true;
        const auto splits = product_splits(tuple.q(), t, 64);
        for (const auto& split : splits) {
            FiniteSet acc = FiniteSet::make({0});
            for (std::size_t i = 0; i < tuple.q() && !acc.is_empty(); ++i)
                acc = sumset(acc, multiset_count_table(tuple.set(i), h[i]).at_least(split[i]));
            ok = ok && acc.is_subset_of(tfold);
        }
        out.push_back(verdict("product_lemma", ok,
                              std::to_string(splits.size()) + " splits t_1...t_q >= t"));
    }
    {
        bool ok = true;
        for (const FiniteSet& a : tuple.sets()) {
            const Int top = a.max();
            for (Int c : {Int{0}, Int{1}, Int{7}}) {
                for (Int m : {top, top + 1, 2 * top + 1}) {
                    m = std::max<Int>(m, 1);
                    ok = ok && sumset(FiniteSet::interval(c, c + m - 1), a) == FiniteSet::interval(c, c + m - 1 + top);
                }
            }
        }
        out.push_back(verdict("interval_sum", ok, "[c, c+m-1] + A_i = [c, c+m-1+a_i*] for m >= a_i*"));
    }
    {
        bool ok = true;
        for (const FiniteSet& a : tuple.sets()) {
            const FiniteSet r = reflect(a);
            ok = ok && reflect(r) == a && gcd(r) == gcd(a) && r.min() == 0 && r.max() == a.max();
        }
        out.push_back(verdict("reflection", ok, "reflection is an involution preserving min, max and gcd"));
    }
    {
        const CountTable mirrored = chromatic_count_table(reflect_tuple(tuple), h);
        bool ok = mirrored.offset() == table.offset() && mirrored.size() == table.size();
        for (Int n = 0; ok && n <= right_end; ++n) ok = mirrored.at(n) == table.at(right_end - n);
        out.push_back(verdict("symmetry", ok, "r for the reflected tuple at n equals r at h.a* - n"));
    }
    {
        BigCount expected = 1;
        for (std::size_t i = 0; i < tuple.q(); ++i)
            expected *= binomial(static_cast<Int>(tuple.set(i).size()) + h[i] - 1, h[i]);
        out.push_back(verdict("mass_conservation", table.total() == expected,
                              "total " + table.total().str() + ", expected " + expected.str()));
    }
    {
        const FiniteSet translates = b.value_or(FiniteSet::make({0, 1}));
        const bool ok = tfold.is_empty() || sumset(tfold, translates).is_subset_of(inhomogeneous_tfold_set(tuple, h, translates, t));
        out.push_back(verdict("translation", ok, "S + B ⊆ (h.A + B)^(t) for S = (h.A)^(t)"));
    }
    {
        bool ok = true;
        for (std::size_t i = 0; i < tuple.q() && !tfold.is_empty(); ++i)
            ok = ok && sumset(tfold, tuple.set(i)).is_subset_of(tfold_set(tuple, hvec_add_unit(h, i), t));
        out.push_back(verdict("translation_growth", ok, "(h.A)^(t) + A_i ⊆ ((h + e_i).A)^(t)"));
    }
    {
        if (oracle::representation_space_size(tuple, h) > budget) {
            out.push_back({"oracle_agreement", CheckStatus::Skipped, "representation space exceeds the budget"});
        } else {
            out.push_back(verdict("oracle_agreement", oracle::oracle_count_table(tuple, h, budget) == table,
                                  "convolution counts equal exhaustive enumeration"));
        }
    }
    return out;
}

}  // namespace chromsum
