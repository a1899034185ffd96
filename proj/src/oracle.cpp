#include "chromsum/oracle.hpp"

#include <functional>
#include <map>

namespace chromsum::oracle {

namespace {

// All non-decreasing sequences of length len over `elems`, lexicographic.
std::vector<std::vector<Int>> nondecreasing_sequences(const std::vector<Int>& elems, Int len) {
    std::vector<std::vector<Int>> out;
    std::vector<Int> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (static_cast<Int>(cur.size()) == len) {
            out.push_back(cur);
            return;
        }
        for (std::size_t j = from; j < elems.size(); ++j) {
            cur.push_back(elems[j]);
            rec(j);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

Int sequence_sum(const std::vector<Int>& seq) {
    Int s = 0;
    for (Int x : seq) s = checked::add(s, x);
    return s;
}

void check_budget(const SetTuple& tuple, const HVec& h, std::uint64_t budget) {
    require_dimension(tuple, h);
    const BigCount space = representation_space_size(tuple, h);
    if (space > budget) {
        fail(ErrorKind::Budget, "enumeration needs " + space.str() + " representations, budget is " +
                                    std::to_string(budget));
    }
}

// Walks the cartesian product of per-color sequences; calls visit(rep, sum).
template <class Visit>
void for_each_representation(const SetTuple& tuple, const HVec& h, Visit&& visit) {
    std::vector<std::vector<std::vector<Int>>> per_color;
    per_color.reserve(tuple.q());
    for (std::size_t i = 0; i < tuple.q(); ++i)
        per_color.push_back(nondecreasing_sequences(tuple.set(i).elements(), h[i]));

    Representation rep(tuple.q());
    std::function<void(std::size_t, Int)> rec = [&](std::size_t color, Int partial) {
        if (color == tuple.q()) {
            visit(rep, partial);
            return;
        }
        for (const auto& seq : per_color[color]) {
            rep[color] = seq;
            rec(color + 1, checked::add(partial, sequence_sum(seq)));
        }
    };
    rec(0, 0);
}

}  // namespace

BigCount representation_space_size(const SetTuple& tuple, const HVec& h) {
    require_dimension(tuple, h);
    BigCount n = 1;
    for (std::size_t i = 0; i < tuple.q(); ++i) {
        const auto k = static_cast<Int>(tuple.set(i).size());
        n *= binomial(k + h[i] - 1, h[i]);
    }
    return n;
}

std::vector<Representation> enumerate_representations(const SetTuple& tuple, const HVec& h, Int n,
                                                      std::uint64_t budget) {
    check_budget(tuple, h, budget);
    std::vector<Representation> out;
    for_each_representation(tuple, h, [&](const Representation& rep, Int sum) {
        if (sum == n) out.push_back(rep);
    });
    return out;
}

CountTable oracle_count_table(const SetTuple& tuple, const HVec& h, std::uint64_t budget) {
    check_budget(tuple, h, budget);
    std::map<Int, BigCount> tally;
    for_each_representation(tuple, h, [&](const Representation&, Int sum) { tally[sum] += 1; });
    const Int lo = tally.begin()->first;
    const Int hi = tally.rbegin()->first;
    std::vector<BigCount> counts(static_cast<std::size_t>(hi - lo) + 1, 0);
    for (const auto& [sum, c] : tally) counts[static_cast<std::size_t>(sum - lo)] = c;
    return CountTable(lo, std::move(counts));
}

std::vector<std::vector<Int>> oracle_partitions(const FiniteSet& parts, Int n) {
    for (Int p : parts)
        if (p < 1) fail(ErrorKind::Domain, "partition parts must be positive");
    if (n < 0) fail(ErrorKind::Domain, "n must be nonnegative");
    std::vector<std::vector<Int>> out;
    std::vector<Int> cur;
    const auto& elems = parts.elements();
    std::function<void(std::size_t, Int)> rec = [&](std::size_t from, Int remaining) {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (std::size_t j = from; j < elems.size() && elems[j] <= remaining; ++j) {
            cur.push_back(elems[j]);
            rec(j, remaining - elems[j]);
            cur.pop_back();
        }
    };
    rec(0, n);
    return out;
}

}  // namespace chromsum::oracle
