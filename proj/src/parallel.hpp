#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace chromsum::detail {

// Evaluates pred on every item, possibly concurrently. The answer does not
// depend on scheduling; the first exception (by item order) is rethrown.
template <class T, class Pred>
bool parallel_all_of(const std::vector<T>& items, Pred pred) {
    const std::size_t n = items.size();
    if (n == 0) return true;
    const std::size_t workers = std::min<std::size_t>(n, std::max(1u, std::thread::hardware_concurrency()));
    std::vector<char> ok(n, 1);
    std::vector<std::exception_ptr> errors(n);
    std::atomic<std::size_t> next{0};
    auto run = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                ok[i] = pred(items[i]) ? 1 : 0;
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (workers == 1) {
        run();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run);
        for (auto& th : pool) th.join();
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
}

}  // namespace chromsum::detail
