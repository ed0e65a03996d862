#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace daar {

// Process-wide worker budget, set once from the CLI --threads flag.
// Parallelism only ever distributes independent per-element work, so results
// are identical for any count.
namespace threads {

int get_count();
void set_count(int n);

}  // namespace threads

// Runs fn(i) for i in [0, n). Each index is computed exactly once by exactly
// one worker; outputs written per-index stay deterministic.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
    const int budget = threads::get_count();
    if (budget <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(budget), n);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace daar
