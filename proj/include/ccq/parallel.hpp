#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace ccq {

// Runs fn(i) for i in [0, n) across `jobs` threads. Work items must be
// independent; result merging is the caller's job (indexed slots keep
// parallel runs identical to serial ones).
inline void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& fn) {
    if (jobs <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    unsigned t = std::min<std::size_t>(jobs, n);
    pool.reserve(t);
    for (unsigned i = 0; i < t; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

inline unsigned default_jobs() {
    unsigned h = std::thread::hardware_concurrency();
    return h ? h : 1;
}

}  // namespace ccq
