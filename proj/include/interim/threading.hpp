#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace interim {

// Static-chunk parallel loop. Workers may only write to disjoint per-index
// slots or accumulate into per-chunk integer counters; any floating-point
// reduction over the results happens sequentially in the caller, so outcomes
// do not depend on the thread count.
template <class Fn>
void parallel_for_chunks(std::size_t n, Fn&& fn) {
    if (n == 0) return;
    unsigned hw = std::thread::hardware_concurrency();
    std::size_t n_threads = std::max<std::size_t>(1, std::min<std::size_t>(hw ? hw : 1, n));
    if (n_threads == 1) {
        fn(std::size_t{0}, n);
        return;
    }
    std::vector<std::thread> workers;
    workers.reserve(n_threads);
    std::size_t chunk = (n + n_threads - 1) / n_threads;
    for (std::size_t t = 0; t < n_threads; ++t) {
        std::size_t lo = t * chunk;
        std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        workers.emplace_back([&fn, lo, hi] { fn(lo, hi); });
    }
    for (auto& w : workers) w.join();
}

}  // namespace interim
