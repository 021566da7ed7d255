#ifndef MLAG_PARALLEL_HPP
#define MLAG_PARALLEL_HPP

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace mlag {

// MLL_WORKERS env override, else hardware concurrency.
inline int default_workers() {
    if (const char* env = std::getenv("MLL_WORKERS")) {
        int w = std::atoi(env);
        if (w >= 1) return w;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

// Static block partition of [0, count) over `workers` threads. Each index is
// processed by exactly one worker; callers write results into pre-sized
// slots, so the outcome is independent of the worker count.
inline void parallel_for(std::size_t count, int workers,
                         const std::function<void(std::size_t)>& fn) {
    if (workers <= 0) workers = default_workers();
    if (workers == 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    const std::size_t nthreads = std::min<std::size_t>(workers, count);
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (std::size_t t = 0; t < nthreads; ++t) {
        pool.emplace_back([&, t] {
            for (std::size_t i = t; i < count; i += nthreads) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace mlag

#endif
