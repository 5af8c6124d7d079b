#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace clpolar {

// Process-wide worker cap used by the bulk loops. 0 means hardware concurrency.
void set_thread_count(unsigned n);
unsigned thread_count();

// Static block partition of [0, n). Each worker writes only to indices it owns,
// so results are identical for every thread count.
template <class F>
void parallel_for(std::size_t n, F&& f) {
    unsigned t = thread_count();
    if (t <= 1 || n < 2 * t) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(t);
    std::size_t chunk = (n + t - 1) / t;
    for (unsigned k = 0; k < t; ++k) {
        std::size_t lo = k * chunk;
        std::size_t hi = lo + chunk < n ? lo + chunk : n;
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &f] {
            for (std::size_t i = lo; i < hi; ++i) f(i);
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace clpolar
