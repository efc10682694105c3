#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace halfplane {

// Static-chunked index parallelism: every index is computed exactly once into
// caller-owned slots, so results do not depend on the worker count.
template <typename Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn) {
    unsigned hw = std::thread::hardware_concurrency();
    std::size_t nt = threads > 0 ? static_cast<std::size_t>(threads)
                                 : (hw ? hw : 1);
    nt = std::min(nt, n ? n : 1);
    if (nt <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(nt);
    for (std::size_t w = 0; w < nt; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < n; i += nt) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace halfplane
