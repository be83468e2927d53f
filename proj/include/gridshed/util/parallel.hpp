#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace gridshed::util {

// Runs fn over [0, n) split into per-thread contiguous ranges.  Chunk
// boundaries depend only on n and jobs, so writers indexing into
// pre-sized output arrays produce identical results for any job count.
inline void parallel_for(std::size_t n, int jobs,
                         const std::function<void(std::size_t, std::size_t)>& fn) {
    if (n == 0) return;
    std::size_t workers = jobs > 0 ? static_cast<std::size_t>(jobs)
                                   : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min(workers, n);
    if (workers <= 1) {
        fn(0, n);
        return;
    }
    std::vector<std::thread> threads;
    threads.reserve(workers);
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(n, begin + chunk);
        if (begin >= end) break;
        threads.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
    for (auto& t : threads) t.join();
}

}  // namespace gridshed::util
