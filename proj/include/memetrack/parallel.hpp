#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace memetrack {

inline unsigned clamp_threads(unsigned requested) {
    if (requested == 0) requested = 1;
    return requested;
}

// Runs fn(worker, begin, end) over `workers` contiguous chunks of [0, n).
// Chunk boundaries depend only on (n, workers), so per-worker results can be
// merged in worker order to keep aggregate output independent of scheduling.
template <typename Fn>
void parallel_chunks(std::size_t n, unsigned workers, Fn&& fn) {
    workers = clamp_threads(workers);
    if (workers == 1 || n < 2) {
        fn(0u, std::size_t{0}, n);
        return;
    }
    if (static_cast<std::size_t>(workers) > n) workers = static_cast<unsigned>(n);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        std::size_t begin = n * w / workers;
        std::size_t end = n * (w + 1) / workers;
        pool.emplace_back([&fn, w, begin, end] { fn(w, begin, end); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace memetrack
