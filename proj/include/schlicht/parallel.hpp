#ifndef SCHLICHT_PARALLEL_HPP
#define SCHLICHT_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace schlicht {

/// Worker count: SCHLICHT_THREADS if set to a positive integer, else the
/// hardware concurrency.
inline unsigned worker_count()
{
    if (const char *env = std::getenv("SCHLICHT_THREADS")) {
        char *end = nullptr;
        const long n = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && n > 0)
            return static_cast<unsigned>(n);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Calls body(i) for i in [0, n), split into contiguous blocks. Each index is
/// visited exactly once; callers write into per-index slots and reduce
/// afterwards so results do not depend on scheduling.
template <typename Body>
void parallel_for(std::size_t n, Body &&body)
{
    const std::size_t workers = std::min<std::size_t>(worker_count(), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            body(i);
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    const std::size_t block = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t lo = w * block;
        const std::size_t hi = std::min(n, lo + block);
        if (lo >= hi)
            break;
        pool.emplace_back([&body, lo, hi] {
            for (std::size_t i = lo; i < hi; ++i)
                body(i);
        });
    }
}

} // namespace schlicht

#endif
