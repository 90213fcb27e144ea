#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace laserfel {

inline unsigned resolve_threads(unsigned requested) {
    if (requested > 0) return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs f(chunk) for every chunk index in [0, n_chunks). Chunks are dealt to
/// workers round-robin; callers write results into per-chunk slots, so the
/// outcome never depends on the number of workers.
template <class F>
void parallel_chunks(std::size_t n_chunks, unsigned threads, F&& f) {
    const unsigned width =
        static_cast<unsigned>(std::min<std::size_t>(resolve_threads(threads), n_chunks));
    if (width <= 1) {
        for (std::size_t c = 0; c < n_chunks; ++c) f(c);
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(width);
    for (unsigned w = 0; w < width; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t c = w; c < n_chunks; c += width) f(c);
        });
    }
}

}  // namespace laserfel
