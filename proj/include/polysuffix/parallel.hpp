#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace polysuffix {

// CPU stand-in for a block/thread launch configuration: `workers` is the
// pool size (1 = fully sequential), `chunk` the contiguous index range a
// worker claims at a time.
struct parallel_config {
    unsigned workers = 1;
    std::size_t chunk = 1024;
};

// Runs fn(begin, end) over a static chunked partition of [0, n). Chunk c
// goes to worker c % workers, so the assignment is reproducible and every
// index has exactly one writer. The first exception by chunk order is
// rethrown, whichever worker hit it.
template <typename Fn>
void parallel_for(std::size_t n, const parallel_config& cfg, Fn&& fn) {
    const std::size_t chunk = cfg.chunk > 0 ? cfg.chunk : 1;
    const std::size_t chunks = (n + chunk - 1) / chunk;
    const unsigned workers = static_cast<unsigned>(
        std::min<std::size_t>(cfg.workers > 0 ? cfg.workers : 1, chunks > 0 ? chunks : 1));

    if (workers <= 1) {
        for (std::size_t c = 0; c < chunks; ++c) {
            fn(c * chunk, std::min(n, (c + 1) * chunk));
        }
        return;
    }

    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::size_t> error_chunks(workers, SIZE_MAX);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t c = w; c < chunks; c += workers) {
                try {
                    fn(c * chunk, std::min(n, (c + 1) * chunk));
                } catch (...) {
                    errors[w] = std::current_exception();
                    error_chunks[w] = c;
                    return;
                }
            }
        });
    }
    for (auto& t : pool) {
        t.join();
    }

    std::size_t first = SIZE_MAX;
    std::exception_ptr to_throw;
    for (unsigned w = 0; w < workers; ++w) {
        if (errors[w] && error_chunks[w] < first) {
            first = error_chunks[w];
            to_throw = errors[w];
        }
    }
    if (to_throw) {
        std::rethrow_exception(to_throw);
    }
}

}  // namespace polysuffix
