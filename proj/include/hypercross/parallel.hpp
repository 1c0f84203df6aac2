#pragma once

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace hypercross {

// Worker count: explicit argument wins, then the HYPERCROSS_WORKERS
// environment variable, then hardware concurrency.
inline unsigned worker_count(unsigned requested = 0) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("HYPERCROSS_WORKERS")) {
        const int n = std::atoi(env);
        if (n > 0) return static_cast<unsigned>(n);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

// Runs body(i) for i in [0, count) across `workers` threads with a static
// chunked partition. Callers keep determinism by writing only to slot i of
// a preallocated result vector.
template <typename Body>
void parallel_for(std::size_t count, unsigned workers, Body&& body) {
    workers = worker_count(workers);
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    if (workers > count) workers = static_cast<unsigned>(count);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += workers) body(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace hypercross
