#pragma once

#include <cstdlib>
#include <thread>
#include <vector>

#include "cmlab/int128.hpp"

namespace cmlab {

inline int default_threads() {
    if (const char* env = std::getenv("CMLT_THREADS")) {
        int t = std::atoi(env);
        if (t > 0) return t;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? int(hc) : 1;
}

// Split [lo, hi) into contiguous chunks, run fn(chunk_index, chunk_lo,
// chunk_hi) on a pool, join. Callers merge per-chunk results in index order
// so the outcome is schedule-independent.
template <typename Fn>
void parallel_chunks(u64 lo, u64 hi, int threads, const Fn& fn) {
    if (hi <= lo) return;
    u64 span = hi - lo;
    int n = threads < 1 ? 1 : threads;
    if (u64(n) > span) n = int(span);
    if (n == 1) {
        fn(0, lo, hi);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(n);
    for (int i = 0; i < n; ++i) {
        u64 a = lo + span * u64(i) / u64(n);
        u64 b = lo + span * u64(i + 1) / u64(n);
        pool.emplace_back([&, i, a, b] { fn(i, a, b); });
    }
    for (auto& t : pool) t.join();
}

} // namespace cmlab
