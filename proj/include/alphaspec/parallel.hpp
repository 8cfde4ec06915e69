#ifndef ALPHASPEC_PARALLEL_HPP
#define ALPHASPEC_PARALLEL_HPP

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace alphaspec {

inline unsigned default_jobs() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Runs fn(shard, begin, end) on contiguous shards of [0, count). Shard
/// boundaries are deterministic for a given (count, jobs); callers merge shard
/// results associatively so the outcome is independent of jobs.
inline void parallel_shards(size_t count, unsigned jobs,
                            const std::function<void(unsigned, size_t, size_t)>& fn) {
    if (jobs <= 1 || count < 2) {
        fn(0, 0, count);
        return;
    }
    const unsigned workers = static_cast<unsigned>(std::min<size_t>(jobs, count));
    std::vector<std::thread> threads;
    threads.reserve(workers);
    const size_t chunk = (count + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const size_t begin = static_cast<size_t>(w) * chunk;
        const size_t end = std::min(count, begin + chunk);
        if (begin >= end) break;
        threads.emplace_back([&fn, w, begin, end] { fn(w, begin, end); });
    }
    for (auto& t : threads) t.join();
}

} // namespace alphaspec

#endif
