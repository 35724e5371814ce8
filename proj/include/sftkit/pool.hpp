#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace sftkit {

// Worker count resolution: explicit request > SFTKIT_THREADS > 1.
inline int resolve_thread_count(int requested = 0) {
    if (requested >= 1) return requested;
    if (const char* env = std::getenv("SFTKIT_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 1 && v <= 1024) return static_cast<int>(v);
    }
    return 1;
}

// Run fn(task_index) over [0, count) on `threads` workers. Tasks are
// claimed from a shared counter; outputs must be merged by the caller in
// task order so results stay canonical under any worker count.
inline void parallel_for(int threads, size_t count, const std::function<void(size_t)>& fn) {
    threads = std::max(1, threads);
    if (threads == 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= count) return;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    int n = std::min<int>(threads, static_cast<int>(count));
    pool.reserve(static_cast<size_t>(n - 1));
    for (int t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
}

}  // namespace sftkit
