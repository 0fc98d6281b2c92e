#pragma once

#include <algorithm>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace weyl {

// Runs fn(i) for i in [0, count) across up to `threads` workers. Results must
// be written to preallocated per-index slots so the outcome is independent of
// the thread count. The first exception thrown is rethrown on the caller.
inline void parallel_for(long long count, int threads, const std::function<void(long long)>& fn) {
    if (count <= 0) return;
    int t = std::max(1, threads);
    t = static_cast<int>(std::min<long long>(t, count));
    if (t == 1) {
        for (long long i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(t);
    for (int w = 0; w < t; ++w) {
        pool.emplace_back([&, w]() {
            try {
                for (long long i = w; i < count; i += t) fn(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& err : errors) {
        if (err) std::rethrow_exception(err);
    }
}

inline int default_thread_count() {
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

}  // namespace weyl
