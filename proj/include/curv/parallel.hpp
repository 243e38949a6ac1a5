#pragma once

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace curv {

// Worker cap from CURV_THREADS (0 or unset = hardware concurrency).
int worker_count();

// Runs f(i) for i in [0, n). Each index is independent; callers write results
// into index i's slot, so the merged output is identical to a sequential run.
// The first exception thrown by any worker is rethrown on the calling thread.
template <typename F>
void parallel_for(int n, F&& f) {
    int workers = worker_count();
    if (workers > n) workers = n;
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) f(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            try {
                for (;;) {
                    int i = next.fetch_add(1, std::memory_order_relaxed);
                    if (i >= n) return;
                    f(i);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace curv
