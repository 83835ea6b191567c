#pragma once

#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace steerkit {

/// Runs fn(i) for every i in [0, n) across up to `workers` threads in
/// contiguous blocks. fn must be safe to call concurrently for distinct i;
/// the first exception thrown by any worker is rethrown on the caller.
inline void parallel_for(long n, int workers, const std::function<void(long)>& fn) {
    if (n <= 0) return;
    if (workers < 1) workers = 1;
    if (workers == 1 || n == 1) {
        for (long i = 0; i < n; ++i) fn(i);
        return;
    }
    const long block_count = std::min<long>(workers, n);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(block_count));
    std::exception_ptr first_error;
    std::mutex error_mutex;
    for (long b = 0; b < block_count; ++b) {
        const long begin = b * n / block_count;
        const long end = (b + 1) * n / block_count;
        pool.emplace_back([&, begin, end] {
            try {
                for (long i = begin; i < end; ++i) fn(i);
            } catch (...) {
                std::scoped_lock lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

} // namespace steerkit
