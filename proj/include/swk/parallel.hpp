#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace swk {

/// Worker count used when a caller passes 0.
inline std::size_t default_parallelism()
{
    return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

/**
 * out[j] = fn(j) for j < n, evaluated on up to `workers` threads. Results
 * land in index order; the first exception thrown by any task is rethrown.
 */
template <class Fn>
auto parallel_map(std::size_t n, Fn fn, std::size_t workers = 0) -> std::vector<decltype(fn(std::size_t{}))>
{
    using R = decltype(fn(std::size_t{}));
    std::vector<R> out(n);
    if (workers == 0)
        workers = default_parallelism();
    workers = std::min(workers, n);
    if (workers <= 1) {
        for (std::size_t j = 0; j < n; ++j)
            out[j] = fn(j);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&] {
        for (std::size_t j; (j = next.fetch_add(1)) < n;) {
            try {
                out[j] = fn(j);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error)
                    error = std::current_exception();
                next = n;
            }
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back(work);
    for (auto& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
    return out;
}

} // namespace swk
