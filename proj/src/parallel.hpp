#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace rrcolor::detail {

/// Evaluates fn(0..count-1) on up to `threads` workers; results come back in
/// index order whatever the scheduling.
template <class Fn>
auto parallel_map(int count, int threads, Fn fn) -> std::vector<decltype(fn(0))>
{
    using Result = decltype(fn(0));
    std::vector<Result> results(static_cast<std::size_t>(std::max(count, 0)));
    if (count <= 0)
        return results;
    const int workers = std::clamp(threads, 1, count);
    if (workers == 1) {
        for (int i = 0; i < count; ++i)
            results[static_cast<std::size_t>(i)] = fn(i);
        return results;
    }

    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (int i = next++; i < count; i = next++) {
                try {
                    results[static_cast<std::size_t>(i)] = fn(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error)
                        error = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
    return results;
}

}  // namespace rrcolor::detail
