#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <type_traits>
#include <vector>

namespace towel {

// Number of workers to use when the caller passes 0.
inline std::size_t default_workers() noexcept
{
    return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

// Evaluates fn(i) for i in [0, count) on up to `workers` threads and returns
// the results in index order, so downstream reductions do not depend on
// scheduling. The first exception thrown by any task is rethrown here.
template <typename Fn>
auto parallel_map(std::size_t count, std::size_t workers, Fn&& fn)
    -> std::vector<std::invoke_result_t<Fn&, std::size_t>>
{
    using Result = std::invoke_result_t<Fn&, std::size_t>;
    std::vector<Result> results(count);
    if (workers == 0) {
        workers = default_workers();
    }
    workers = std::min(workers, std::max<std::size_t>(count, 1));

    constexpr std::size_t kChunk = 64;
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto run = [&] {
        for (;;) {
            const std::size_t begin = next.fetch_add(kChunk);
            if (begin >= count) {
                return;
            }
            const std::size_t end = std::min(count, begin + kChunk);
            try {
                for (std::size_t i = begin; i < end; ++i) {
                    results[i] = fn(i);
                }
            } catch (...) {
                const std::lock_guard lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
                next.store(count);
                return;
            }
        }
    };

    if (workers <= 1) {
        run();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers - 1);
        for (std::size_t w = 1; w < workers; ++w) {
            pool.emplace_back(run);
        }
        run();
    }
    if (error) {
        std::rethrow_exception(error);
    }
    return results;
}

} // namespace towel
