#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace dompoly {

/// Worker count for a hint; 0 means one per hardware thread.
inline unsigned resolve_threads(unsigned hint) {
    if (hint != 0) return hint;
    return std::max(1U, std::thread::hardware_concurrency());
}

/// Runs `task(i)` for every i in [0, count) on up to `threads` workers.
///
/// Items are claimed one at a time from a shared counter, so `task` must only
/// write to state owned by item i. The first exception thrown by a task is
/// rethrown on the calling thread after all workers finish.
template <typename Task>
void parallel_for(std::size_t count, unsigned threads, Task&& task) {
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(resolve_threads(threads), count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) task(i);
        return;
    }
    std::mutex lock;
    std::size_t next = 0;
    std::exception_ptr failure;
    auto worker = [&] {
        for (;;) {
            std::size_t i;
            {
                std::lock_guard guard(lock);
                if (next >= count || failure) return;
                i = next++;
            }
            try {
                task(i);
            } catch (...) {
                std::lock_guard guard(lock);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    pool.clear();
    if (failure) std::rethrow_exception(failure);
}

/// Maps every item to a partial result, then folds the partials in index order.
/// With an associative `merge` the result does not depend on the worker count.
template <typename Result, typename Map, typename Merge>
Result parallel_map_reduce(std::size_t count, unsigned threads, Result init, Map&& map, Merge&& merge) {
    std::vector<Result> partials(count, init);
    parallel_for(count, threads, [&](std::size_t i) { partials[i] = map(i); });
    for (auto& partial : partials) merge(init, partial);
    return init;
}

}  // namespace dompoly
