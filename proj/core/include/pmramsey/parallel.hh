#ifndef PMRAMSEY_PARALLEL_HH
#define PMRAMSEY_PARALLEL_HH

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <limits>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace pmramsey {

/// Runs task(i, cutoff) for i in [0, count) on a pool of workers. task returns true
/// when its subtree holds a solution. The result is the least such i; every task
/// below it is run to completion, so the answer does not depend on scheduling.
/// Tasks may poll cutoff and give up once it drops below their own index.
/// The first exception thrown by any task is rethrown after all workers join.
template <typename Task>
auto first_solution_index(std::size_t count, int workers, Task &&task) -> std::optional<std::size_t>
{
    constexpr auto none = std::numeric_limits<std::size_t>::max();
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> cutoff{none};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto work = [&] {
        for (;;) {
            auto i = next.fetch_add(1);
            if (i >= count || i > cutoff.load())
                return;
            try {
                if (task(i, static_cast<const std::atomic<std::size_t> &>(cutoff))) {
                    auto seen = cutoff.load();
                    while (i < seen && ! cutoff.compare_exchange_weak(seen, i)) {
                    }
                }
            }
            catch (...) {
                std::lock_guard lock(failure_mutex);
                if (! failure)
                    failure = std::current_exception();
                cutoff.store(0);
                return;
            }
        }
    };

    auto n_threads = static_cast<std::size_t>(std::max(1, workers));
    if (n_threads == 1 || count <= 1)
        work();
    else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < std::min(n_threads, count); ++t)
            pool.emplace_back(work);
    }

    if (failure)
        std::rethrow_exception(failure);
    auto found = cutoff.load();
    return found == none ? std::nullopt : std::optional<std::size_t>{found};
}

} // namespace pmramsey

#endif
