#ifndef TSL_PARALLEL_HPP
#define TSL_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace tsl {

/// Worker count: TSL_THREADS if set and positive, else the hardware concurrency.
int worker_count();

/// Calls body(i) for every i < count on up to `workers` threads. Indices are
/// handed out dynamically; the first exception thrown is rethrown here.
template <typename Body>
void parallel_for(std::size_t count, Body&& body, int workers = worker_count())
{
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                body(i);
            }
            catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                next = count;
            }
        }
    };
    std::vector<std::thread> pool;
    const auto n = static_cast<std::size_t>(workers) < count ? static_cast<std::size_t>(workers) : count;
    for (std::size_t t = 0; t < n; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

} // namespace tsl

#endif
