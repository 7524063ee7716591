#ifndef IDEALZETA_PARALLEL_HPP_
#define IDEALZETA_PARALLEL_HPP_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace idealzeta::detail {

/* Run fn(i) for i in [0, count) on up to `jobs` threads. Work items are
 * handed out through a shared counter; callers write results into
 * per-item slots, so merges are schedule independent. Returns one
 * exception_ptr per item (null when the item succeeded).
 */
template <typename Fn>
std::vector<std::exception_ptr> parallel_for(std::size_t count, unsigned jobs, Fn&& fn)
{
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= count)
                return;
            try {
                fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    unsigned nthreads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
    if (nthreads <= 1) {
        worker();
        return errors;
    }
    std::vector<std::jthread> pool;
    pool.reserve(nthreads);
    for (unsigned t = 0; t < nthreads; ++t)
        pool.emplace_back(worker);
    pool.clear(); // joins
    return errors;
}

} // namespace idealzeta::detail

#endif /* IDEALZETA_PARALLEL_HPP_ */
