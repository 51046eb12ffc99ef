#ifndef LAGUERRE_SWEEP_HPP
#define LAGUERRE_SWEEP_HPP

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace laguerre {

// Runs fn(0), ..., fn(parts-1) on up to `threads` worker threads and returns
// the results in part order, so callers that merge in order get the same
// answer for every thread count. The first exception thrown is rethrown.
template <class R>
std::vector<R> run_partitioned(int parts, int threads, const std::function<R(int)>& fn) {
    std::vector<R> out(parts);
    const int workers = std::max(1, std::min(threads, parts));
    if (workers == 1) {
        for (int p = 0; p < parts; ++p) out[p] = fn(p);
        return out;
    }
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) {
        pool.emplace_back([&] {
            for (int p = next++; p < parts; p = next++) {
                try {
                    out[p] = fn(p);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
    return out;
}

}  // namespace laguerre

#endif  // LAGUERRE_SWEEP_HPP
