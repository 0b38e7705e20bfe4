#ifndef GSPEC_PARALLEL_HPP
#define GSPEC_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace gspec {

/// out[i] = f(in[i]) computed on `jobs` threads. The result is independent of
/// the thread count; the first exception thrown by f is rethrown.
template <typename In, typename F>
auto parallel_map(const std::vector<In>& in, int jobs, F f) -> std::vector<decltype(f(in.front()))> {
    using Out = decltype(f(in.front()));
    std::vector<Out> out(in.size());
    if (jobs <= 1 || in.size() < 2) {
        for (std::size_t i = 0; i < in.size(); ++i) out[i] = f(in[i]);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < in.size();) {
            try {
                out[i] = f(in[i]);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                next = in.size();
            }
        }
    };
    std::vector<std::thread> pool;
    const std::size_t n_threads = std::min<std::size_t>(static_cast<std::size_t>(jobs), in.size());
    for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
    return out;
}

}  // namespace gspec

#endif  // GSPEC_PARALLEL_HPP
