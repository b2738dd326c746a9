#ifndef RECRING_PARALLEL_HPP
#define RECRING_PARALLEL_HPP

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace recring {

/// Worker count for batch evaluation: hardware concurrency, optionally
/// capped by the RECRING_THREADS environment variable (a positive
/// integer; anything else is rejected).
inline unsigned thread_budget() {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("RECRING_THREADS")) {
        std::size_t pos = 0;
        unsigned long cap = 0;
        try {
            cap = std::stoul(env, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("RECRING_THREADS must be a positive integer");
        }
        if (pos != std::string(env).size() || cap == 0)
            throw std::invalid_argument("RECRING_THREADS must be a positive integer");
        n = std::min<unsigned long>(n, cap);
    }
    return n;
}

/// Applies `fn` to every index in [from, to] and collects the results in
/// index order. The function must be pure; work is handed out through an
/// atomic counter.
template <typename R, typename Fn>
std::vector<R> parallel_map_range(long long from, long long to, Fn fn) {
    if (to < from)
        return {};
    const auto count = static_cast<std::size_t>(to - from + 1);
    std::vector<R> results(count);
    unsigned workers = static_cast<unsigned>(
        std::min<std::size_t>(count, thread_budget()));
    if (workers <= 1) {
        for (std::size_t k = 0; k < count; ++k)
            results[k] = fn(from + static_cast<long long>(k));
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    auto body = [&]() {
        for (;;) {
            std::size_t k = next.fetch_add(1);
            if (k >= count || failed.load())
                return;
            try {
                results[k] = fn(from + static_cast<long long>(k));
            } catch (...) {
                if (!failed.exchange(true))
                    failure = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back(body);
    for (auto& t : pool)
        t.join();
    if (failed.load())
        std::rethrow_exception(failure);
    return results;
}

} // namespace recring

#endif
