#pragma once

// Deterministic batch reduction. Work is cut into fixed-size batches, each
// batch computes an integer count from its own index, and the counts are
// summed. The result does not depend on the number of worker threads.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace coprime_lab {

inline constexpr std::uint64_t batch_size = std::uint64_t{1} << 16;

inline unsigned default_thread_count() {
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : hc;
}

/// Sum of fn(batch_index, batch_trials) over the batches covering `trials`.
template <typename Fn>
std::uint64_t sum_over_batches(std::uint64_t trials, unsigned threads, Fn&& fn) {
    const std::uint64_t batches = (trials + batch_size - 1) / batch_size;
    auto trials_in = [&](std::uint64_t b) { return b + 1 < batches ? batch_size : trials - b * batch_size; };

    threads = std::max(1u, threads);
    if (threads == 1 || batches <= 1) {
        std::uint64_t total = 0;
        for (std::uint64_t b = 0; b < batches; ++b) total += fn(b, trials_in(b));
        return total;
    }

    std::vector<std::uint64_t> counts(batches, 0);
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::uint64_t b; (b = next.fetch_add(1)) < batches;) {
            try {
                counts[b] = fn(b, trials_in(b));
            } catch (...) {
                std::scoped_lock lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = batches;
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        const auto n = static_cast<unsigned>(std::min<std::uint64_t>(threads, batches));
        for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);
    std::uint64_t total = 0;
    for (const auto c : counts) total += c;
    return total;
}

}  // namespace coprime_lab
