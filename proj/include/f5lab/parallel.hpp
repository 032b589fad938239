#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace f5lab {

inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    return std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
}

/// Runs fn(shard) for shard in [0, shards) on up to `threads` workers. Shards are claimed
/// dynamically, so callers must write results into per-shard slots and merge in shard order.
template <typename Fn>
void parallel_for(int shards, int threads, Fn&& fn) {
    threads = std::min(resolve_threads(threads), std::max(shards, 1));
    if (threads <= 1) {
        for (int s = 0; s < shards; ++s) fn(s);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            try {
                for (int s = next++; s < shards; s = next++) fn(s);
            } catch (...) {
                errors[static_cast<std::size_t>(t)] = std::current_exception();
            }
        });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace f5lab
