#pragma once

// Minimal fork-join helper for the bulk scans. Work is split into
// contiguous blocks whose results land in caller-owned disjoint slots, so
// the merged output is identical for any thread count.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace mixedrep::parallel {

namespace detail {
inline int initial_thread_count() {
    if (const char* env = std::getenv("MIXEDREP_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<int>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

inline std::atomic<int>& thread_count_storage() {
    static std::atomic<int> count{initial_thread_count()};
    return count;
}
}  // namespace detail

inline int thread_count() { return detail::thread_count_storage().load(); }

// k >= 1 fixes the pool size; k == 0 restores the automatic default.
inline void set_thread_count(int k) {
    detail::thread_count_storage().store(k >= 1 ? k : detail::initial_thread_count());
}

// Runs fn(block_begin, block_end) over a partition of [begin, end).
// Exceptions from workers are rethrown in the calling thread.
template <class Fn>
void for_blocks(int64_t begin, int64_t end, Fn&& fn) {
    const int64_t span = end - begin;
    if (span <= 0) return;
    const int threads = thread_count();
    if (threads <= 1 || span < 2) {
        fn(begin, end);
        return;
    }
    const int64_t blocks = std::min<int64_t>(threads, span);
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(static_cast<size_t>(blocks));
    pool.reserve(static_cast<size_t>(blocks));
    for (int64_t b = 0; b < blocks; ++b) {
        const int64_t lo = begin + span * b / blocks;
        const int64_t hi = begin + span * (b + 1) / blocks;
        pool.emplace_back([&, b, lo, hi] {
            try {
                fn(lo, hi);
            } catch (...) {
                errors[static_cast<size_t>(b)] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

}  // namespace mixedrep::parallel
