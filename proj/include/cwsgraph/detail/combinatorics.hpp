// Copyright 2026 The cwsgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CWSGRAPH_DETAIL_COMBINATORICS_HPP
#define CWSGRAPH_DETAIL_COMBINATORICS_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>
#include <vector>

namespace cwsgraph::detail {

inline constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

inline std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
    return a > kSaturated - b ? kSaturated : a + b;
}

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    return a > kSaturated / b ? kSaturated : a * b;
}

/// C(n, k), saturating at 2^64 - 1.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= k; i++) {
        acc = acc * (n - k + i) / i;
        if (acc > kSaturated) return kSaturated;
    }
    return static_cast<std::uint64_t>(acc);
}

inline std::uint64_t saturating_pow(std::uint64_t base, unsigned exp) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < exp; i++) r = saturating_mul(r, base);
    return r;
}

/// Rank of a sorted subset in colex order among subsets of the same size.
inline std::uint64_t colex_rank(const std::vector<std::size_t> &sorted_subset) {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < sorted_subset.size(); i++) {
        r = saturating_add(r, binomial(sorted_subset[i], i + 1));
    }
    return r;
}

/// Thread count to use when the caller passes 0.
inline unsigned default_threads() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Runs body(task) for task in [0, count) on a pool of workers pulling
/// tasks in increasing order. Exceptions are rethrown on the caller.
template <typename Body>
void parallel_tasks(std::size_t count, unsigned threads, Body &&body) {
    if (threads == 0) threads = default_threads();
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
    if (threads <= 1) {
        for (std::size_t t = 0; t < count; t++) body(t);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&]() {
        try {
            for (;;) {
                std::size_t t = next.fetch_add(1);
                if (t >= count) return;
                body(t);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!error) error = std::current_exception();
            next.store(count);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned i = 0; i < threads; i++) pool.emplace_back(worker);
    for (auto &th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace cwsgraph::detail

#endif
