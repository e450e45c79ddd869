// Copyright 2026 The ternhash Authors.
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

#pragma once

#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace ternhash {

inline unsigned resolve_thread_count(int threads) {
    if (threads > 0) {
        return static_cast<unsigned>(threads);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// Runs fn(begin, end) over disjoint contiguous index ranges covering [0, n).
// Callers must write results into per-index slots only, so the outcome is
// identical for any thread count. The first exception thrown by any chunk is
// rethrown on the calling thread.
template <typename Fn>
void parallel_for(size_t n, int threads, Fn&& fn) {
    const unsigned want = resolve_thread_count(threads);
    if (n == 0) {
        return;
    }
    const size_t workers = want < n ? want : n;
    if (workers <= 1) {
        fn(size_t{0}, n);
        return;
    }

    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);

    const size_t chunk = (n + workers - 1) / workers;
    for (size_t w = 0; w < workers; ++w) {
        const size_t begin = w * chunk;
        const size_t end = begin + chunk < n ? begin + chunk : n;
        if (begin >= end) {
            break;
        }
        pool.emplace_back([&, begin, end] {
            try {
                fn(begin, end);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) {
                    first_error = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) {
        t.join();
    }
    if (first_error) {
        std::rethrow_exception(first_error);
    }
}

}  // namespace ternhash
