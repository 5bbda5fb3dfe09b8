// Copyright 2026 The dqc1sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DQC1_PARALLEL_H
#define DQC1_PARALLEL_H

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace dqc1 {

inline unsigned resolve_threads(unsigned requested) {
    if (requested == 0) {
        return std::max(1u, std::thread::hardware_concurrency());
    }
    return requested;
}

/// Runs fn(i) for i in [0, count) across up to `threads` workers. Each call
/// must write only to its own output slot; callers reduce slots in index
/// order afterwards. The first exception thrown by any call is rethrown.
template <typename Fn>
void parallel_for(size_t count, unsigned threads, Fn &&fn) {
    threads = static_cast<unsigned>(std::min<size_t>(resolve_threads(threads), count));
    if (threads <= 1) {
        for (size_t i = 0; i < count; i++) {
            fn(i);
        }
        return;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (size_t i; (i = next.fetch_add(1)) < count;) {
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
                next.store(count);
            }
        }
    };
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; t++) {
        pool.emplace_back(worker);
    }
    pool.clear();
    if (error) {
        std::rethrow_exception(error);
    }
}

}  // namespace dqc1

#endif  // DQC1_PARALLEL_H
