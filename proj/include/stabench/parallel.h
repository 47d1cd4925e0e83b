// Copyright 2026 The stabench Authors
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


#ifndef STABENCH_PARALLEL_H
#define STABENCH_PARALLEL_H

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace stabench {

/// Runs body(i) for i in [begin, end) on `workers` threads (the caller is one of them).
///
/// Items are claimed in increasing order. After a failure, items above the
/// lowest failing index are skipped, so the rethrown exception is always the
/// one from the lowest failing index.
template <typename Body>
void parallel_for(size_t begin, size_t end, unsigned workers, Body &&body) {
    std::atomic<size_t> next{begin};
    std::atomic<size_t> first_failure{end};
    std::vector<std::exception_ptr> errors(end - begin);
    auto worker = [&]() {
        for (size_t i = next++; i < end; i = next++) {
            if (i > first_failure.load()) {
                continue;
            }
            try {
                body(i);
            } catch (...) {
                errors[i - begin] = std::current_exception();
                size_t seen = first_failure.load();
                while (i < seen && !first_failure.compare_exchange_weak(seen, i)) {
                }
            }
        }
    };
    unsigned w = std::max(1u, workers);
    {
        std::vector<std::jthread> pool;
        for (unsigned k = 1; k < w && k < end - begin; k++) {
            pool.emplace_back(worker);
        }
        worker();
    }
    for (auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

}  // namespace stabench

#endif
