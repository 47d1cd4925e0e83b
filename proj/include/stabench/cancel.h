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


#ifndef STABENCH_CANCEL_H
#define STABENCH_CANCEL_H

#include <atomic>
#include <chrono>
#include <optional>

namespace stabench {

/// Cooperative cancellation: an explicit flag and an optional deadline.
class CancelToken {
   public:
    using Clock = std::chrono::steady_clock;

    CancelToken() = default;
    explicit CancelToken(Clock::time_point deadline) : deadline_(deadline) {
    }

    void cancel() {
        flag_.store(true, std::memory_order_relaxed);
    }
    bool cancelled() const {
        if (flag_.load(std::memory_order_relaxed)) {
            return true;
        }
        return deadline_.has_value() && Clock::now() >= *deadline_;
    }
    const std::optional<Clock::time_point> &deadline() const {
        return deadline_;
    }

   private:
    std::atomic<bool> flag_{false};
    std::optional<Clock::time_point> deadline_;
};

}  // namespace stabench

#endif
