// Copyright 2026 The appd Authors
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

#include <chrono>

#include "appd/error.hpp"

namespace appd {

/// Wall-clock budget polled by algorithms between outer-loop iterations.
/// A default-constructed deadline never expires.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  Deadline() = default;
  explicit Deadline(Clock::time_point at) : at_(at), bounded_(true) {}

  static Deadline after(std::chrono::duration<double> budget) {
    return Deadline(Clock::now() +
                    std::chrono::duration_cast<Clock::duration>(budget));
  }

  bool bounded() const noexcept { return bounded_; }
  bool expired() const noexcept { return bounded_ && Clock::now() >= at_; }

  void check() const {
    if (expired()) throw TimeoutExpired();
  }

 private:
  Clock::time_point at_{};
  bool bounded_ = false;
};

}  // namespace appd
