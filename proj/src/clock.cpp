// Copyright 2026 The hybrid-anneal Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hybrid/clock.hpp"

#include <stdexcept>
#include <string>

#if defined(__unix__) || defined(__APPLE__)
#include <time.h>
#endif

namespace hybrid {

std::string_view to_string(ClockKind kind) {
  return kind == ClockKind::Measured ? "measured" : "operation-count";
}

ClockKind clock_kind_from_string(std::string_view text) {
  if (text == "measured") return ClockKind::Measured;
  if (text == "operation-count") return ClockKind::OperationCount;
  throw std::invalid_argument("unknown clock kind: " + std::string(text));
}

bool thread_cpu_clock_available() {
#if defined(CLOCK_THREAD_CPUTIME_ID)
  timespec ts{};
  return clock_gettime(CLOCK_THREAD_CPUTIME_ID, &ts) == 0;
#else
  return false;
#endif
}

double thread_cpu_ms() {
#if defined(CLOCK_THREAD_CPUTIME_ID)
  timespec ts{};
  if (clock_gettime(CLOCK_THREAD_CPUTIME_ID, &ts) == 0) {
    return static_cast<double>(ts.tv_sec) * 1e3 +
           static_cast<double>(ts.tv_nsec) * 1e-6;
  }
#endif
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

}  // namespace hybrid
