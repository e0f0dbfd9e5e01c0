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

#pragma once

#include <chrono>
#include <cstdint>
#include <string_view>

namespace hybrid {

/// How durations in ledgers are obtained.
///
/// Measured: wall time for embedding and per-thread processor time for the
/// classical solver. OperationCount: a deterministic clock that charges a
/// fixed cost per unit of counted work, so two runs of the same
/// configuration produce byte-identical reports.
enum class ClockKind { Measured, OperationCount };

std::string_view to_string(ClockKind kind);
ClockKind clock_kind_from_string(std::string_view text);

/// Fixed per-unit charges of the OperationCount clock, in milliseconds.
/// Roughly calibrated against a single core of a 2020-era x86 machine.
namespace work_cost {
inline constexpr double kEmbedUnitMs = 2.0e-5;    // heap pop or edge relaxation
inline constexpr double kBranchNodeMs = 1.0e-4;   // one branch-and-bound node
inline constexpr double kConstraintMs = 2.0e-5;   // one BIP constraint built
inline constexpr double kQuboTermMs = 5.0e-5;     // one QUBO term written
}  // namespace work_cost

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  void restart() { start_ = std::chrono::steady_clock::now(); }
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

/// True when the platform exposes a per-thread CPU clock.
bool thread_cpu_clock_available();

/// Per-thread processor time in ms; falls back to monotonic wall time when
/// thread_cpu_clock_available() is false.
double thread_cpu_ms();

}  // namespace hybrid
