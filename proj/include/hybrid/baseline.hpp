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

#include <cstdint>
#include <span>
#include <vector>

#include "hybrid/clock.hpp"
#include "hybrid/graph.hpp"

namespace hybrid {

/// One x_i + x_j <= 1 constraint per edge, in canonical (sorted) order.
using ConstraintList = std::vector<Edge>;

ConstraintList build_constraints(const WeightedGraph& graph);

enum class BoundKind {
  UndecidedSum,  // current weight + weight of every undecided vertex
  CliqueCover,   // greedy clique cover: only the heaviest vertex per clique counts
};

struct BipOptions {
  BoundKind bound = BoundKind::UndecidedSum;
  /// Solve disconnected parts of the undecided subgraph independently.
  bool split_components = true;
};

struct BipSolution {
  std::vector<int> vertices;  // ascending
  double weight = 0.0;
  std::uint64_t nodes = 0;    // search nodes visited
};

/// Exact maximum-weight independent set of the binary program
///   max sum w_i x_i  s.t.  x_i + x_j <= 1 for every constraint.
/// Branches on the heaviest undecided vertex (include first). Among
/// co-optimal sets the lexicographically smallest index list is returned;
/// weights within 1e-9 * (1 + sum w) count as equal.
BipSolution solve_bip(const ConstraintList& constraints, std::span<const double> weights,
                      const BipOptions& options = {});

struct ClassicalRun {
  std::vector<BipSolution> optima;          // one per weight assignment
  std::vector<double> assignment_ms;        // solve time per assignment
  double constraint_ms = 0.0;               // the single constraint build
  double total_ms = 0.0;                    // T_C
  int constraint_builds = 0;
  ClockKind clock = ClockKind::Measured;
  bool processor_time = true;               // false: wall-time fallback
};

/// Builds the constraints once and solves every weight assignment.
/// T_C is processor time (or operation-count time) including the build.
ClassicalRun solve_dwmwis_classical(const DwmwisInstance& instance,
                                    ClockKind clock = ClockKind::Measured,
                                    const BipOptions& options = {});

}  // namespace hybrid
