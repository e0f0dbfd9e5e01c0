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
#include <map>
#include <span>
#include <string>
#include <vector>

#include "hybrid/graph.hpp"

namespace hybrid {

/// Position of a qubit inside a Chimera grid. `side` 0 is the left half of
/// the K_{4,4} cell, 1 the right half.
struct ChimeraCoord {
  int row = 0;
  int col = 0;
  int side = 0;
  int index = 0;
  friend bool operator==(const ChimeraCoord&, const ChimeraCoord&) = default;
};

/// k x k grid of K_{4,4} cells. Qubit ids are ((row*k + col)*2 + side)*4 + index.
/// Left-side qubits couple to the equal-index left qubit of the horizontally
/// adjacent cells; right-side qubits to the vertically adjacent cells.
/// Inactive qubits keep their id but have no couplers.
class ChimeraGraph {
 public:
  int grid_size() const noexcept { return k_; }
  /// Size of the id space, 8k^2, including inactive qubits.
  int qubit_count() const noexcept { return static_cast<int>(active_.size()); }
  int active_count() const noexcept { return active_count_; }
  bool is_active(int q) const { return active_.at(q); }
  const std::vector<int>& neighbors(int q) const { return adjacency_.at(q); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::vector<int> inactive_qubits() const;
  bool adjacent(int a, int b) const;

  int qubit(const ChimeraCoord& c) const { return ((c.row * k_ + c.col) * 2 + c.side) * 4 + c.index; }
  ChimeraCoord coord(int q) const;

  /// Digest of k and the inactive set.
  std::uint64_t fingerprint() const;

  friend ChimeraGraph build_chimera(int k, std::span<const int> inactive);

 private:
  int k_ = 0;
  int active_count_ = 0;
  std::vector<bool> active_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<Edge> edges_;
};

/// Throws std::invalid_argument for k < 1 or inactive ids outside 0..8k^2-1.
/// Duplicate inactive ids are harmless.
ChimeraGraph build_chimera(int k, std::span<const int> inactive = {});

/// `count` distinct qubit ids drawn uniformly (sorted), for emulating a
/// device with broken qubits.
std::vector<int> random_inactive_qubits(int k, int count, std::uint64_t seed);

/// Degree -> number of active qubits with that degree.
std::map<int, int> degree_histogram(const ChimeraGraph& g);

/// Adjacency-list export in the graph text format, headed by "# chimera k=<k>".
std::string render_chimera(const ChimeraGraph& g);

}  // namespace hybrid
