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

#include "hybrid/chimera.hpp"

#include <algorithm>
#include <stdexcept>

#include "hybrid/random.hpp"

namespace hybrid {

ChimeraCoord ChimeraGraph::coord(int q) const {
  ChimeraCoord c;
  c.index = q % 4;
  c.side = (q / 4) % 2;
  const int cell = q / 8;
  c.row = cell / k_;
  c.col = cell % k_;
  return c;
}

std::vector<int> ChimeraGraph::inactive_qubits() const {
  std::vector<int> out;
  for (int q = 0; q < qubit_count(); ++q)
    if (!active_[q]) out.push_back(q);
  return out;
}

bool ChimeraGraph::adjacent(int a, int b) const {
  const auto& list = adjacency_.at(a);
  return std::binary_search(list.begin(), list.end(), b);
}

std::uint64_t ChimeraGraph::fingerprint() const {
  std::uint64_t h = derive_seed(hash_string("chimera"), static_cast<std::uint64_t>(k_));
  for (const int q : inactive_qubits()) h = derive_seed(h, static_cast<std::uint64_t>(q));
  return h;
}

ChimeraGraph build_chimera(int k, std::span<const int> inactive) {
  if (k < 1) throw std::invalid_argument("Chimera grid size must be at least 1");
  ChimeraGraph g;
  g.k_ = k;
  const int n = 8 * k * k;
  g.active_.assign(n, true);
  for (const int q : inactive) {
    if (q < 0 || q >= n) {
      throw std::invalid_argument("inactive qubit " + std::to_string(q) + " outside 0.." +
                                  std::to_string(n - 1));
    }
    g.active_[q] = false;
  }
  g.active_count_ = static_cast<int>(std::count(g.active_.begin(), g.active_.end(), true));

  auto couple = [&](int a, int b) {
    if (g.active_[a] && g.active_[b]) g.edges_.emplace_back(std::min(a, b), std::max(a, b));
  };
  for (int row = 0; row < k; ++row) {
    for (int col = 0; col < k; ++col) {
      for (int i = 0; i < 4; ++i) {
        const int left = g.qubit({row, col, 0, i});
        const int right = g.qubit({row, col, 1, i});
        for (int j = 0; j < 4; ++j) couple(left, g.qubit({row, col, 1, j}));
        if (col + 1 < k) couple(left, g.qubit({row, col + 1, 0, i}));
        if (row + 1 < k) couple(right, g.qubit({row + 1, col, 1, i}));
      }
    }
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.adjacency_.assign(n, {});
  for (const auto& [a, b] : g.edges_) {
    g.adjacency_[a].push_back(b);
    g.adjacency_[b].push_back(a);
  }
  for (auto& list : g.adjacency_) std::sort(list.begin(), list.end());
  return g;
}

std::vector<int> random_inactive_qubits(int k, int count, std::uint64_t seed) {
  const int n = 8 * k * k;
  if (count < 0 || count > n) throw std::invalid_argument("inactive count out of range");
  std::vector<int> ids(n);
  for (int q = 0; q < n; ++q) ids[q] = q;
  Rng rng(seed);
  shuffle(ids, rng);
  ids.resize(count);
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::map<int, int> degree_histogram(const ChimeraGraph& g) {
  std::map<int, int> hist;
  for (int q = 0; q < g.qubit_count(); ++q) {
    if (g.is_active(q)) ++hist[static_cast<int>(g.neighbors(q).size())];
  }
  return hist;
}

std::string render_chimera(const ChimeraGraph& g) {
  const WeightedGraph as_graph(g.qubit_count(), g.edges());
  return render_graph(as_graph, "chimera k=" + std::to_string(g.grid_size()));
}

}  // namespace hybrid
