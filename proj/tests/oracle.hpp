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

// Independent oracles for the tests. Nothing here calls the library's
// solvers; weights are handled as integer cents so comparisons are exact.

#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "hybrid/graph.hpp"

namespace oracle {

inline std::int64_t cents(double w) { return std::llround(w * 100.0); }

// Erdos-Renyi graph on n vertices with 2-decimal weights in [0.01, 1.00].
inline hybrid::WeightedGraph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution edge(p);
  std::uniform_int_distribution<int> w(1, 100);
  std::vector<hybrid::Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (edge(rng)) edges.emplace_back(u, v);
  std::vector<double> weights(n);
  for (auto& x : weights) x = w(rng) / 100.0;
  return hybrid::WeightedGraph(n, std::move(edges), std::move(weights));
}

inline bool independent(const hybrid::WeightedGraph& g, std::uint64_t mask) {
  for (const auto& [u, v] : g.edges())
    if ((mask >> u & 1) && (mask >> v & 1)) return false;
  return true;
}

inline std::int64_t mask_cents(const hybrid::WeightedGraph& g, std::uint64_t mask) {
  std::int64_t total = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (mask >> v & 1) total += cents(g.weight(v));
  return total;
}

// Heaviest independent set by enumerating every vertex subset.
inline std::int64_t mwis_cents(const hybrid::WeightedGraph& g) {
  std::int64_t best = 0;
  const std::uint64_t total = std::uint64_t{1} << g.vertex_count();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (independent(g, mask)) best = std::max(best, mask_cents(g, mask));
  }
  return best;
}

inline std::int64_t set_cents(const hybrid::WeightedGraph& g, const std::vector<int>& set) {
  std::int64_t total = 0;
  for (int v : set) total += cents(g.weight(v));
  return total;
}

inline bool set_independent(const hybrid::WeightedGraph& g, const std::vector<int>& set) {
  for (std::size_t a = 0; a < set.size(); ++a)
    for (std::size_t b = a + 1; b < set.size(); ++b)
      if (g.has_edge(set[a], set[b])) return false;
  return true;
}

}  // namespace oracle
