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
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hybrid {

using Edge = std::pair<int, int>;

/// Error raised by the text-format parsers; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// Undirected simple graph on vertices 0..n-1 with strictly positive vertex
/// weights. Edges are stored once as (u, v) with u < v, sorted.
class WeightedGraph {
 public:
  /// Unit weights.
  WeightedGraph(int vertex_count, std::vector<Edge> edges);
  WeightedGraph(int vertex_count, std::vector<Edge> edges,
                std::vector<double> weights);

  int vertex_count() const noexcept { return static_cast<int>(adjacency_.size()); }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adjacency_.at(v); }
  int degree(int v) const { return static_cast<int>(adjacency_.at(v).size()); }
  bool has_edge(int u, int v) const;

  const std::vector<double>& weights() const noexcept { return weights_; }
  double weight(int v) const { return weights_.at(v); }
  double max_weight() const;

  /// Same structure, new weights.
  WeightedGraph with_weights(std::vector<double> weights) const;

  friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
    return a.edges_ == b.edges_ && a.weights_ == b.weights_;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<double> weights_;
};

enum class FamilyKind { Cycle, Star, Complete, Path, Grid, Bipartite };

/// A parameterised graph family member, e.g. C_8, S_4, K_5, P_6, grid_3x4,
/// K_3_3 (complete bipartite).
struct GraphFamily {
  FamilyKind kind = FamilyKind::Cycle;
  int a = 0;  // n, leaves, rows or left side
  int b = 0;  // columns or right side; unused otherwise

  /// Canonical identifier, also accepted by parse().
  std::string id() const;
  /// Short family tag used in reports: C, S, K, P, grid, Kab.
  std::string tag() const;

  static GraphFamily parse(std::string_view id);
  friend bool operator==(const GraphFamily&, const GraphFamily&) = default;
};

/// Canonical member of the family with unit weights. Throws
/// std::invalid_argument for out-of-range sizes (C_n needs n >= 3, every
/// other size parameter must be >= 1).
WeightedGraph generate_family(const GraphFamily& family);

/// One graph structure with m weight functions.
class DwmwisInstance {
 public:
  DwmwisInstance(WeightedGraph graph, std::vector<std::vector<double>> weight_sets,
                 std::uint64_t seed);

  const WeightedGraph& graph() const noexcept { return graph_; }
  int assignment_count() const noexcept { return static_cast<int>(weight_sets_.size()); }
  const std::vector<std::vector<double>>& weight_sets() const noexcept {
    return weight_sets_;
  }
  std::uint64_t seed() const noexcept { return seed_; }

  /// The graph carrying weight function i.
  WeightedGraph weighted(int i) const;
  /// Largest weight over all m functions.
  double max_weight() const;

 private:
  WeightedGraph graph_;
  std::vector<std::vector<double>> weight_sets_;
  std::uint64_t seed_;
};

/// Draws m weight vectors: each entry uniform on [0, 1) from mt19937_64,
/// rounded to 2 decimals (so 1.00 is possible), 0.00 remapped to 0.01.
DwmwisInstance make_dwmwis_instance(const WeightedGraph& graph, int m,
                                    std::uint64_t seed);

/// Graph text format:
///
///   # comment (anywhere; trailing comments allowed)
///   n <vertex_count>            required, before any other line
///   w <index> <decimal>         optional, default weight 1
///   <u>: <v1> <v2> ...          adjacency; edges may be listed once or twice
///
/// Self-loops, out-of-range indices and nonpositive weights are errors.
WeightedGraph parse_graph(std::string_view text);
std::string render_graph(const WeightedGraph& graph,
                         std::string_view header_comment = {});

/// Stable 64-bit digest of the structure (not the weights).
std::uint64_t structure_hash(const WeightedGraph& graph);

}  // namespace hybrid
