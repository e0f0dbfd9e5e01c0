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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hybrid/graph.hpp"

namespace hybrid {

/// Binary assignment x, one byte (0 or 1) per variable.
using Assignment = std::vector<std::uint8_t>;

enum class QuboKind { Logical, Embedded };

struct QuboTerm {
  int i = 0;
  int j = 0;
  double value = 0.0;
  friend bool operator==(const QuboTerm&, const QuboTerm&) = default;
};

/// Upper-triangular QUBO matrix Q, stored as a sorted sparse term list.
/// Minimisation target: f(x) = sum_{i <= j} x_i Q(i,j) x_j.
class QuboMatrix {
 public:
  explicit QuboMatrix(int dimension, QuboKind kind = QuboKind::Logical);
  /// Terms are summed per (i, j); exact zeros are dropped. Throws on i > j
  /// or out-of-range indices.
  QuboMatrix(int dimension, std::vector<QuboTerm> terms,
             QuboKind kind = QuboKind::Logical);

  int dimension() const noexcept { return dimension_; }
  QuboKind kind() const noexcept { return kind_; }
  const std::vector<QuboTerm>& terms() const noexcept { return terms_; }
  double value(int i, int j) const;
  double diagonal(int i) const { return value(i, i); }

  friend bool operator==(const QuboMatrix&, const QuboMatrix&) = default;

 private:
  int dimension_;
  QuboKind kind_;
  std::vector<QuboTerm> terms_;
};

/// Compressed symmetric neighbour lists of a QUBO, for incremental
/// single-flip energy updates.
struct QuboCouplings {
  std::vector<double> diag;
  std::vector<int> offsets;  // size n + 1
  std::vector<int> neighbor;
  std::vector<double> coupling;

  explicit QuboCouplings(const QuboMatrix& q);
  int size() const noexcept { return static_cast<int>(diag.size()); }
};

/// MWIS reduction: Q(i,i) = -w(v_i), Q(i,j) = S on edges (i < j). The
/// default penalty is S = W + 1 with W the largest vertex weight; an
/// explicit penalty must exceed W.
QuboMatrix mwis_to_qubo(const WeightedGraph& graph,
                        std::optional<double> penalty = std::nullopt);

double evaluate(const QuboMatrix& q, std::span<const std::uint8_t> x);

struct DecodedSet {
  std::vector<int> vertices;
  double weight = 0.0;
  bool independent = true;
};

DecodedSet decode_independent_set(const WeightedGraph& graph,
                                  std::span<const std::uint8_t> x);

struct QuboMinimum {
  Assignment x;
  double energy = 0.0;
};

inline constexpr int kDefaultBruteForceCap = 24;

/// Exhaustive minimum over all 2^n assignments (Gray-code order).
/// Co-optimal assignments are resolved to the lowest binary value of x,
/// reading x_0 as the least significant bit.
QuboMinimum brute_force_qubo(const QuboMatrix& q, int cap = kDefaultBruteForceCap);

/// Text form: header "qubo n <dim>" (optionally followed by "embedded"),
/// then one "<i> <j> <value>" line per term in (i, j) order, values in
/// shortest round-trip decimal.
std::string render_qubo(const QuboMatrix& q);
QuboMatrix parse_qubo(std::string_view text);

}  // namespace hybrid
