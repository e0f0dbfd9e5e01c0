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
#include <filesystem>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hybrid/chimera.hpp"
#include "hybrid/graph.hpp"
#include "hybrid/qubo.hpp"

namespace hybrid {

/// Minor embedding of a logical graph into a Chimera graph: one chain of
/// physical qubits per logical vertex.
class Embedding {
 public:
  Embedding(std::shared_ptr<const WeightedGraph> logical,
            std::shared_ptr<const ChimeraGraph> physical,
            std::vector<std::vector<int>> chains);

  const WeightedGraph& logical() const noexcept { return *logical_; }
  const ChimeraGraph& physical() const noexcept { return *physical_; }
  const std::shared_ptr<const ChimeraGraph>& physical_ptr() const noexcept { return physical_; }

  int chain_count() const noexcept { return static_cast<int>(chains_.size()); }
  const std::vector<int>& chain(int v) const { return chains_.at(v); }
  const std::vector<std::vector<int>>& chains() const noexcept { return chains_; }

  /// Distinct physical qubits used by any chain, ascending. Embedded QUBOs
  /// index their variables in this order.
  const std::vector<int>& used_qubits() const noexcept { return used_; }
  /// Position of physical qubit q in used_qubits(), or -1.
  int compact_index(int q) const;

  int max_chain_length() const;
  double mean_chain_length() const;

  friend bool operator==(const Embedding& a, const Embedding& b) {
    return a.chains_ == b.chains_;
  }

 private:
  std::shared_ptr<const WeightedGraph> logical_;
  std::shared_ptr<const ChimeraGraph> physical_;
  std::vector<std::vector<int>> chains_;
  std::vector<int> used_;
};

struct EmbeddingStats {
  int qubits_used = 0;
  int max_chain_length = 0;
  double mean_chain_length = 0.0;
  double t_embed_ms = 0.0;       // wall time of the whole search
  int attempts = 0;
  std::uint64_t work_units = 0;  // heap pops plus edge relaxations
};

struct EmbeddingOptions {
  int max_attempts = 10;
  int max_rounds = 64;     // tear-up-and-reroute passes per attempt
  int patience = 10;       // passes without overlap progress before restart
  int refine_rounds = 8;   // chain-shortening passes after the first valid state
};

struct EmbeddingResult {
  std::optional<Embedding> embedding;
  EmbeddingStats stats;
  std::string failure;  // empty on success

  explicit operator bool() const noexcept { return embedding.has_value(); }
};

/// Randomised chain-growth heuristic. Vertices are placed breadth-first from
/// the highest-degree vertex, each chain grown along node-weighted shortest
/// paths whose cost rises geometrically with qubit sharing and with how long
/// a qubit has been contested. While chains overlap, the far half of each
/// new path is handed to the neighbour it reaches, and chains are torn up
/// and rerouted until no qubit is shared; leaf trimming and disjoint
/// rerouting then shorten them. Restarts with a derived seed up to
/// max_attempts times, alternating a steep sharing cost (base 4k + 4) with a
/// soft one (base 4). Deterministic given the seed.
EmbeddingResult find_embedding(std::shared_ptr<const WeightedGraph> logical,
                               std::shared_ptr<const ChimeraGraph> physical,
                               std::uint64_t seed,
                               const EmbeddingOptions& options = {});

EmbeddingResult find_embedding(const WeightedGraph& logical,
                               const ChimeraGraph& physical, std::uint64_t seed,
                               int max_attempts = EmbeddingOptions{}.max_attempts);

struct EmbeddingViolation {
  enum class Kind {
    EmptyChain,         // a logical vertex has no qubits
    InactiveQubit,      // chain uses a qubit that is inactive or out of range
    SharedQubit,        // condition (i): chains not disjoint
    DisconnectedChain,  // condition (ii): chain not connected
    MissingCoupler,     // condition (iii): logical edge without a physical edge
  };
  Kind kind;
  int u = -1;
  int v = -1;
  int qubit = -1;

  std::string describe() const;
};

/// Every violation of the minor-embedding conditions; empty means valid.
std::vector<EmbeddingViolation> verify_embedding(const Embedding& e);

enum class CouplerPlacement {
  Representative,  // whole penalty on the first chain-to-chain edge
  Split,           // penalty divided evenly over all chain-to-chain edges
};

struct EmbedQuboOptions {
  /// Default: 2 (S + W), S the largest off-diagonal coefficient and W the
  /// largest |diagonal| of the logical QUBO.
  std::optional<double> chain_strength;
  CouplerPlacement placement = CouplerPlacement::Representative;
};

struct EmbeddedQubo {
  QuboMatrix qubo;  // variables ordered as Embedding::used_qubits()
  double chain_strength = 0.0;
};

double default_chain_strength(const QuboMatrix& logical_q);

/// Physical QUBO: each logical diagonal split evenly over its chain, each
/// logical coupling placed per `placement`, and every intra-chain coupler
/// {a, b} given +C on both diagonals and -2C on the coupling.
EmbeddedQubo embed_qubo(const QuboMatrix& logical_q, const Embedding& e,
                        const EmbedQuboOptions& options = {});

struct UnembeddedSample {
  Assignment logical;
  int broken_chains = 0;
};

/// Per-chain majority vote (ties -> 0), then one pass over logical edges in
/// canonical order unsetting the lighter endpoint of every violated edge
/// (equal weights -> the higher index). The result is always independent.
UnembeddedSample unembed_sample(std::span<const std::uint8_t> x_phys,
                                const Embedding& e, const WeightedGraph& graph);

/// "chain <logical_index>: <q1> <q2> ..." lines.
std::string render_chains(const Embedding& e);
std::vector<std::vector<int>> parse_chains(std::string_view text);

/// On-disk embedding cache keyed by (graph structure hash, physical
/// fingerprint, seed). Each entry is a chain file with a stats line.
class EmbeddingCache {
 public:
  explicit EmbeddingCache(std::filesystem::path dir);

  std::filesystem::path entry_path(const WeightedGraph& logical,
                                   const ChimeraGraph& physical,
                                   std::uint64_t seed) const;
  std::optional<EmbeddingResult> load(std::shared_ptr<const WeightedGraph> logical,
                                      std::shared_ptr<const ChimeraGraph> physical,
                                      std::uint64_t seed) const;
  void store(const EmbeddingResult& result, std::uint64_t seed) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace hybrid
