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
#include <string>
#include <string_view>
#include <vector>

#include "hybrid/baseline.hpp"
#include "hybrid/chimera.hpp"
#include "hybrid/clock.hpp"
#include "hybrid/embedding.hpp"
#include "hybrid/graph.hpp"
#include "hybrid/metrics.hpp"
#include "hybrid/qubo.hpp"
#include "hybrid/sampler.hpp"

namespace hybrid {

/// Environment variable that replaces ExperimentConfig::output_dir.
inline constexpr const char* kOutputDirEnv = "HYBRID_OUTPUT_DIR";

enum class StandardMode {
  ChargeOnly,  // reuse the hybrid embedding, charge t_embed once per assignment
  ReEmbed,     // call find_embedding again for every assignment
};
std::string_view to_string(StandardMode mode);
StandardMode standard_mode_from_string(std::string_view text);

struct HardwareConfig {
  int k = 12;
  int inactive_count = 54;             // drawn at random when `inactive` is unset
  std::optional<std::vector<int>> inactive;
};

struct ExperimentConfig {
  std::vector<GraphFamily> corpus;
  int m = 100;
  std::uint64_t seed = 1;
  HardwareConfig hardware;
  AnnealSchedule schedule;
  int reads = 1000;
  TimingModel timing;
  EmbeddingOptions embedding;
  int embed_repeats = 10;              // extra embeddings timed for error bars
  std::optional<std::filesystem::path> cache_dir;
  StandardMode standard_mode = StandardMode::ChargeOnly;
  ClockKind clock = ClockKind::Measured;
  BipOptions baseline;
  int threads = 1;
  std::filesystem::path output_dir = "results";
};

/// JSON config; see README for the schema. Unknown keys are rejected.
/// Throws std::invalid_argument with the offending key on any error.
ExperimentConfig parse_config(std::string_view json_text);
ExperimentConfig load_config(const std::filesystem::path& path);
/// Applies HYBRID_OUTPUT_DIR if set.
void apply_environment(ExperimentConfig& cfg);

/// Seed of one instance: independent of which other instances are in the
/// corpus.
std::uint64_t instance_seed(const ExperimentConfig& cfg, const GraphFamily& family);
DwmwisInstance make_instance(const ExperimentConfig& cfg, const GraphFamily& family);
std::shared_ptr<const ChimeraGraph> make_hardware(const ExperimentConfig& cfg);

/// Per-instance identity carried into ledgers and reports.
struct InstanceMeta {
  std::string id;
  std::string family;
  int n_vertices = 0;
};
InstanceMeta describe(const GraphFamily& family);

/// Result of one quantum algorithm on one instance.
struct QuantumRun {
  TimingLedger ledger;
  std::vector<DecodedSet> solutions;  // best set per assignment
  std::optional<Embedding> embedding;
  std::string skipped;                // non-empty: instance not embeddable
  bool ok() const noexcept { return skipped.empty(); }
};

/// Embeds once, then solves every weight assignment on that embedding.
/// `optima` are the exact optimum weights per assignment (from the
/// baseline); they define which reads count as successes.
QuantumRun run_hybrid(const DwmwisInstance& instance, const InstanceMeta& meta,
                      const ExperimentConfig& cfg,
                      std::shared_ptr<const ChimeraGraph> physical,
                      std::span<const double> optima);

/// As run_hybrid, but the embedding is charged (or recomputed) for every
/// assignment. In charge-only mode a hybrid run of the same instance may be
/// passed to reuse its samples; same seeds give the same samples anyway.
QuantumRun run_standard(const DwmwisInstance& instance, const InstanceMeta& meta,
                        const ExperimentConfig& cfg,
                        std::shared_ptr<const ChimeraGraph> physical,
                        std::span<const double> optima,
                        const QuantumRun* hybrid = nullptr);

/// Everything known about one instance after all three algorithms.
struct InstanceOutcome {
  InstanceMeta meta;
  GraphFamily family;
  ClassicalRun classical;
  QuantumRun hybrid;
  QuantumRun standard;
  std::optional<DwmwisReport> report;  // unset when skipped
  std::string error;                   // hard failure
};

InstanceOutcome run_instance(const ExperimentConfig& cfg, const GraphFamily& family,
                             std::shared_ptr<const ChimeraGraph> physical);

struct CorpusSummary {
  std::vector<InstanceOutcome> outcomes;  // manifest order
  int skipped = 0;
  int failed = 0;
  int partial = 0;
  bool ok() const noexcept { return failed == 0; }
};

/// Runs every instance (cfg.threads workers) and writes, under output_dir:
/// corpus.csv, assignments.csv, skipped.csv, ledgers/<id>.{hybrid,standard}.json
/// and plots/{t_embed_vs_vertices,rc_vs_vertices,rc_vs_tc,rc_by_family}.csv.
/// Output bytes do not depend on the worker count.
CorpusSummary run_corpus(const ExperimentConfig& cfg);

/// Rebuilds corpus.csv and the plot files from ledgers/ alone.
std::vector<DwmwisReport> reaggregate(const std::filesystem::path& output_dir);

/// Writes the report files for already-aggregated reports.
void write_reports(const std::filesystem::path& output_dir,
                   std::span<const DwmwisReport> reports);

}  // namespace hybrid
