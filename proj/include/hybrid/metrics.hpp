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

#include <json.hpp>

#include "hybrid/clock.hpp"
#include "hybrid/sampler.hpp"

namespace hybrid {

/// Expected repetitions for success probability p given per-read success
/// fraction s: ceil(log(1-p) / log(1-s)), at least 1. s = 1 gives 1;
/// s = 0 gives nullopt, the "unsolved" sentinel.
std::optional<std::int64_t> k99(double s, double p = 0.99);

struct Interval {
  double low = 0.0;
  double high = 0.0;
};

/// Wilson score interval at 95% for `hits` out of `trials`.
Interval wilson_interval(std::int64_t hits, std::int64_t trials);

/// Sum with Neumaier compensation; keeps T_std - T_H exact to a few ulps.
double compensated_sum(std::span<const double> values);

enum class Algorithm { Hybrid, Standard };
std::string_view to_string(Algorithm a);

/// One weight assignment's share of the quantum pipeline.
struct AssignmentTiming {
  int index = 0;
  double optimum = 0.0;          // exact optimum weight (classical baseline)
  double best_weight = 0.0;      // heaviest valid set the annealer produced
  std::int64_t reads = 0;
  std::int64_t optimal_reads = 0;  // N_opt
  double success = 0.0;          // s = optimal_reads / reads
  Interval success_ci;
  std::optional<std::int64_t> k99;  // nullopt = unsolved
  int broken_chains = 0;         // summed over all reads
  double t_embed_ms = 0.0;       // embedding time charged to this assignment
  double t_conv_ms = 0.0;
  double t_pre_ms = 0.0;
  double t_prog_ms = 0.0;
  double anneal_ms = 0.0;        // k99 * t_anneal
  double t_post_ms = 0.0;
  double sampler_wall_ms = 0.0;  // host time of the classical stand-in, reported only
};

/// Per-instance record of every timed stage.
struct TimingLedger {
  std::string instance;
  std::string family;
  int n_vertices = 0;
  int m = 0;
  Algorithm algorithm = Algorithm::Hybrid;
  ClockKind clock = ClockKind::Measured;
  double t_embed_ms = 0.0;               // the embedding actually used
  std::vector<double> embed_repeats_ms;  // repeated embeddings for error bars
  int embedding_calls = 0;
  int qubits_used = 0;
  int max_chain_length = 0;
  std::optional<double> classical_ms;    // T_C
  std::vector<AssignmentTiming> rows;

  friend bool operator==(const TimingLedger&, const TimingLedger&) = default;
};

inline bool operator==(const Interval& a, const Interval& b) {
  return a.low == b.low && a.high == b.high;
}
inline bool operator==(const AssignmentTiming& a, const AssignmentTiming& b) {
  return a.index == b.index && a.optimum == b.optimum && a.best_weight == b.best_weight &&
         a.reads == b.reads && a.optimal_reads == b.optimal_reads && a.success == b.success &&
         a.success_ci == b.success_ci && a.k99 == b.k99 && a.broken_chains == b.broken_chains &&
         a.t_embed_ms == b.t_embed_ms && a.t_conv_ms == b.t_conv_ms && a.t_pre_ms == b.t_pre_ms &&
         a.t_prog_ms == b.t_prog_ms && a.anneal_ms == b.anneal_ms && a.t_post_ms == b.t_post_ms &&
         a.sampler_wall_ms == b.sampler_wall_ms;
}

/// t_prog + k99 * t_anneal + t_post for one row; nullopt when unsolved.
std::optional<double> instance_quantum_time(const AssignmentTiming& row);

/// Fills the timing fields of a row from the model and its success counts.
void apply_timing_model(AssignmentTiming& row, const TimingModel& model);

struct Spread {
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;
  double median = 0.0;
};
Spread spread(std::span<const double> values);

struct DwmwisReport {
  std::string instance;
  std::string family;
  int n_vertices = 0;
  int m = 0;
  double t_embed_ms = 0.0;
  double t_h_ms = 0.0;
  double t_std_ms = 0.0;
  std::optional<double> t_c_ms;
  std::optional<double> r_c;  // T_H / T_C
  int unsolved_count = 0;     // rows left out of T_H and T_std
  std::vector<double> success;
  std::vector<std::int64_t> optimal_reads;
  Spread embed_spread;
  std::vector<std::string> warnings;

  bool partial() const noexcept { return unsolved_count > 0; }
};

/// T_H = t_embed + sum_i term_i; T_std = sum_i (t_embed_i + term_i) where
/// t_embed_i comes from `standard` when given (re-embedding) and is the
/// hybrid t_embed otherwise. Unsolved rows are excluded and counted.
DwmwisReport aggregate(const TimingLedger& hybrid, const TimingLedger* standard = nullptr);

inline constexpr std::string_view kCorpusCsvHeader =
    "instance,family,n_vertices,m,t_embed_ms,T_H_ms,T_std_ms,T_C_ms,R_C,unsolved_count";
inline constexpr std::string_view kAssignmentCsvHeader =
    "instance,algorithm,assignment,optimum,best_weight,reads,optimal_reads,success,s_low,s_high,"
    "k99,broken_chains,t_embed_ms,t_conv_ms,t_pre_ms,t_prog_ms,anneal_ms,t_post_ms";

std::string corpus_csv_row(const DwmwisReport& r);
std::string assignment_csv_rows(const TimingLedger& ledger);

/// The corpus CSV columns of a report, parsed back.
struct CorpusRow {
  std::string instance;
  std::string family;
  int n_vertices = 0;
  int m = 0;
  double t_embed_ms = 0.0;
  double t_h_ms = 0.0;
  double t_std_ms = 0.0;
  std::optional<double> t_c_ms;
  std::optional<double> r_c;
  int unsolved_count = 0;
  friend bool operator==(const CorpusRow&, const CorpusRow&) = default;
};
CorpusRow to_corpus_row(const DwmwisReport& r);
std::string render_corpus_csv(std::span<const CorpusRow> rows);
std::vector<CorpusRow> parse_corpus_csv(std::string_view text);

void to_json(nlohmann::json& j, const AssignmentTiming& row);
void from_json(const nlohmann::json& j, AssignmentTiming& row);
void to_json(nlohmann::json& j, const TimingLedger& ledger);
void from_json(const nlohmann::json& j, TimingLedger& ledger);

}  // namespace hybrid
