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
#include <string>
#include <vector>

#include "hybrid/qubo.hpp"

namespace hybrid {

/// Geometric cooling schedule for the simulated annealer. Unset
/// temperatures are derived from the QUBO: the hot end accepts the largest
/// possible single-flip uphill move with probability 1/2, the cold end
/// accepts the smallest nonzero coefficient uphill with probability 1/100.
struct AnnealSchedule {
  int sweeps = 64;
  std::optional<double> initial_temperature;
  std::optional<double> final_temperature;
};

struct Temperatures {
  double initial = 1.0;
  double final = 1.0;
};

/// Resolves auto temperatures and validates the schedule (positive
/// temperatures, initial >= final, sweeps >= 1).
Temperatures resolve_temperatures(const AnnealSchedule& schedule, const QuboMatrix& q);

struct Sample {
  Assignment x;
  double energy = 0.0;
  int count = 0;
};

/// Distinct assignments with occurrence counts, ordered by energy then by
/// the assignment's bytes.
struct SampleSet {
  std::vector<Sample> samples;
  int reads = 0;
  AnnealSchedule schedule;
  Temperatures temperatures;
  std::uint64_t seed = 0;
  double wall_ms = 0.0;  // host time of the annealer, never part of quantum timing

  const Sample& best() const { return samples.front(); }
};

/// `reads` independent annealing runs. Read r uses mt19937_64 seeded with
/// derive_seed(seed, r), so results do not depend on evaluation order and a
/// call with fewer reads sees a prefix of the same runs. Every stored
/// energy is recomputed with evaluate().
SampleSet sample(const QuboMatrix& q, const AnnealSchedule& schedule, int reads,
                 std::uint64_t seed);

/// Fraction of reads with energy <= optimum + tol.
double success_probability(const SampleSet& samples, double optimum, double tol = 1e-9);

/// Annealer timing constants, all in milliseconds.
struct TimingModel {
  double t_prog_ms = 20.0;
  double t_anneal_ms = 0.309;
  double t_post_ms = 20.0;
};

/// t_prog + k * t_anneal.
double simulated_quantum_time(const TimingModel& model, double k);

/// CSV with header "energy,count,bits"; bits as a 0/1 string, x_0 first.
std::string samples_to_csv(const SampleSet& samples);

}  // namespace hybrid
