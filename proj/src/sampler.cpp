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

#include "hybrid/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include "hybrid/clock.hpp"
#include "hybrid/numeric_format.hpp"
#include "hybrid/random.hpp"

namespace hybrid {

Temperatures resolve_temperatures(const AnnealSchedule& schedule, const QuboMatrix& q) {
  if (schedule.sweeps < 1) throw std::invalid_argument("anneal schedule needs at least one sweep");

  const QuboCouplings c(q);
  double max_delta = 0.0;
  double min_coeff = std::numeric_limits<double>::infinity();
  for (int i = 0; i < c.size(); ++i) {
    double reach = std::abs(c.diag[i]);
    for (int e = c.offsets[i]; e < c.offsets[i + 1]; ++e) reach += std::abs(c.coupling[e]);
    max_delta = std::max(max_delta, reach);
  }
  for (const auto& t : q.terms()) min_coeff = std::min(min_coeff, std::abs(t.value));

  Temperatures temps;
  if (max_delta > 0.0) {
    temps.initial = max_delta / std::log(2.0);
    temps.final = min_coeff / std::log(100.0);
  }
  if (schedule.initial_temperature) temps.initial = *schedule.initial_temperature;
  if (schedule.final_temperature) temps.final = *schedule.final_temperature;
  if (!(temps.initial > 0.0) || !(temps.final > 0.0)) {
    throw std::invalid_argument("anneal temperatures must be positive");
  }
  if (temps.initial < temps.final) {
    if (schedule.initial_temperature && schedule.final_temperature) {
      throw std::invalid_argument("initial temperature must not be below the final temperature");
    }
    temps.initial = temps.final;
  }
  return temps;
}

namespace {

void anneal_once(const QuboCouplings& c, const std::vector<double>& betas, Rng& rng,
                 Assignment& x, std::vector<double>& field) {
  const int n = c.size();
  for (int i = 0; i < n; ++i) x[i] = static_cast<std::uint8_t>(rng() >> 63);
  std::fill(field.begin(), field.end(), 0.0);
  for (int i = 0; i < n; ++i) {
    if (!x[i]) continue;
    for (int e = c.offsets[i]; e < c.offsets[i + 1]; ++e) field[c.neighbor[e]] += c.coupling[e];
  }
  for (const double beta : betas) {
    for (int i = 0; i < n; ++i) {
      const double local = c.diag[i] + field[i];
      const double delta = x[i] ? -local : local;
      if (delta > 0.0 && uniform01(rng) >= std::exp(-beta * delta)) continue;
      const double sign = x[i] ? -1.0 : 1.0;
      x[i] ^= 1;
      for (int e = c.offsets[i]; e < c.offsets[i + 1]; ++e) {
        field[c.neighbor[e]] += sign * c.coupling[e];
      }
    }
  }
}

}  // namespace

SampleSet sample(const QuboMatrix& q, const AnnealSchedule& schedule, int reads,
                 std::uint64_t seed) {
  if (reads < 1) throw std::invalid_argument("reads must be at least 1");
  const Stopwatch watch;
  SampleSet out;
  out.reads = reads;
  out.schedule = schedule;
  out.seed = seed;
  out.temperatures = resolve_temperatures(schedule, q);

  std::vector<double> betas(schedule.sweeps);
  for (int s = 0; s < schedule.sweeps; ++s) {
    const double frac = schedule.sweeps == 1 ? 1.0 : static_cast<double>(s) / (schedule.sweeps - 1);
    const double t = out.temperatures.initial *
                     std::pow(out.temperatures.final / out.temperatures.initial, frac);
    betas[s] = 1.0 / t;
  }

  const QuboCouplings c(q);
  Assignment x(q.dimension());
  std::vector<double> field(q.dimension());
  std::map<Assignment, int> counts;
  for (int r = 0; r < reads; ++r) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(r)));
    anneal_once(c, betas, rng, x, field);
    ++counts[x];
  }
  out.samples.reserve(counts.size());
  for (auto& [assignment, count] : counts) {
    const double energy = evaluate(q, assignment);
    out.samples.push_back({assignment, energy, count});
  }
  std::stable_sort(out.samples.begin(), out.samples.end(),
                   [](const Sample& a, const Sample& b) { return a.energy < b.energy; });
  out.wall_ms = watch.elapsed_ms();
  return out;
}

double success_probability(const SampleSet& samples, double optimum, double tol) {
  if (tol < 0.0) throw std::invalid_argument("tolerance must be nonnegative");
  long total = 0;
  long hits = 0;
  for (const auto& s : samples.samples) {
    total += s.count;
    if (s.energy <= optimum + tol) hits += s.count;
  }
  if (total == 0) throw std::invalid_argument("empty sample set");
  return static_cast<double>(hits) / static_cast<double>(total);
}

double simulated_quantum_time(const TimingModel& model, double k) {
  if (k < 0.0) throw std::invalid_argument("repetition count must be nonnegative");
  return model.t_prog_ms + k * model.t_anneal_ms;
}

std::string samples_to_csv(const SampleSet& samples) {
  std::ostringstream out;
  out << "energy,count,bits\n";
  for (const auto& s : samples.samples) {
    out << format_double(s.energy) << ',' << s.count << ',';
    for (const auto bit : s.x) out << (bit ? '1' : '0');
    out << '\n';
  }
  return out.str();
}

}  // namespace hybrid
