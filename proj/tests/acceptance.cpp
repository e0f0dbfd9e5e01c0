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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Thresholds are fixed here, not read from config.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "hybrid/harness.hpp"
#include "hybrid/random.hpp"
#include "oracle.hpp"

using namespace hybrid;
namespace fs = std::filesystem;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

const fs::path kRoot = HYBRID_SOURCE_DIR;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Verdict qubo_correctness() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(1001);
  int graphs = 0, bad = 0;
  for (; graphs < 600; ++graphs) {
    const int n = 1 + graphs % 12;
    const auto g = oracle::random_graph(n, (rng() % 11) / 10.0, rng);
    const auto set = decode_independent_set(g, brute_force_qubo(mwis_to_qubo(g)).x);
    if (!set.independent || oracle::set_cents(g, set.vertices) != oracle::mwis_cents(g)) ++bad;
  }
  const double secs = seconds_since(t0);
  return {bad == 0 && secs < 120.0, fmt("%d graphs (|V| 1..12), %d mismatches, %.1f s", graphs, bad, secs)};
}

Verdict bip_correctness() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(1002);
  int graphs = 0, bad = 0;
  for (; graphs < 250; ++graphs) {
    const int n = 1 + graphs % 16;
    const auto g = oracle::random_graph(n, (rng() % 11) / 10.0, rng);
    const auto s = solve_bip(build_constraints(g), g.weights());
    if (!oracle::set_independent(g, s.vertices) ||
        oracle::set_cents(g, s.vertices) != oracle::mwis_cents(g)) {
      ++bad;
    }
  }
  const double secs = seconds_since(t0);
  return {bad == 0 && secs < 120.0, fmt("%d graphs (|V| 1..16), %d mismatches, %.1f s", graphs, bad, secs)};
}

Verdict embedding_validity() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto cfg = load_config(kRoot / "config" / "full.json");
  const auto physical = make_hardware(cfg);
  int graphs = 0, runs = 0, failures = 0;
  for (const auto& family : cfg.corpus) {
    auto logical = std::make_shared<const WeightedGraph>(generate_family(family));
    if (logical->vertex_count() > 40) continue;
    ++graphs;
    const auto base = derive_seed(instance_seed(cfg, family), "embed");
    for (std::uint64_t r = 0; r < 10; ++r) {
      ++runs;
      const auto res = find_embedding(logical, physical, derive_seed(base, r), cfg.embedding);
      if (!res || !verify_embedding(*res.embedding).empty()) {
        ++failures;
        std::fprintf(stderr, "  embedding failed: %s seed %llu\n", family.id().c_str(),
                     static_cast<unsigned long long>(r));
      }
    }
  }
  return {failures == 0 && graphs > 0,
          fmt("%d corpus graphs x 10 seeds into chimera k=%d (%d active), %d/%d failed, %.1f s",
              graphs, cfg.hardware.k, physical->active_count(), failures, runs, seconds_since(t0))};
}

Verdict embedded_equivalence() {
  const auto physical = std::make_shared<const ChimeraGraph>(build_chimera(2));
  std::mt19937_64 rng(1004);
  int checked = 0, bad = 0, attempts = 0;
  while (checked < 60 && attempts < 1000) {
    ++attempts;
    const int n = 1 + static_cast<int>(rng() % 6);
    auto g = std::make_shared<const WeightedGraph>(oracle::random_graph(n, (rng() % 11) / 10.0, rng));
    const auto found = find_embedding(g, physical, rng());
    if (!found) continue;
    const auto& e = *found.embedding;
    if (e.used_qubits().size() > 24) continue;
    ++checked;
    const auto min = brute_force_qubo(embed_qubo(mwis_to_qubo(*g), e).qubo);
    const auto un = unembed_sample(min.x, e, *g);
    const auto set = decode_independent_set(*g, un.logical);
    if (un.broken_chains != 0 || !set.independent ||
        oracle::set_cents(*g, set.vertices) != oracle::mwis_cents(*g)) {
      ++bad;
    }
  }
  return {checked >= 50 && bad == 0,
          fmt("%d graphs (|V| <= 6) into chimera k=2, %d with broken chains or wrong optimum", checked, bad)};
}

Verdict k99_values() {
  const bool ok = k99(0.99, 0.99) == 1 && k99(0.5, 0.99) == 7 && k99(1.0) == 1 && !k99(0.0);
  return {ok, fmt("k99(.99)=%lld k99(.5)=%lld k99(1)=%lld k99(0)=%s",
                  static_cast<long long>(k99(0.99).value_or(-1)),
                  static_cast<long long>(k99(0.5).value_or(-1)),
                  static_cast<long long>(k99(1.0).value_or(-1)), k99(0.0) ? "solved" : "unsolved")};
}

Verdict timing_identity() {
  auto cfg = load_config(kRoot / "config" / "desk.json");
  cfg.m = 100;
  cfg.clock = ClockKind::Measured;
  cfg.standard_mode = StandardMode::ChargeOnly;
  const auto physical = make_hardware(cfg);
  double worst = 0.0;
  int instances = 0;
  bool ok = true;
  for (const char* id : {"C_5", "K_6"}) {
    const auto out = run_instance(cfg, GraphFamily::parse(id), physical);
    if (!out.report) {
      ok = false;
      continue;
    }
    ++instances;
    const auto& r = *out.report;
    const double expect = 99.0 * r.t_embed_ms;
    const double rel = std::abs((r.t_std_ms - r.t_h_ms) - expect) / expect;
    worst = std::max(worst, rel);
    ok = ok && r.unsolved_count == 0 && out.hybrid.ledger.embedding_calls == 1;
  }
  return {ok && instances == 2 && worst < 1e-12,
          fmt("m=100 charge-only, %d instances, worst relative error %.3g", instances, worst)};
}

struct DeskRun {
  CorpusSummary summary;
  std::string csv;
  double seconds = 0.0;
};

DeskRun run_desk(const std::string& tag) {
  auto cfg = load_config(kRoot / "config" / "desk.json");
  cfg.output_dir = fs::temp_directory_path() / ("hybrid-acceptance-" + tag);
  fs::remove_all(cfg.output_dir);
  const auto t0 = std::chrono::steady_clock::now();
  DeskRun run{run_corpus(cfg), {}, 0.0};
  run.seconds = seconds_since(t0);
  run.csv = slurp(cfg.output_dir / "corpus.csv");
  fs::remove_all(cfg.output_dir);
  return run;
}

Verdict desk_reproduction(const DeskRun& run) {
  int unsolved = 0, mismatched = 0, not_faster = 0, missing_rc = 0, reported = 0;
  for (const auto& o : run.summary.outcomes) {
    if (!o.report) continue;
    ++reported;
    unsolved += o.report->unsolved_count;
    if (!(o.report->t_h_ms < o.report->t_std_ms)) ++not_faster;
    const auto inst = make_instance(load_config(kRoot / "config" / "desk.json"), o.family);
    for (std::size_t i = 0; i < o.hybrid.solutions.size(); ++i) {
      const auto g = inst.weighted(static_cast<int>(i));
      const auto& sol = o.hybrid.solutions[i].vertices;
      if (!oracle::set_independent(g, sol) ||
          oracle::set_cents(g, sol) != oracle::set_cents(g, o.classical.optima[i].vertices)) {
        ++mismatched;
      }
    }
  }
  const auto rows = parse_corpus_csv(run.csv);
  for (const auto& r : rows)
    if (!r.r_c) ++missing_rc;
  const bool ok = reported == 30 && rows.size() == 30 && run.summary.skipped == 0 &&
                  run.summary.failed == 0 && unsolved == 0 && mismatched == 0 && not_faster == 0 &&
                  missing_rc == 0 && run.seconds < 900.0;
  return {ok, fmt("%d/30 instances; unsolved rows %d, hybrid!=classical %d, T_H>=T_std %d, "
                  "missing R_C %d, %.1f s",
                  reported, unsolved, mismatched, not_faster, missing_rc, run.seconds)};
}

}  // namespace

int main() {
  int failed = 0;
  auto report = [&](int id, const char* name, const Verdict& v) {
    std::printf("%s  %d  %s: %s\n", v.pass ? "PASS" : "FAIL", id, name, v.detail.c_str());
    std::fflush(stdout);
    if (!v.pass) ++failed;
  };
  auto guarded = [&](int id, const char* name, const std::function<Verdict()>& f) {
    try {
      report(id, name, f());
    } catch (const std::exception& e) {
      report(id, name, {false, std::string("exception: ") + e.what()});
    }
  };

  guarded(1, "QUBO correctness", qubo_correctness);
  guarded(2, "BIP correctness", bip_correctness);
  guarded(3, "embedding validity", embedding_validity);
  guarded(4, "embedded QUBO equivalence", embedded_equivalence);
  guarded(5, "k99 unit values", k99_values);
  guarded(6, "timing identity", timing_identity);

  std::optional<DeskRun> first;
  guarded(7, "desk-scale reproduction", [&] {
    first = run_desk("first");
    return desk_reproduction(*first);
  });
  guarded(8, "determinism", [&] {
    if (!first) return Verdict{false, "desk run did not complete"};
    const auto second = run_desk("second");
    const bool same = second.csv == first->csv;
    return Verdict{same && !first->csv.empty(),
                   fmt("two desk runs, corpus CSV %s (%zu bytes)", same ? "byte-identical" : "differs",
                       first->csv.size())};
  });

  std::printf("%d criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
