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

// Command-line front end: gen, embed, solve, bench, report.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hybrid/harness.hpp"
#include "hybrid/numeric_format.hpp"
#include "hybrid/random.hpp"

namespace fs = std::filesystem;
using namespace hybrid;

namespace {

struct Common {
  std::string config = "config/desk.json";
  std::optional<std::uint64_t> seed;
  bool charge_only = false;
  bool re_embed = false;
  std::optional<int> threads;
};

ExperimentConfig load(const Common& c) {
  auto cfg = load_config(c.config);
  apply_environment(cfg);
  if (c.seed) cfg.seed = *c.seed;
  if (c.charge_only) cfg.standard_mode = StandardMode::ChargeOnly;
  if (c.re_embed) cfg.standard_mode = StandardMode::ReEmbed;
  if (c.threads) cfg.threads = *c.threads;
  return cfg;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

std::vector<GraphFamily> select(const ExperimentConfig& cfg, const std::string& id) {
  if (id.empty()) return cfg.corpus;
  return {GraphFamily::parse(id)};
}

int cmd_gen(const Common& c) {
  const auto cfg = load(c);
  const auto dir = cfg.output_dir / "instances";
  fs::create_directories(dir);
  std::ostringstream manifest;
  manifest << "instance,family,n_vertices,n_edges,seed\n";
  for (const auto& family : cfg.corpus) {
    const auto inst = make_instance(cfg, family);
    const auto id = family.id();
    manifest << id << ',' << family.tag() << ',' << inst.graph().vertex_count() << ','
             << inst.graph().edge_count() << ',' << inst.seed() << '\n';
    write_text(dir / (id + ".graph"), render_graph(inst.graph(), id));
    std::ostringstream weights;
    for (const auto& set : inst.weight_sets()) {
      for (std::size_t v = 0; v < set.size(); ++v) weights << (v ? "," : "") << format_double(set[v]);
      weights << '\n';
    }
    write_text(dir / (id + ".weights.csv"), weights.str());
  }
  write_text(cfg.output_dir / "manifest.csv", manifest.str());
  std::cout << "wrote " << cfg.corpus.size() << " instances to " << dir.string() << '\n';
  return 0;
}

int cmd_embed(const Common& c, const std::string& instance) {
  const auto cfg = load(c);
  const auto physical = make_hardware(cfg);
  const auto dir = cfg.output_dir / "embeddings";
  fs::create_directories(dir);
  std::optional<EmbeddingCache> cache;
  if (cfg.cache_dir) cache.emplace(*cfg.cache_dir);
  std::cout << "instance,n_vertices,qubits_used,max_chain,mean_chain,attempts,t_embed_ms,work_units\n";
  int failures = 0;
  for (const auto& family : select(cfg, instance)) {
    auto logical = std::make_shared<const WeightedGraph>(generate_family(family));
    const auto seed = derive_seed(instance_seed(cfg, family), "embed");
    std::optional<EmbeddingResult> hit;
    if (cache) hit = cache->load(logical, physical, seed);
    auto result = hit ? std::move(*hit) : find_embedding(logical, physical, seed, cfg.embedding);
    if (cache && !hit && result) cache->store(result, seed);
    const auto id = family.id();
    if (!result) {
      ++failures;
      std::cout << id << ',' << logical->vertex_count() << ",,,,,,\n";
      std::cerr << id << ": " << result.failure << '\n';
      continue;
    }
    const auto& s = result.stats;
    std::cout << id << ',' << logical->vertex_count() << ',' << s.qubits_used << ','
              << s.max_chain_length << ',' << format_double(s.mean_chain_length) << ','
              << s.attempts << ',' << format_double(s.t_embed_ms) << ',' << s.work_units << '\n';
    write_text(dir / (id + ".chains"), render_chains(*result.embedding));
  }
  return failures == 0 ? 0 : 1;
}

int cmd_solve(const Common& c, const std::string& instance, const std::string& mode) {
  const auto cfg = load(c);
  const auto family = GraphFamily::parse(instance);
  const auto inst = make_instance(cfg, family);
  const auto meta = describe(family);
  const auto classical = solve_dwmwis_classical(inst, cfg.clock, cfg.baseline);
  if (mode == "classical") {
    nlohmann::json j;
    j["instance"] = meta.id;
    j["T_C_ms"] = classical.total_ms;
    j["clock"] = std::string(to_string(classical.clock));
    for (std::size_t i = 0; i < classical.optima.size(); ++i) {
      j["optima"].push_back({{"vertices", classical.optima[i].vertices},
                             {"weight", classical.optima[i].weight},
                             {"ms", classical.assignment_ms[i]}});
    }
    std::cout << j.dump(1) << '\n';
    return 0;
  }
  std::vector<double> optima;
  for (const auto& s : classical.optima) optima.push_back(s.weight);
  const auto physical = make_hardware(cfg);
  const auto run = mode == "hybrid" ? run_hybrid(inst, meta, cfg, physical, optima)
                                    : run_standard(inst, meta, cfg, physical, optima);
  if (!run.ok()) {
    std::cerr << meta.id << " skipped: " << run.skipped << '\n';
    return 2;
  }
  auto ledger = run.ledger;
  ledger.classical_ms = classical.total_ms;
  std::cout << nlohmann::json(ledger).dump(1) << '\n';
  return 0;
}

int cmd_bench(const Common& c) {
  const auto cfg = load(c);
  const auto summary = run_corpus(cfg);
  std::cout << "instances " << summary.outcomes.size() << ", skipped " << summary.skipped
            << ", partial " << summary.partial << ", failed " << summary.failed << '\n';
  for (const auto& o : summary.outcomes) {
    if (!o.error.empty()) std::cerr << o.meta.id << ": " << o.error << '\n';
  }
  std::cout << "reports in " << cfg.output_dir.string() << '\n';
  return summary.ok() ? 0 : 1;
}

int cmd_report(const fs::path& dir) {
  const auto reports = reaggregate(dir);
  std::cout << "re-aggregated " << reports.size() << " instances in " << dir.string() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hybrid: embed-once annealing pipeline for dynamically weighted MWIS"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-c,--config", common.config, "experiment config (JSON)");
    sub->add_option("--seed", common.seed, "override the root seed");
  };
  auto add_modes = [&](CLI::App* sub) {
    auto* charge = sub->add_flag("--charge-only", common.charge_only,
                                 "standard mode reuses the embedding and charges t_embed m times");
    sub->add_flag("--re-embed", common.re_embed, "standard mode recomputes the embedding m times")
        ->excludes(charge);
  };

  auto* gen = app.add_subcommand("gen", "write the corpus manifest and instance files");
  add_common(gen);

  std::string instance;
  auto* embed = app.add_subcommand("embed", "embed corpus graphs and print chain statistics");
  add_common(embed);
  embed->add_option("-i,--instance", instance, "single graph id, e.g. K_8");

  std::string mode = "hybrid";
  auto* solve = app.add_subcommand("solve", "solve one instance with one algorithm");
  add_common(solve);
  add_modes(solve);
  solve->add_option("-i,--instance", instance, "graph id, e.g. C_6")->required();
  solve->add_option("--mode", mode, "algorithm")
      ->check(CLI::IsMember({"hybrid", "standard", "classical"}));

  auto* bench = app.add_subcommand("bench", "run all three algorithms over the corpus");
  add_common(bench);
  add_modes(bench);
  bench->add_option("-j,--threads", common.threads, "worker threads")->check(CLI::PositiveNumber);

  std::string report_dir = "results";
  auto* report = app.add_subcommand("report", "re-aggregate reports from saved ledgers");
  report->add_option("dir", report_dir, "output directory of a previous bench");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*gen) return cmd_gen(common);
    if (*embed) return cmd_embed(common, instance);
    if (*solve) return cmd_solve(common, instance, mode);
    if (*bench) return cmd_bench(common);
    if (*report) return cmd_report(report_dir);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
