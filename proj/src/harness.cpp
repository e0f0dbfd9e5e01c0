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

#include "hybrid/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "hybrid/numeric_format.hpp"
#include "hybrid/random.hpp"

namespace hybrid {

using nlohmann::json;

std::string_view to_string(StandardMode mode) {
  return mode == StandardMode::ChargeOnly ? "charge-only" : "re-embed";
}

StandardMode standard_mode_from_string(std::string_view text) {
  if (text == "charge-only") return StandardMode::ChargeOnly;
  if (text == "re-embed") return StandardMode::ReEmbed;
  throw std::invalid_argument("unknown standard mode '" + std::string(text) + "'");
}

namespace {

// Rejects keys outside `allowed`, so typos in a config fail loudly.
void check_keys(const json& j, std::string_view where, std::initializer_list<std::string_view> allowed) {
  if (!j.is_object()) throw std::invalid_argument(std::string(where) + " must be an object");
  for (const auto& [key, value] : j.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw std::invalid_argument("unknown key '" + key + "' in " + std::string(where));
    }
  }
}

template <class T>
void read(const json& j, const char* key, T& out) {
  if (!j.contains(key) || j.at(key).is_null()) return;
  try {
    out = j.at(key).get<T>();
  } catch (const json::exception&) {
    throw std::invalid_argument(std::string("bad value for '") + key + "'");
  }
}

template <class T>
void read_optional(const json& j, const char* key, std::optional<T>& out) {
  if (!j.contains(key) || j.at(key).is_null()) return;
  T value{};
  read(j, key, value);
  out = value;
}

std::vector<GraphFamily> parse_corpus(const json& list) {
  if (!list.is_array()) throw std::invalid_argument("corpus must be an array");
  std::vector<GraphFamily> out;
  for (const auto& entry : list) {
    if (entry.is_string()) {
      out.push_back(GraphFamily::parse(entry.get<std::string>()));
      continue;
    }
    check_keys(entry, "corpus entry", {"family", "from", "to", "step", "pairs"});
    std::string tag;
    read(entry, "family", tag);
    if (tag == "grid" || tag == "Kab") {
      std::vector<std::pair<int, int>> pairs;
      read(entry, "pairs", pairs);
      if (pairs.empty()) throw std::invalid_argument("corpus entry '" + tag + "' needs pairs");
      for (const auto& [a, b] : pairs) {
        const std::string id = tag == "grid" ? "grid_" + std::to_string(a) + "x" + std::to_string(b)
                                             : "K_" + std::to_string(a) + "_" + std::to_string(b);
        out.push_back(GraphFamily::parse(id));
      }
      continue;
    }
    if (tag != "C" && tag != "S" && tag != "K" && tag != "P") {
      throw std::invalid_argument("unknown family '" + tag + "' in corpus");
    }
    int from = 0, to = -1, step = 1;
    read(entry, "from", from);
    read(entry, "to", to);
    read(entry, "step", step);
    if (step < 1 || to < from) throw std::invalid_argument("bad range for family '" + tag + "'");
    for (int n = from; n <= to; n += step) {
      out.push_back(GraphFamily::parse(tag + "_" + std::to_string(n)));
    }
  }
  std::set<std::string> ids;
  for (const auto& f : out) {
    if (!ids.insert(f.id()).second) throw std::invalid_argument("duplicate corpus entry " + f.id());
    generate_family(f);  // validates the size parameters
  }
  return out;
}

BoundKind bound_from_string(const std::string& text) {
  if (text == "undecided-sum") return BoundKind::UndecidedSum;
  if (text == "clique-cover") return BoundKind::CliqueCover;
  throw std::invalid_argument("unknown baseline bound '" + text + "'");
}

}  // namespace

ExperimentConfig parse_config(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text, nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("config is not valid JSON: ") + e.what());
  }
  check_keys(root, "config", {"corpus", "m", "seed", "hardware", "schedule", "reads", "timing",
                              "embedding", "standard_mode", "clock", "baseline", "threads",
                              "output_dir"});
  ExperimentConfig cfg;
  if (!root.contains("corpus")) throw std::invalid_argument("config needs a corpus");
  cfg.corpus = parse_corpus(root.at("corpus"));
  read(root, "m", cfg.m);
  read(root, "seed", cfg.seed);
  read(root, "reads", cfg.reads);
  read(root, "threads", cfg.threads);
  std::string text;
  if (root.contains("output_dir")) {
    read(root, "output_dir", text);
    cfg.output_dir = text;
  }
  if (root.contains("standard_mode")) {
    read(root, "standard_mode", text);
    cfg.standard_mode = standard_mode_from_string(text);
  }
  if (root.contains("clock")) {
    read(root, "clock", text);
    cfg.clock = clock_kind_from_string(text);
  }
  if (root.contains("hardware")) {
    const auto& h = root.at("hardware");
    check_keys(h, "hardware", {"k", "inactive"});
    read(h, "k", cfg.hardware.k);
    if (h.contains("inactive")) {
      if (h.at("inactive").is_array()) {
        std::vector<int> ids;
        read(h, "inactive", ids);
        cfg.hardware.inactive = std::move(ids);
      } else {
        read(h, "inactive", cfg.hardware.inactive_count);
      }
    }
  }
  if (root.contains("schedule")) {
    const auto& s = root.at("schedule");
    check_keys(s, "schedule", {"sweeps", "initial_temperature", "final_temperature"});
    read(s, "sweeps", cfg.schedule.sweeps);
    read_optional(s, "initial_temperature", cfg.schedule.initial_temperature);
    read_optional(s, "final_temperature", cfg.schedule.final_temperature);
  }
  if (root.contains("timing")) {
    const auto& t = root.at("timing");
    check_keys(t, "timing", {"t_prog_ms", "t_anneal_ms", "t_post_ms"});
    read(t, "t_prog_ms", cfg.timing.t_prog_ms);
    read(t, "t_anneal_ms", cfg.timing.t_anneal_ms);
    read(t, "t_post_ms", cfg.timing.t_post_ms);
  }
  if (root.contains("embedding")) {
    const auto& e = root.at("embedding");
    check_keys(e, "embedding",
               {"max_attempts", "max_rounds", "patience", "refine_rounds", "repeats", "cache_dir"});
    read(e, "max_attempts", cfg.embedding.max_attempts);
    read(e, "max_rounds", cfg.embedding.max_rounds);
    read(e, "patience", cfg.embedding.patience);
    read(e, "refine_rounds", cfg.embedding.refine_rounds);
    read(e, "repeats", cfg.embed_repeats);
    std::optional<std::string> dir;
    read_optional(e, "cache_dir", dir);
    if (dir) cfg.cache_dir = *dir;
  }
  if (root.contains("baseline")) {
    const auto& b = root.at("baseline");
    check_keys(b, "baseline", {"bound", "split_components"});
    if (b.contains("bound")) {
      read(b, "bound", text);
      cfg.baseline.bound = bound_from_string(text);
    }
    read(b, "split_components", cfg.baseline.split_components);
  }

  if (cfg.m < 1) throw std::invalid_argument("m must be at least 1");
  if (cfg.reads < 1) throw std::invalid_argument("reads must be at least 1");
  if (cfg.threads < 1) throw std::invalid_argument("threads must be at least 1");
  if (cfg.embed_repeats < 1) throw std::invalid_argument("embedding repeats must be at least 1");
  if (cfg.embedding.max_attempts < 1) throw std::invalid_argument("max_attempts must be at least 1");
  const auto& tm = cfg.timing;
  if (tm.t_prog_ms < 0 || tm.t_anneal_ms < 0 || tm.t_post_ms < 0) {
    throw std::invalid_argument("timing constants must be nonnegative");
  }
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read config " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

void apply_environment(ExperimentConfig& cfg) {
  if (const char* dir = std::getenv(kOutputDirEnv); dir && *dir) cfg.output_dir = dir;
}

std::uint64_t instance_seed(const ExperimentConfig& cfg, const GraphFamily& family) {
  return derive_seed(cfg.seed, family.id());
}

DwmwisInstance make_instance(const ExperimentConfig& cfg, const GraphFamily& family) {
  const auto seed = instance_seed(cfg, family);
  return make_dwmwis_instance(generate_family(family), cfg.m, derive_seed(seed, "weights"));
}

std::shared_ptr<const ChimeraGraph> make_hardware(const ExperimentConfig& cfg) {
  const auto inactive = cfg.hardware.inactive
                            ? *cfg.hardware.inactive
                            : random_inactive_qubits(cfg.hardware.k, cfg.hardware.inactive_count,
                                                     derive_seed(cfg.seed, "hardware"));
  return std::make_shared<const ChimeraGraph>(build_chimera(cfg.hardware.k, inactive));
}

InstanceMeta describe(const GraphFamily& family) {
  return {family.id(), family.tag(), generate_family(family).vertex_count()};
}

namespace {

double embed_cost_ms(const EmbeddingStats& stats, ClockKind clock) {
  return clock == ClockKind::Measured
             ? stats.t_embed_ms
             : static_cast<double>(stats.work_units) * work_cost::kEmbedUnitMs;
}

EmbeddingResult embed(std::shared_ptr<const WeightedGraph> logical,
                      std::shared_ptr<const ChimeraGraph> physical, std::uint64_t seed,
                      const ExperimentConfig& cfg) {
  if (cfg.cache_dir) {
    const EmbeddingCache cache(*cfg.cache_dir);
    if (auto hit = cache.load(logical, physical, seed)) return std::move(*hit);
    auto result = find_embedding(logical, physical, seed, cfg.embedding);
    if (result) cache.store(result, seed);
    return result;
  }
  return find_embedding(logical, physical, seed, cfg.embedding);
}

TimingLedger empty_ledger(const InstanceMeta& meta, const ExperimentConfig& cfg, Algorithm algo) {
  TimingLedger l;
  l.instance = meta.id;
  l.family = meta.family;
  l.n_vertices = meta.n_vertices;
  l.m = cfg.m;
  l.algorithm = algo;
  l.clock = cfg.clock;
  return l;
}

struct Penalties {
  double penalty;
  double chain_strength;
};

// Fixed per instance so that only the diagonals change between assignments.
Penalties instance_penalties(const DwmwisInstance& instance) {
  const double w = instance.max_weight();
  const double s = w + 1.0;
  return {s, 2.0 * (s + w)};
}

// Sample one weight assignment on a fixed embedding and score the reads.
AssignmentTiming solve_assignment(const DwmwisInstance& instance, int i, const Embedding& e,
                                  const Penalties& pen, double optimum,
                                  const ExperimentConfig& cfg, DecodedSet& best) {
  const auto graph = instance.weighted(i);
  AssignmentTiming row;
  row.index = i;
  row.optimum = optimum;

  Stopwatch watch;
  const auto logical_q = mwis_to_qubo(graph, pen.penalty);
  row.t_conv_ms = cfg.clock == ClockKind::Measured
                      ? watch.elapsed_ms()
                      : static_cast<double>(logical_q.terms().size()) * work_cost::kQuboTermMs;
  watch.restart();
  EmbedQuboOptions eo;
  eo.chain_strength = pen.chain_strength;
  const auto physical_q = embed_qubo(logical_q, e, eo);
  row.t_pre_ms = cfg.clock == ClockKind::Measured
                     ? watch.elapsed_ms()
                     : static_cast<double>(physical_q.qubo.terms().size()) * work_cost::kQuboTermMs;

  const auto stream = derive_seed(derive_seed(instance.seed(), "sample"), static_cast<std::uint64_t>(i));
  const auto samples = sample(physical_q.qubo, cfg.schedule, cfg.reads, stream);
  row.sampler_wall_ms = samples.wall_ms;
  row.reads = samples.reads;

  double weight_sum = 0.0;
  for (const double w : graph.weights()) weight_sum += w;
  const double tol = 1e-9 * (1.0 + weight_sum);

  best = DecodedSet{};
  bool have_best = false;
  for (const auto& s : samples.samples) {
    const auto un = unembed_sample(s.x, e, graph);
    auto decoded = decode_independent_set(graph, un.logical);
    if (!decoded.independent) {
      throw std::logic_error("repaired sample of " + std::to_string(i) + " is not independent");
    }
    row.broken_chains += un.broken_chains * s.count;
    if (decoded.weight >= optimum - tol) row.optimal_reads += s.count;
    if (!have_best || decoded.weight > best.weight) {
      best = std::move(decoded);
      have_best = true;
    }
  }
  row.best_weight = best.weight;
  apply_timing_model(row, cfg.timing);
  return row;
}

void check_optima(const DwmwisInstance& instance, std::span<const double> optima) {
  if (static_cast<int>(optima.size()) != instance.assignment_count()) {
    throw std::invalid_argument("need one optimum per weight assignment");
  }
}

}  // namespace

QuantumRun run_hybrid(const DwmwisInstance& instance, const InstanceMeta& meta,
                      const ExperimentConfig& cfg, std::shared_ptr<const ChimeraGraph> physical,
                      std::span<const double> optima) {
  check_optima(instance, optima);
  QuantumRun run;
  run.ledger = empty_ledger(meta, cfg, Algorithm::Hybrid);
  auto logical = std::make_shared<const WeightedGraph>(instance.graph());
  const auto embed_seed = derive_seed(instance.seed(), "embed");

  auto found = embed(logical, physical, embed_seed, cfg);
  if (!found) {
    run.skipped = found.failure;
    return run;
  }
  run.ledger.embedding_calls = 1;
  run.ledger.t_embed_ms = embed_cost_ms(found.stats, cfg.clock);
  run.ledger.qubits_used = found.stats.qubits_used;
  run.ledger.max_chain_length = found.stats.max_chain_length;

  // Error-bar repeats: timed only, never used for solving.
  run.ledger.embed_repeats_ms.push_back(run.ledger.t_embed_ms);
  for (int r = 1; r < cfg.embed_repeats; ++r) {
    const auto again = find_embedding(logical, physical,
                                      derive_seed(embed_seed, static_cast<std::uint64_t>(r)),
                                      cfg.embedding);
    if (again) run.ledger.embed_repeats_ms.push_back(embed_cost_ms(again.stats, cfg.clock));
  }

  const auto pen = instance_penalties(instance);
  run.solutions.resize(cfg.m);
  for (int i = 0; i < cfg.m; ++i) {
    run.ledger.rows.push_back(
        solve_assignment(instance, i, *found.embedding, pen, optima[i], cfg, run.solutions[i]));
  }
  run.embedding = std::move(found.embedding);
  return run;
}

QuantumRun run_standard(const DwmwisInstance& instance, const InstanceMeta& meta,
                        const ExperimentConfig& cfg, std::shared_ptr<const ChimeraGraph> physical,
                        std::span<const double> optima, const QuantumRun* hybrid) {
  check_optima(instance, optima);
  if (hybrid && hybrid->ok() && cfg.standard_mode == StandardMode::ChargeOnly) {
    QuantumRun run = *hybrid;
    run.ledger.algorithm = Algorithm::Standard;
    run.ledger.embedding_calls = cfg.m;
    for (auto& row : run.ledger.rows) row.t_embed_ms = run.ledger.t_embed_ms;
    return run;
  }

  QuantumRun run;
  run.ledger = empty_ledger(meta, cfg, Algorithm::Standard);
  auto logical = std::make_shared<const WeightedGraph>(instance.graph());
  const auto embed_seed = derive_seed(instance.seed(), "embed");
  const auto pen = instance_penalties(instance);

  auto found = embed(logical, physical, embed_seed, cfg);
  if (!found) {
    run.skipped = found.failure;
    return run;
  }
  run.ledger.embedding_calls = 1;
  run.ledger.t_embed_ms = embed_cost_ms(found.stats, cfg.clock);
  run.ledger.qubits_used = found.stats.qubits_used;
  run.ledger.max_chain_length = found.stats.max_chain_length;
  run.ledger.embed_repeats_ms.push_back(run.ledger.t_embed_ms);

  run.solutions.resize(cfg.m);
  for (int i = 0; i < cfg.m; ++i) {
    double charged = run.ledger.t_embed_ms;
    if (cfg.standard_mode == StandardMode::ReEmbed && i > 0) {
      // Same seed, so the embedding (and solution quality) matches the
      // hybrid run; only the time is measured afresh.
      auto again = find_embedding(logical, physical, embed_seed, cfg.embedding);
      ++run.ledger.embedding_calls;
      if (!again) throw std::logic_error("re-embedding with a known-good seed failed");
      charged = embed_cost_ms(again.stats, cfg.clock);
      run.ledger.embed_repeats_ms.push_back(charged);
    }
    auto row = solve_assignment(instance, i, *found.embedding, pen, optima[i], cfg, run.solutions[i]);
    row.t_embed_ms = charged;
    run.ledger.rows.push_back(row);
  }
  if (cfg.standard_mode == StandardMode::ChargeOnly) run.ledger.embedding_calls = cfg.m;
  run.embedding = std::move(found.embedding);
  return run;
}

InstanceOutcome run_instance(const ExperimentConfig& cfg, const GraphFamily& family,
                             std::shared_ptr<const ChimeraGraph> physical) {
  InstanceOutcome out;
  out.family = family;
  try {
    out.meta = describe(family);
    const auto instance = make_instance(cfg, family);
    out.classical = solve_dwmwis_classical(instance, cfg.clock, cfg.baseline);
    std::vector<double> optima;
    for (const auto& s : out.classical.optima) optima.push_back(s.weight);

    out.hybrid = run_hybrid(instance, out.meta, cfg, physical, optima);
    if (!out.hybrid.ok()) return out;
    out.hybrid.ledger.classical_ms = out.classical.total_ms;
    out.standard = run_standard(instance, out.meta, cfg, physical, optima, &out.hybrid);
    out.standard.ledger.classical_ms = out.classical.total_ms;
    out.report = aggregate(out.hybrid.ledger, &out.standard.ledger);
  } catch (const std::exception& e) {
    out.error = e.what();
    out.report.reset();
  }
  return out;
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

std::string csv_safe(std::string text) {
  std::replace(text.begin(), text.end(), ',', ';');
  std::replace(text.begin(), text.end(), '\n', ' ');
  return text;
}

std::string opt(const std::optional<double>& v) { return v ? format_double(*v) : std::string(); }

// Size parameter used on the x axis of the per-family plots.
int family_size(const DwmwisReport& r) {
  try {
    const auto f = GraphFamily::parse(r.instance);
    if (f.kind == FamilyKind::Grid || f.kind == FamilyKind::Bipartite) return r.n_vertices;
    return f.a;
  } catch (const std::exception&) {
    return r.n_vertices;
  }
}

}  // namespace

void write_reports(const std::filesystem::path& output_dir, std::span<const DwmwisReport> reports) {
  std::filesystem::create_directories(output_dir / "plots");
  std::vector<CorpusRow> rows;
  for (const auto& r : reports) rows.push_back(to_corpus_row(r));
  write_file(output_dir / "corpus.csv", render_corpus_csv(rows));

  std::ostringstream embed, by_size, by_tc, by_family;
  embed << "instance,family,n_vertices,t_embed_ms,t_embed_min_ms,t_embed_max_ms,t_embed_median_ms\n";
  by_size << "instance,family,n_vertices,R_C\n";
  by_tc << "instance,family,T_C_ms,R_C\n";
  by_family << "family,n,instance,R_C\n";
  for (const auto& r : reports) {
    embed << r.instance << ',' << r.family << ',' << r.n_vertices << ',' << format_double(r.t_embed_ms)
          << ',' << format_double(r.embed_spread.min) << ',' << format_double(r.embed_spread.max)
          << ',' << format_double(r.embed_spread.median) << '\n';
    by_size << r.instance << ',' << r.family << ',' << r.n_vertices << ',' << opt(r.r_c) << '\n';
    by_tc << r.instance << ',' << r.family << ',' << opt(r.t_c_ms) << ',' << opt(r.r_c) << '\n';
  }
  std::vector<const DwmwisReport*> sorted;
  for (const auto& r : reports) sorted.push_back(&r);
  std::stable_sort(sorted.begin(), sorted.end(), [](const DwmwisReport* a, const DwmwisReport* b) {
    if (a->family != b->family) return a->family < b->family;
    return family_size(*a) < family_size(*b);
  });
  for (const auto* r : sorted) {
    by_family << r->family << ',' << family_size(*r) << ',' << r->instance << ',' << opt(r->r_c) << '\n';
  }
  write_file(output_dir / "plots" / "t_embed_vs_vertices.csv", embed.str());
  write_file(output_dir / "plots" / "rc_vs_vertices.csv", by_size.str());
  write_file(output_dir / "plots" / "rc_vs_tc.csv", by_tc.str());
  write_file(output_dir / "plots" / "rc_by_family.csv", by_family.str());
}

CorpusSummary run_corpus(const ExperimentConfig& cfg) {
  const auto physical = make_hardware(cfg);
  CorpusSummary summary;
  summary.outcomes.resize(cfg.corpus.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cfg.corpus.size(); i = next++) {
      summary.outcomes[i] = run_instance(cfg, cfg.corpus[i], physical);
    }
  };
  const int n_threads = std::min<int>(cfg.threads, static_cast<int>(cfg.corpus.size()));
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  }

  const auto& dir = cfg.output_dir;
  std::filesystem::create_directories(dir / "ledgers");
  std::vector<DwmwisReport> reports;
  std::ostringstream assignments, skipped, index;
  assignments << kAssignmentCsvHeader << '\n';
  skipped << "instance,family,n_vertices,reason\n";
  for (const auto& o : summary.outcomes) {
    if (!o.error.empty()) {
      ++summary.failed;
      skipped << o.meta.id << ',' << o.meta.family << ',' << o.meta.n_vertices << ",error: "
              << csv_safe(o.error) << '\n';
      continue;
    }
    if (!o.hybrid.ok()) {
      ++summary.skipped;
      skipped << o.meta.id << ',' << o.meta.family << ',' << o.meta.n_vertices << ','
              << csv_safe(o.hybrid.skipped) << '\n';
      continue;
    }
    if (o.report->partial()) ++summary.partial;
    reports.push_back(*o.report);
    assignments << assignment_csv_rows(o.hybrid.ledger) << assignment_csv_rows(o.standard.ledger);
    index << o.meta.id << '\n';
    write_file(dir / "ledgers" / (o.meta.id + ".hybrid.json"), json(o.hybrid.ledger).dump(1) + "\n");
    write_file(dir / "ledgers" / (o.meta.id + ".standard.json"),
               json(o.standard.ledger).dump(1) + "\n");
  }
  write_file(dir / "ledgers" / "index.txt", index.str());
  write_file(dir / "assignments.csv", assignments.str());
  write_file(dir / "skipped.csv", skipped.str());
  write_reports(dir, reports);
  return summary;
}

std::vector<DwmwisReport> reaggregate(const std::filesystem::path& output_dir) {
  const auto ledgers = output_dir / "ledgers";
  std::istringstream index(read_file(ledgers / "index.txt"));
  std::vector<DwmwisReport> reports;
  std::string id;
  while (std::getline(index, id)) {
    if (id.empty()) continue;
    const auto hybrid = json::parse(read_file(ledgers / (id + ".hybrid.json"))).get<TimingLedger>();
    const auto standard =
        json::parse(read_file(ledgers / (id + ".standard.json"))).get<TimingLedger>();
    reports.push_back(aggregate(hybrid, &standard));
  }
  write_reports(output_dir, reports);
  return reports;
}

}  // namespace hybrid
