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

#include "hybrid/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hybrid/numeric_format.hpp"

namespace hybrid {

std::optional<std::int64_t> k99(double s, double p) {
  if (!(s >= 0.0 && s <= 1.0)) throw std::invalid_argument("success fraction must lie in [0, 1]");
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("target probability must lie in (0, 1)");
  if (s == 0.0) return std::nullopt;
  if (s == 1.0) return 1;
  const double ratio = std::log1p(-p) / std::log1p(-s);
  // Ratios that are integers in exact arithmetic must not round up.
  const double k = std::ceil(ratio - 1e-9);
  return std::max<std::int64_t>(1, static_cast<std::int64_t>(k));
}

Interval wilson_interval(std::int64_t hits, std::int64_t trials) {
  if (trials <= 0 || hits < 0 || hits > trials) throw std::invalid_argument("bad binomial counts");
  constexpr double z = 1.959963984540054;
  const double n = static_cast<double>(trials);
  const double phat = static_cast<double>(hits) / n;
  const double denom = 1.0 + z * z / n;
  const double centre = (phat + z * z / (2.0 * n)) / denom;
  const double half = z * std::sqrt(phat * (1.0 - phat) / n + z * z / (4.0 * n * n)) / denom;
  return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

double compensated_sum(std::span<const double> values) {
  double sum = 0.0;
  double carry = 0.0;
  for (const double v : values) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) carry += (sum - t) + v;
    else carry += (v - t) + sum;
    sum = t;
  }
  return sum + carry;
}

std::string_view to_string(Algorithm a) { return a == Algorithm::Hybrid ? "hybrid" : "standard"; }

std::optional<double> instance_quantum_time(const AssignmentTiming& row) {
  if (!row.k99) return std::nullopt;
  return row.t_prog_ms + row.anneal_ms + row.t_post_ms;
}

void apply_timing_model(AssignmentTiming& row, const TimingModel& model) {
  row.success = row.reads > 0 ? static_cast<double>(row.optimal_reads) / static_cast<double>(row.reads) : 0.0;
  if (row.reads > 0) row.success_ci = wilson_interval(row.optimal_reads, row.reads);
  row.k99 = k99(row.success);
  row.t_prog_ms = model.t_prog_ms;
  row.t_post_ms = model.t_post_ms;
  row.anneal_ms = row.k99 ? static_cast<double>(*row.k99) * model.t_anneal_ms : 0.0;
}

Spread spread(std::span<const double> values) {
  if (values.empty()) return {};
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  Spread s;
  s.min = sorted.front();
  s.max = sorted.back();
  s.mean = compensated_sum(sorted) / static_cast<double>(sorted.size());
  const std::size_t mid = sorted.size() / 2;
  s.median = sorted.size() % 2 ? sorted[mid] : 0.5 * (sorted[mid - 1] + sorted[mid]);
  return s;
}

DwmwisReport aggregate(const TimingLedger& hybrid, const TimingLedger* standard) {
  if (static_cast<int>(hybrid.rows.size()) != hybrid.m) {
    throw std::invalid_argument("ledger of " + hybrid.instance + " is incomplete");
  }
  if (standard && standard->rows.size() != hybrid.rows.size()) {
    throw std::invalid_argument("standard ledger does not match the hybrid ledger");
  }
  DwmwisReport r;
  r.instance = hybrid.instance;
  r.family = hybrid.family;
  r.n_vertices = hybrid.n_vertices;
  r.m = hybrid.m;
  r.t_embed_ms = hybrid.t_embed_ms;

  std::vector<double> h_parts{hybrid.t_embed_ms};
  std::vector<double> s_parts;
  for (std::size_t i = 0; i < hybrid.rows.size(); ++i) {
    const auto& row = hybrid.rows[i];
    r.success.push_back(row.success);
    r.optimal_reads.push_back(row.optimal_reads);
    const auto term = instance_quantum_time(row);
    if (!term) {
      ++r.unsolved_count;
    } else {
      h_parts.push_back(*term);
    }
    const auto& srow = standard ? standard->rows[i] : row;
    s_parts.push_back(standard ? srow.t_embed_ms : hybrid.t_embed_ms);
    if (const auto sterm = instance_quantum_time(srow)) s_parts.push_back(*sterm);
  }
  r.t_h_ms = compensated_sum(h_parts);
  r.t_std_ms = compensated_sum(s_parts);
  if (r.unsolved_count > 0) {
    r.warnings.push_back(std::to_string(r.unsolved_count) +
                         " assignment(s) unsolved; T_H and T_std are partial");
  }

  r.t_c_ms = hybrid.classical_ms;
  if (!r.t_c_ms) {
    r.warnings.push_back("no classical baseline time; R_C omitted");
  } else if (*r.t_c_ms > 0.0) {
    r.r_c = r.t_h_ms / *r.t_c_ms;
  } else {
    r.warnings.push_back("classical time is zero; R_C omitted");
  }

  if (hybrid.embed_repeats_ms.empty()) {
    const double one[] = {hybrid.t_embed_ms};
    r.embed_spread = spread(one);
  } else {
    r.embed_spread = spread(hybrid.embed_repeats_ms);
  }
  return r;
}

namespace {

std::string opt_field(const std::optional<double>& v) { return v ? format_double(*v) : std::string(); }

std::vector<std::string> split_csv(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.emplace_back(line.substr(start, comma == std::string_view::npos ? line.size() - start
                                                                        : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

CorpusRow to_corpus_row(const DwmwisReport& r) {
  return {r.instance, r.family, r.n_vertices, r.m, r.t_embed_ms, r.t_h_ms, r.t_std_ms,
          r.t_c_ms, r.r_c, r.unsolved_count};
}

std::string corpus_csv_row(const DwmwisReport& r) {
  const auto row = to_corpus_row(r);
  return render_corpus_csv(std::span(&row, 1)).substr(kCorpusCsvHeader.size() + 1);
}

std::string render_corpus_csv(std::span<const CorpusRow> rows) {
  std::ostringstream out;
  out << kCorpusCsvHeader << '\n';
  for (const auto& r : rows) {
    out << r.instance << ',' << r.family << ',' << r.n_vertices << ',' << r.m << ','
        << format_double(r.t_embed_ms) << ',' << format_double(r.t_h_ms) << ','
        << format_double(r.t_std_ms) << ',' << opt_field(r.t_c_ms) << ',' << opt_field(r.r_c)
        << ',' << r.unsolved_count << '\n';
  }
  return out.str();
}

std::vector<CorpusRow> parse_corpus_csv(std::string_view text) {
  std::vector<CorpusRow> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line_no == 1) {
      if (line != kCorpusCsvHeader) throw ParseError(line_no, "unexpected corpus CSV header");
      continue;
    }
    const auto f = split_csv(line);
    if (f.size() != 10) throw ParseError(line_no, "expected 10 columns");
    auto num = [&](const std::string& s) {
      const auto v = parse_double(s);
      if (!v) throw ParseError(line_no, "bad number '" + s + "'");
      return *v;
    };
    auto opt = [&](const std::string& s) -> std::optional<double> {
      if (s.empty()) return std::nullopt;
      return num(s);
    };
    auto integer = [&](const std::string& s) {
      const auto v = parse_int<int>(s);
      if (!v) throw ParseError(line_no, "bad integer '" + s + "'");
      return *v;
    };
    rows.push_back({f[0], f[1], integer(f[2]), integer(f[3]), num(f[4]), num(f[5]), num(f[6]),
                    opt(f[7]), opt(f[8]), integer(f[9])});
  }
  return rows;
}

std::string assignment_csv_rows(const TimingLedger& ledger) {
  std::ostringstream out;
  for (const auto& r : ledger.rows) {
    out << ledger.instance << ',' << to_string(ledger.algorithm) << ',' << r.index << ','
        << format_double(r.optimum) << ',' << format_double(r.best_weight) << ',' << r.reads
        << ',' << r.optimal_reads << ',' << format_double(r.success) << ','
        << format_double(r.success_ci.low) << ',' << format_double(r.success_ci.high) << ','
        << (r.k99 ? std::to_string(*r.k99) : std::string("unsolved")) << ',' << r.broken_chains
        << ',' << format_double(r.t_embed_ms) << ',' << format_double(r.t_conv_ms) << ','
        << format_double(r.t_pre_ms) << ',' << format_double(r.t_prog_ms) << ','
        << format_double(r.anneal_ms) << ',' << format_double(r.t_post_ms) << '\n';
  }
  return out.str();
}

void to_json(nlohmann::json& j, const AssignmentTiming& r) {
  j = nlohmann::json{{"index", r.index},
                     {"optimum", r.optimum},
                     {"best_weight", r.best_weight},
                     {"reads", r.reads},
                     {"optimal_reads", r.optimal_reads},
                     {"success", r.success},
                     {"success_ci", {r.success_ci.low, r.success_ci.high}},
                     {"k99", r.k99 ? nlohmann::json(*r.k99) : nlohmann::json(nullptr)},
                     {"broken_chains", r.broken_chains},
                     {"t_embed_ms", r.t_embed_ms},
                     {"t_conv_ms", r.t_conv_ms},
                     {"t_pre_ms", r.t_pre_ms},
                     {"t_prog_ms", r.t_prog_ms},
                     {"anneal_ms", r.anneal_ms},
                     {"t_post_ms", r.t_post_ms},
                     {"sampler_wall_ms", r.sampler_wall_ms}};
}

void from_json(const nlohmann::json& j, AssignmentTiming& r) {
  j.at("index").get_to(r.index);
  j.at("optimum").get_to(r.optimum);
  j.at("best_weight").get_to(r.best_weight);
  j.at("reads").get_to(r.reads);
  j.at("optimal_reads").get_to(r.optimal_reads);
  j.at("success").get_to(r.success);
  r.success_ci = {j.at("success_ci").at(0).get<double>(), j.at("success_ci").at(1).get<double>()};
  if (j.at("k99").is_null()) r.k99.reset();
  else r.k99 = j.at("k99").get<std::int64_t>();
  j.at("broken_chains").get_to(r.broken_chains);
  j.at("t_embed_ms").get_to(r.t_embed_ms);
  j.at("t_conv_ms").get_to(r.t_conv_ms);
  j.at("t_pre_ms").get_to(r.t_pre_ms);
  j.at("t_prog_ms").get_to(r.t_prog_ms);
  j.at("anneal_ms").get_to(r.anneal_ms);
  j.at("t_post_ms").get_to(r.t_post_ms);
  j.at("sampler_wall_ms").get_to(r.sampler_wall_ms);
}

void to_json(nlohmann::json& j, const TimingLedger& l) {
  j = nlohmann::json{{"instance", l.instance},
                     {"family", l.family},
                     {"n_vertices", l.n_vertices},
                     {"m", l.m},
                     {"algorithm", std::string(to_string(l.algorithm))},
                     {"clock", std::string(to_string(l.clock))},
                     {"t_embed_ms", l.t_embed_ms},
                     {"embed_repeats_ms", l.embed_repeats_ms},
                     {"embedding_calls", l.embedding_calls},
                     {"qubits_used", l.qubits_used},
                     {"max_chain_length", l.max_chain_length},
                     {"classical_ms", l.classical_ms ? nlohmann::json(*l.classical_ms)
                                                     : nlohmann::json(nullptr)},
                     {"rows", l.rows}};
}

void from_json(const nlohmann::json& j, TimingLedger& l) {
  j.at("instance").get_to(l.instance);
  j.at("family").get_to(l.family);
  j.at("n_vertices").get_to(l.n_vertices);
  j.at("m").get_to(l.m);
  const auto algo = j.at("algorithm").get<std::string>();
  if (algo == "hybrid") l.algorithm = Algorithm::Hybrid;
  else if (algo == "standard") l.algorithm = Algorithm::Standard;
  else throw std::invalid_argument("unknown algorithm '" + algo + "' in ledger");
  l.clock = clock_kind_from_string(j.at("clock").get<std::string>());
  j.at("t_embed_ms").get_to(l.t_embed_ms);
  j.at("embed_repeats_ms").get_to(l.embed_repeats_ms);
  j.at("embedding_calls").get_to(l.embedding_calls);
  j.at("qubits_used").get_to(l.qubits_used);
  j.at("max_chain_length").get_to(l.max_chain_length);
  if (j.at("classical_ms").is_null()) l.classical_ms.reset();
  else l.classical_ms = j.at("classical_ms").get<double>();
  j.at("rows").get_to(l.rows);
}

}  // namespace hybrid
