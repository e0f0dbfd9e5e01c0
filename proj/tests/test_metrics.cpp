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

#include <doctest.h>

#include <cmath>
#include <random>

#include <json.hpp>

#include "hybrid/metrics.hpp"

using namespace hybrid;
using doctest::Approx;

namespace {

AssignmentTiming row(int index, std::int64_t hits, std::int64_t reads) {
  AssignmentTiming r;
  r.index = index;
  r.optimum = 1.5;
  r.best_weight = hits > 0 ? 1.5 : 1.2;
  r.reads = reads;
  r.optimal_reads = hits;
  r.t_conv_ms = 0.01;
  r.t_pre_ms = 0.02;
  apply_timing_model(r, TimingModel{});
  return r;
}

TimingLedger ledger(Algorithm algo, int m, double t_embed, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  TimingLedger l;
  l.instance = "K_7";
  l.family = "K";
  l.n_vertices = 7;
  l.m = m;
  l.algorithm = algo;
  l.clock = ClockKind::OperationCount;
  l.t_embed_ms = t_embed;
  l.embedding_calls = algo == Algorithm::Hybrid ? 1 : m;
  l.embed_repeats_ms = {t_embed, t_embed * 1.1, t_embed * 0.9};
  l.classical_ms = 12.5;
  for (int i = 0; i < m; ++i) {
    auto r = row(i, 1 + static_cast<std::int64_t>(rng() % 1000), 1000);
    if (algo == Algorithm::Standard) r.t_embed_ms = t_embed;
    l.rows.push_back(r);
  }
  return l;
}

}  // namespace

TEST_CASE("k99 values") {
  CHECK(k99(0.99, 0.99) == 1);
  CHECK(k99(0.5, 0.99) == 7);
  CHECK(k99(1.0) == 1);
  CHECK_FALSE(k99(0.0).has_value());
  CHECK(k99(0.5, 0.5) == 1);
  CHECK(k99(0.1) == static_cast<std::int64_t>(std::ceil(std::log(0.01) / std::log(0.9))));
}

TEST_CASE("k99 is non-increasing in s and at least one") {
  std::int64_t prev = k99(1e-4).value();
  for (int i = 1; i <= 10000; ++i) {
    const double s = i / 10000.0;
    const auto k = k99(s);
    REQUIRE(k);
    CHECK(*k >= 1);
    CHECK(*k <= prev);
    prev = *k;
  }
}

TEST_CASE("per-assignment quantum time") {
  const auto one = row(0, 99, 100);
  CHECK(one.k99 == 1);
  CHECK(*instance_quantum_time(one) == Approx(40.309));
  const auto seven = row(0, 50, 100);
  CHECK(seven.k99 == 7);
  CHECK(*instance_quantum_time(seven) == Approx(42.163));
  const auto none = row(0, 0, 100);
  CHECK_FALSE(none.k99);
  CHECK_FALSE(instance_quantum_time(none));
  CHECK(none.anneal_ms == 0.0);
}

TEST_CASE("Wilson interval against the closed form") {
  for (auto [hits, n] : {std::pair<long, long>{0, 10}, {37, 100}, {1000, 1000}, {5, 7}}) {
    const double z = 1.959963984540054;
    const double p = static_cast<double>(hits) / n;
    const double denom = 1 + z * z / n;
    const double centre = (p + z * z / (2.0 * n)) / denom;
    const double half = z * std::sqrt(p * (1 - p) / n + z * z / (4.0 * n * n)) / denom;
    const auto ci = wilson_interval(hits, n);
    CHECK(ci.low == Approx(std::max(0.0, centre - half)));
    CHECK(ci.high == Approx(std::min(1.0, centre + half)));
    CHECK(ci.low <= p);
    CHECK(ci.high >= p);
  }
}

TEST_CASE("hybrid and standard totals differ by (m-1) embeddings") {
  const auto h = ledger(Algorithm::Hybrid, 100, 1000.0, 3);
  const auto s = ledger(Algorithm::Standard, 100, 1000.0, 3);
  const auto r = aggregate(h, &s);
  CHECK(r.t_std_ms - r.t_h_ms == Approx(99000.0).epsilon(1e-12));
  CHECK(r.unsolved_count == 0);
  REQUIRE(r.r_c);
  CHECK(*r.r_c == Approx(r.t_h_ms / 12.5));
  CHECK(r.embed_spread.min == Approx(900.0));
  CHECK(r.embed_spread.max == Approx(1100.0));
  CHECK(r.embed_spread.median == 1000.0);

  // Without a standard ledger the charge is derived from the hybrid one.
  CHECK(aggregate(h).t_std_ms == r.t_std_ms);

  const auto h1 = ledger(Algorithm::Hybrid, 1, 1000.0, 4);
  const auto s1 = ledger(Algorithm::Standard, 1, 1000.0, 4);
  CHECK(aggregate(h1, &s1).t_h_ms == aggregate(h1, &s1).t_std_ms);
  const auto h0 = ledger(Algorithm::Hybrid, 10, 0.0, 5);
  const auto s0 = ledger(Algorithm::Standard, 10, 0.0, 5);
  CHECK(aggregate(h0, &s0).t_h_ms == aggregate(h0, &s0).t_std_ms);
}

TEST_CASE("unsolved rows make the report partial") {
  auto h = ledger(Algorithm::Hybrid, 3, 10.0, 6);
  h.rows[1] = row(1, 0, 1000);
  const auto r = aggregate(h);
  CHECK(r.unsolved_count == 1);
  CHECK(r.partial());
  CHECK_FALSE(r.warnings.empty());
  CHECK(r.t_h_ms == Approx(10.0 + *instance_quantum_time(h.rows[0]) + *instance_quantum_time(h.rows[2])));
  CHECK(assignment_csv_rows(h).find(",unsolved,") != std::string::npos);

  h.classical_ms.reset();
  CHECK_FALSE(aggregate(h).r_c);
  h.rows.pop_back();
  CHECK_THROWS_AS(aggregate(h), std::invalid_argument);
}

TEST_CASE("durations are nonnegative") {
  const auto h = ledger(Algorithm::Hybrid, 20, 3.0, 7);
  const auto r = aggregate(h);
  CHECK(r.t_h_ms >= 0.0);
  CHECK(r.t_std_ms >= r.t_h_ms);
  for (const auto& x : h.rows) {
    CHECK(x.anneal_ms >= 0.0);
    CHECK(x.t_prog_ms >= 0.0);
  }
}

TEST_CASE("corpus CSV layout and round trip") {
  const auto h = ledger(Algorithm::Hybrid, 5, 7.25, 8);
  auto r = aggregate(h);
  CorpusRow missing = to_corpus_row(r);
  missing.instance = "C_3";
  missing.t_c_ms.reset();
  missing.r_c.reset();
  const std::vector<CorpusRow> rows{to_corpus_row(r), missing};
  const auto text = render_corpus_csv(rows);
  CHECK(text.rfind("instance,family,n_vertices,m,t_embed_ms,T_H_ms,T_std_ms,T_C_ms,R_C,unsolved_count\n", 0) == 0);
  CHECK(parse_corpus_csv(text) == rows);
  CHECK(text.find("C_3,K,7,5,7.25,") != std::string::npos);
  CHECK(corpus_csv_row(r) == text.substr(text.find('\n') + 1, text.find("C_3") - text.find('\n') - 1));
  CHECK_THROWS_AS(parse_corpus_csv("bad header\n"), ParseError);
  CHECK_THROWS_AS(parse_corpus_csv(std::string(kCorpusCsvHeader) + "\nK_7,K,x,5,1,1,1,,,0\n"), ParseError);
}

TEST_CASE("ledger JSON round trip") {
  auto h = ledger(Algorithm::Standard, 4, 0.1 + 0.2, 9);
  h.rows[2] = row(2, 0, 1000);
  const nlohmann::json j = h;
  CHECK(j.at("algorithm") == "standard");
  CHECK(j.at("rows").at(2).at("k99").is_null());
  const auto back = nlohmann::json::parse(j.dump()).get<TimingLedger>();
  CHECK(back == h);
  h.classical_ms.reset();
  CHECK(nlohmann::json(h).get<TimingLedger>() == h);
}

TEST_CASE("compensated sum") {
  std::vector<double> v{1e16, 1.0, -1e16, 1.0};
  CHECK(compensated_sum(v) == 2.0);
}
