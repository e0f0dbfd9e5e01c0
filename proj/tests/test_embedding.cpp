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

#include <filesystem>
#include <limits>
#include <random>

#include "hybrid/chimera.hpp"
#include "hybrid/embedding.hpp"
#include "hybrid/qubo.hpp"
#include "oracle.hpp"

using namespace hybrid;
using Kind = EmbeddingViolation::Kind;

namespace {

std::shared_ptr<const WeightedGraph> share(WeightedGraph g) {
  return std::make_shared<const WeightedGraph>(std::move(g));
}

std::shared_ptr<const ChimeraGraph> chimera(int k, std::vector<int> inactive = {}) {
  return std::make_shared<const ChimeraGraph>(build_chimera(k, inactive));
}

bool has(const std::vector<EmbeddingViolation>& vs, Kind kind) {
  for (const auto& v : vs)
    if (v.kind == kind) return true;
  return false;
}

Assignment bits(std::uint64_t mask, int n) {
  Assignment x(n);
  for (int i = 0; i < n; ++i) x[i] = mask >> i & 1;
  return x;
}

}  // namespace

TEST_CASE("K_4_4 embeds into one cell with singleton chains") {
  auto r = find_embedding(share(generate_family(GraphFamily::parse("K_4_4"))), chimera(1), 1);
  REQUIRE(r);
  CHECK(r.embedding->max_chain_length() == 1);
  CHECK(verify_embedding(*r.embedding).empty());
}

TEST_CASE("K_5 embeds into one cell with chains of at most two") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto r = find_embedding(share(generate_family(GraphFamily::parse("K_5"))), chimera(1), seed);
    REQUIRE(r);
    CHECK(r.embedding->max_chain_length() <= 2);
    CHECK(verify_embedding(*r.embedding).empty());
  }
}

TEST_CASE("too many logical vertices fail") {
  auto r = find_embedding(share(generate_family(GraphFamily::parse("K_50"))), chimera(2), 1);
  CHECK_FALSE(r);
  CHECK_FALSE(r.failure.empty());
}

TEST_CASE("verify_embedding reports each broken condition") {
  const auto phys = chimera(1);
  const auto edge = share(WeightedGraph(2, {{0, 1}}));
  CHECK(verify_embedding(Embedding(edge, phys, {{0}, {4}})).empty());
  CHECK(has(verify_embedding(Embedding(edge, phys, {{0, 4}, {4}})), Kind::SharedQubit));
  // 0 and 1 are on the same side of the cell, so not coupled.
  CHECK(has(verify_embedding(Embedding(edge, phys, {{0, 1}, {4}})), Kind::DisconnectedChain));
  CHECK(has(verify_embedding(Embedding(edge, phys, {{0}, {1}})), Kind::MissingCoupler));
  CHECK(has(verify_embedding(Embedding(edge, phys, {{0}, {}})), Kind::EmptyChain));
  const auto masked = chimera(1, {4});
  CHECK(has(verify_embedding(Embedding(edge, masked, {{0}, {4}})), Kind::InactiveQubit));
}

TEST_CASE("found embeddings pass verification on random graphs") {
  const auto phys = chimera(12, random_inactive_qubits(12, 54, 8));
  std::mt19937_64 rng(41);
  for (int t = 0; t < 12; ++t) {
    const int n = 5 + static_cast<int>(rng() % 36);
    const double p = std::min(0.5, 4.0 / n);
    auto g = share(oracle::random_graph(n, p, rng));
    auto r = find_embedding(g, phys, rng());
    REQUIRE_MESSAGE(r, r.failure);
    CHECK(verify_embedding(*r.embedding).empty());
  }
}

TEST_CASE("embedding is a pure function of the seed") {
  const auto phys = chimera(6);
  auto g = share(generate_family(GraphFamily::parse("K_9")));
  auto a = find_embedding(g, phys, 12);
  auto b = find_embedding(g, phys, 12);
  REQUIRE(a);
  REQUIRE(b);
  CHECK(*a.embedding == *b.embedding);
  CHECK(a.stats.work_units == b.stats.work_units);
}

TEST_CASE("singleton chains reproduce the logical QUBO") {
  const auto logical = generate_family(GraphFamily::parse("K_4_4"));
  auto r = find_embedding(share(logical), chimera(1), 3);
  REQUIRE(r);
  const auto& e = *r.embedding;
  const auto q = mwis_to_qubo(logical.with_weights({0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8}));
  const auto phys = embed_qubo(q, e).qubo;
  CHECK(phys.terms().size() == q.terms().size());
  for (const auto& t : q.terms()) {
    const int a = e.compact_index(e.chain(t.i)[0]);
    const int b = e.compact_index(e.chain(t.j)[0]);
    CHECK(phys.value(a, b) == t.value);
  }
}

TEST_CASE("two-qubit chain gadget") {
  const auto phys = chimera(1);
  Embedding e(share(WeightedGraph(1, {})), phys, {{0, 4}});
  const double c = 3.0;
  EmbedQuboOptions opt;
  opt.chain_strength = c;
  const auto q = embed_qubo(mwis_to_qubo(WeightedGraph(1, {})), e, opt).qubo;
  CHECK(q.diagonal(0) == -0.5 + c);
  CHECK(q.diagonal(1) == -0.5 + c);
  CHECK(q.value(0, 1) == -2 * c);
  // Local minima under single flips: exactly the two unanimous states.
  for (std::uint64_t m = 0; m < 4; ++m) {
    const auto x = bits(m, 2);
    bool local_min = true;
    for (int i = 0; i < 2; ++i) {
      auto y = x;
      y[i] ^= 1;
      if (evaluate(q, y) < evaluate(q, x)) local_min = false;
    }
    CHECK(local_min == (m == 0 || m == 3));
  }
  CHECK(evaluate(q, Assignment{1, 1}) == -1.0);
}

TEST_CASE("edge graph minimum survives embedding") {
  const WeightedGraph edge(2, {{0, 1}}, {0.3, 0.7});
  const auto phys = chimera(1);
  Embedding e(share(edge), phys, {{0, 4}, {5, 1}});
  REQUIRE(verify_embedding(e).empty());
  const auto q = embed_qubo(mwis_to_qubo(edge, 1.7), e).qubo;
  const auto min = brute_force_qubo(q);
  const auto un = unembed_sample(min.x, e, edge);
  CHECK(un.broken_chains == 0);
  CHECK(un.logical == Assignment{0, 1});
  CHECK(min.energy == doctest::Approx(-0.7));
}

TEST_CASE("broken chains never beat unanimous ones") {
  const auto phys = chimera(2);
  std::mt19937_64 rng(57);
  int checked = 0;
  for (int t = 0; t < 40 && checked < 15; ++t) {
    const auto g = oracle::random_graph(3 + static_cast<int>(rng() % 3), 0.6, rng);
    auto r = find_embedding(share(g), phys, rng());
    REQUIRE(r);
    const auto& e = *r.embedding;
    const int n = static_cast<int>(e.used_qubits().size());
    if (n > 16) continue;
    ++checked;
    const auto q = embed_qubo(mwis_to_qubo(g), e).qubo;
    double best_unanimous = std::numeric_limits<double>::infinity();
    double best_broken = std::numeric_limits<double>::infinity();
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      const auto x = bits(m, n);
      const double energy = evaluate(q, x);
      if (unembed_sample(x, e, g).broken_chains == 0) {
        best_unanimous = std::min(best_unanimous, energy);
      } else {
        best_broken = std::min(best_broken, energy);
      }
    }
    CHECK(best_broken > best_unanimous);
  }
  CHECK(checked >= 10);
}

TEST_CASE("unembedding votes and repairs") {
  const auto phys = chimera(1);
  const WeightedGraph single(1, {});
  Embedding chain3(share(single), phys, {{0, 4, 1}});
  REQUIRE(verify_embedding(chain3).empty());
  // used qubits are {0, 1, 4}: qubits 0 and 4 vote 1, qubit 1 votes 0.
  const auto vote = unembed_sample(Assignment{1, 0, 1}, chain3, single);
  CHECK(vote.logical == Assignment{1});
  CHECK(vote.broken_chains == 1);
  const auto unanimous = unembed_sample(Assignment{1, 1, 1}, chain3, single);
  CHECK(unanimous.logical == Assignment{1});
  CHECK(unanimous.broken_chains == 0);
  CHECK_THROWS(unembed_sample(Assignment{1, 1}, chain3, single));

  // Random physical states always repair to independent sets.
  std::mt19937_64 rng(61);
  const auto g = generate_family(GraphFamily::parse("K_6")).with_weights({.1, .9, .4, .4, .7, .2});
  auto r = find_embedding(share(g), chimera(2), 5);
  REQUIRE(r);
  const int n = static_cast<int>(r.embedding->used_qubits().size());
  for (int t = 0; t < 500; ++t) {
    Assignment x(n);
    for (auto& b : x) b = rng() & 1;
    const auto un = unembed_sample(x, *r.embedding, g);
    CHECK(decode_independent_set(g, un.logical).independent);
  }
}

TEST_CASE("new weights change only diagonals") {
  const auto base = generate_family(GraphFamily::parse("C_8"));
  auto r = find_embedding(share(base), chimera(4), 2);
  REQUIRE(r);
  EmbedQuboOptions opt;
  opt.chain_strength = 8.0;
  const auto a = embed_qubo(mwis_to_qubo(base.with_weights({.1, .2, .3, .4, .5, .6, .7, .8}), 2.0), *r.embedding, opt).qubo;
  const auto b = embed_qubo(mwis_to_qubo(base.with_weights({.9, .1, .5, .5, .3, .2, .1, .6}), 2.0), *r.embedding, opt).qubo;
  REQUIRE(a.terms().size() == b.terms().size());
  for (std::size_t i = 0; i < a.terms().size(); ++i) {
    const auto& ta = a.terms()[i];
    const auto& tb = b.terms()[i];
    CHECK(ta.i == tb.i);
    CHECK(ta.j == tb.j);
    if (ta.i != ta.j) CHECK(ta.value == tb.value);
  }
  CHECK(a != b);
}

TEST_CASE("split coupler placement keeps the logical penalty") {
  const auto g = generate_family(GraphFamily::parse("K_6"));
  auto r = find_embedding(share(g), chimera(2), 9);
  REQUIRE(r);
  const auto& e = *r.embedding;
  const auto q = mwis_to_qubo(g, 2.0);
  EmbedQuboOptions split;
  split.placement = CouplerPlacement::Split;
  const auto rep = embed_qubo(q, e).qubo;
  const auto spl = embed_qubo(q, e, split).qubo;
  // Any unanimous state has the same energy under both placements.
  std::mt19937_64 rng(2);
  for (int t = 0; t < 64; ++t) {
    Assignment logical(6);
    for (auto& b : logical) b = rng() & 1;
    Assignment x(e.used_qubits().size(), 0);
    for (int v = 0; v < 6; ++v)
      for (int qb : e.chain(v)) x[e.compact_index(qb)] = logical[v];
    CHECK(evaluate(rep, x) == doctest::Approx(evaluate(spl, x)));
    CHECK(evaluate(rep, x) == doctest::Approx(evaluate(q, logical)));
  }
}

TEST_CASE("chains text and cache round trip") {
  const auto phys = chimera(3);
  auto g = share(generate_family(GraphFamily::parse("K_6")));
  auto r = find_embedding(g, phys, 4);
  REQUIRE(r);
  CHECK(parse_chains(render_chains(*r.embedding)) == r.embedding->chains());

  const auto dir = std::filesystem::temp_directory_path() / "hybrid-embed-cache-test";
  std::filesystem::remove_all(dir);
  const EmbeddingCache cache(dir);
  CHECK_FALSE(cache.load(g, phys, 4));
  cache.store(r, 4);
  const auto hit = cache.load(g, phys, 4);
  REQUIRE(hit);
  CHECK(*hit->embedding == *r.embedding);
  CHECK_FALSE(cache.load(g, phys, 5));
  std::filesystem::remove_all(dir);
}
