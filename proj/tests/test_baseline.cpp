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

#include <random>

#include "hybrid/baseline.hpp"
#include "oracle.hpp"

using namespace hybrid;

namespace {
BipSolution solve(const WeightedGraph& g, BipOptions opt = {}) {
  return solve_bip(build_constraints(g), g.weights(), opt);
}
}  // namespace

TEST_CASE("constraint lists") {
  CHECK(build_constraints(generate_family(GraphFamily::parse("K_3"))).size() == 3);
  CHECK(build_constraints(WeightedGraph(4, {})).empty());
  CHECK(build_constraints(generate_family(GraphFamily::parse("C_4"))).size() == 4);
}

TEST_CASE("small exact solutions") {
  const auto star = generate_family(GraphFamily::parse("S_4")).with_weights({2.5, 1, 1, 1, 1});
  const auto s = solve(star);
  CHECK(s.vertices == std::vector<int>{1, 2, 3, 4});
  CHECK(s.weight == 4.0);

  const auto k5 = generate_family(GraphFamily::parse("K_5")).with_weights({.1, .2, .3, .4, .5});
  const auto k = solve(k5);
  CHECK(k.vertices == std::vector<int>{4});
  CHECK(k.weight == 0.5);

  const auto c4 = solve(generate_family(GraphFamily::parse("C_4")));
  CHECK(c4.weight == 2.0);
  CHECK(c4.vertices == std::vector<int>{0, 2});  // lexicographically smallest
}

TEST_CASE("branch and bound equals subset enumeration") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 120; ++t) {
    const int n = 1 + static_cast<int>(rng() % 16);
    const auto g = oracle::random_graph(n, (rng() % 10) / 10.0, rng);
    const auto expect = oracle::mwis_cents(g);
    for (auto bound : {BoundKind::UndecidedSum, BoundKind::CliqueCover}) {
      for (bool split : {true, false}) {
        const auto s = solve(g, {bound, split});
        CHECK(oracle::set_independent(g, s.vertices));
        CHECK(oracle::set_cents(g, s.vertices) == expect);
      }
    }
  }
}

TEST_CASE("selected set is invariant under weight scaling") {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 40; ++t) {
    const auto g = oracle::random_graph(10, 0.35, rng);
    const auto base = solve(g);
    for (double c : {0.5, 3.0, 100.0}) {
      auto w = g.weights();
      for (auto& x : w) x *= c;
      CHECK(solve(g.with_weights(w)).vertices == base.vertices);
    }
  }
}

TEST_CASE("classical DWMWIS run") {
  const auto g = generate_family(GraphFamily::parse("C_9"));
  const auto inst = make_dwmwis_instance(g, 12, 4);
  for (auto clock : {ClockKind::Measured, ClockKind::OperationCount}) {
    const auto run = solve_dwmwis_classical(inst, clock);
    CHECK(run.constraint_builds == 1);
    REQUIRE(run.optima.size() == 12);
    CHECK(run.assignment_ms.size() == 12);
    double sum = run.constraint_ms;
    for (int i = 0; i < 12; ++i) {
      const auto gi = inst.weighted(i);
      CHECK(oracle::set_cents(gi, run.optima[i].vertices) == oracle::mwis_cents(gi));
      CHECK(run.assignment_ms[i] >= 0.0);
      sum += run.assignment_ms[i];
    }
    CHECK(run.total_ms == doctest::Approx(sum));
  }
  const auto one = make_dwmwis_instance(g, 1, 4);
  const auto run = solve_dwmwis_classical(one, ClockKind::OperationCount);
  const auto direct = solve(one.weighted(0));
  CHECK(run.optima[0].vertices == direct.vertices);
  CHECK(run.optima[0].weight == direct.weight);
}

TEST_CASE("bad input") {
  CHECK_THROWS_AS(solve_bip({{0, 3}}, std::vector<double>{1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(solve_bip({}, std::vector<double>{1, -1}), std::invalid_argument);
}
