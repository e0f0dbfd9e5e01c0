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

#include "hybrid/baseline.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include <boost/dynamic_bitset.hpp>

namespace hybrid {

ConstraintList build_constraints(const WeightedGraph& graph) { return graph.edges(); }

namespace {

using Bits = boost::dynamic_bitset<>;

// Does A precede B in lexicographic order of sorted index lists? For sets
// of equal optimal weight neither contains the other, so this reduces to
// "the smallest element of the symmetric difference lies in A".
bool lex_less(const Bits& a, const Bits& b) {
  const Bits diff = a ^ b;
  const auto first = diff.find_first();
  return first != Bits::npos && a.test(first);
}

class MwisSearch {
 public:
  MwisSearch(int n, const ConstraintList& constraints, std::span<const double> weights,
             const BipOptions& options)
      : n_(n), weights_(weights), options_(options), adj_(n, Bits(n)), order_(n) {
    for (const auto& [u, v] : constraints) {
      adj_[u].set(v);
      adj_[v].set(u);
    }
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return weights_[a] > weights_[b]; });
    double total = 0.0;
    for (const double w : weights_) total += w;
    eps_ = 1e-9 * (1.0 + total);
  }

  struct Best {
    double weight = -std::numeric_limits<double>::infinity();
    Bits set;
  };

  Best solve(const Bits& undecided) {
    Best best;
    best.set = Bits(n_);
    Bits current(n_);
    search(undecided, 0.0, current, best);
    return best;
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  void offer(double weight, const Bits& set, Best& best) const {
    if (weight > best.weight + eps_ ||
        (weight >= best.weight - eps_ && lex_less(set, best.set))) {
      best.weight = weight;
      best.set = set;
    }
  }

  double bound(const Bits& p) const {
    double sum = 0.0;
    if (options_.bound == BoundKind::UndecidedSum) {
      for (auto v = p.find_first(); v != Bits::npos; v = p.find_next(v)) sum += weights_[v];
      return sum;
    }
    // Greedy clique cover in descending weight order; each clique's first
    // member is its heaviest.
    std::vector<Bits> members;
    for (const int v : order_) {
      if (!p.test(v)) continue;
      bool placed = false;
      for (auto& clique : members) {
        if (clique.is_subset_of(adj_[v])) {
          clique.set(v);
          placed = true;
          break;
        }
      }
      if (!placed) {
        members.emplace_back(n_);
        members.back().set(v);
        sum += weights_[v];
      }
    }
    return sum;
  }

  std::vector<Bits> components(const Bits& p) const {
    std::vector<Bits> out;
    Bits left = p;
    while (left.any()) {
      Bits comp(n_);
      Bits frontier(n_);
      frontier.set(left.find_first());
      while (frontier.any()) {
        comp |= frontier;
        Bits next(n_);
        for (auto v = frontier.find_first(); v != Bits::npos; v = frontier.find_next(v)) {
          next |= adj_[v];
        }
        frontier = next & left & ~comp;
      }
      left &= ~comp;
      out.push_back(std::move(comp));
    }
    return out;
  }

  void search(const Bits& p, double weight, Bits& current, Best& best) {
    ++nodes_;
    if (p.none()) {
      offer(weight, current, best);
      return;
    }
    if (weight + bound(p) < best.weight - eps_) return;

    if (options_.split_components) {
      auto parts = components(p);
      if (parts.size() > 1) {
        Bits combined = current;
        double total = weight;
        for (const auto& part : parts) {
          const Best sub = solve(part);
          total += sub.weight;
          combined |= sub.set;
        }
        offer(total, combined, best);
        return;
      }
    }

    int v = -1;
    for (const int cand : order_) {
      if (p.test(cand)) {
        v = cand;
        break;
      }
    }
    Bits with = p & ~adj_[v];
    with.reset(v);
    current.set(v);
    search(with, weight + weights_[v], current, best);
    current.reset(v);

    Bits without = p;
    without.reset(v);
    search(without, weight, current, best);
  }

  int n_;
  std::span<const double> weights_;
  BipOptions options_;
  std::vector<Bits> adj_;
  std::vector<int> order_;
  double eps_ = 0.0;
  std::uint64_t nodes_ = 0;
};

}  // namespace

BipSolution solve_bip(const ConstraintList& constraints, std::span<const double> weights,
                      const BipOptions& options) {
  const int n = static_cast<int>(weights.size());
  for (const double w : weights) {
    if (!(w > 0.0) || !std::isfinite(w)) throw std::invalid_argument("BIP weights must be positive");
  }
  for (const auto& [u, v] : constraints) {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) {
      throw std::invalid_argument("constraint references a variable outside the weight vector");
    }
  }
  BipSolution out;
  if (n == 0) return out;

  MwisSearch search(n, constraints, weights, options);
  Bits all(n);
  all.set();
  const auto best = search.solve(all);
  for (auto v = best.set.find_first(); v != Bits::npos; v = best.set.find_next(v)) {
    out.vertices.push_back(static_cast<int>(v));
    out.weight += weights[v];
  }
  out.nodes = search.nodes();
  return out;
}

ClassicalRun solve_dwmwis_classical(const DwmwisInstance& instance, ClockKind clock,
                                    const BipOptions& options) {
  ClassicalRun run;
  run.clock = clock;
  run.processor_time = clock == ClockKind::OperationCount || thread_cpu_clock_available();

  const double start = thread_cpu_ms();
  const ConstraintList constraints = build_constraints(instance.graph());
  ++run.constraint_builds;
  const double built = thread_cpu_ms();
  run.constraint_ms = clock == ClockKind::Measured
                          ? built - start
                          : static_cast<double>(constraints.size()) * work_cost::kConstraintMs;

  double total = run.constraint_ms;
  for (const auto& weights : instance.weight_sets()) {
    const double t0 = thread_cpu_ms();
    auto solution = solve_bip(constraints, weights, options);
    const double t1 = thread_cpu_ms();
    const double ms = clock == ClockKind::Measured
                          ? t1 - t0
                          : static_cast<double>(solution.nodes) * work_cost::kBranchNodeMs;
    run.assignment_ms.push_back(ms);
    total += ms;
    run.optima.push_back(std::move(solution));
  }
  run.total_ms = total;
  return run;
}

}  // namespace hybrid
