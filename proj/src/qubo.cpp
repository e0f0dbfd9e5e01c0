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

#include "hybrid/qubo.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hybrid/numeric_format.hpp"

namespace hybrid {

QuboMatrix::QuboMatrix(int dimension, QuboKind kind)
    : dimension_(dimension), kind_(kind) {
  if (dimension < 0) throw std::invalid_argument("negative QUBO dimension");
}

QuboMatrix::QuboMatrix(int dimension, std::vector<QuboTerm> terms, QuboKind kind)
    : QuboMatrix(dimension, kind) {
  for (const auto& t : terms) {
    if (t.i < 0 || t.j < 0 || t.i >= dimension || t.j >= dimension) {
      throw std::invalid_argument("QUBO term index out of range");
    }
    if (t.i > t.j) throw std::invalid_argument("QUBO terms must satisfy i <= j");
    if (!std::isfinite(t.value)) throw std::invalid_argument("non-finite QUBO coefficient");
  }
  std::stable_sort(terms.begin(), terms.end(), [](const QuboTerm& a, const QuboTerm& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  });
  for (const auto& t : terms) {
    if (!terms_.empty() && terms_.back().i == t.i && terms_.back().j == t.j) {
      terms_.back().value += t.value;
    } else {
      terms_.push_back(t);
    }
  }
  std::erase_if(terms_, [](const QuboTerm& t) { return t.value == 0.0; });
}

double QuboMatrix::value(int i, int j) const {
  const auto it = std::lower_bound(
      terms_.begin(), terms_.end(), std::pair{i, j},
      [](const QuboTerm& t, const std::pair<int, int>& key) {
        return t.i != key.first ? t.i < key.first : t.j < key.second;
      });
  return (it != terms_.end() && it->i == i && it->j == j) ? it->value : 0.0;
}

QuboCouplings::QuboCouplings(const QuboMatrix& q) : diag(q.dimension(), 0.0) {
  const int n = q.dimension();
  std::vector<int> count(n, 0);
  for (const auto& t : q.terms()) {
    if (t.i == t.j) {
      diag[t.i] = t.value;
    } else {
      ++count[t.i];
      ++count[t.j];
    }
  }
  offsets.assign(n + 1, 0);
  for (int i = 0; i < n; ++i) offsets[i + 1] = offsets[i] + count[i];
  neighbor.resize(offsets[n]);
  coupling.resize(offsets[n]);
  std::vector<int> fill(offsets.begin(), offsets.end() - 1);
  for (const auto& t : q.terms()) {
    if (t.i == t.j) continue;
    neighbor[fill[t.i]] = t.j;
    coupling[fill[t.i]++] = t.value;
    neighbor[fill[t.j]] = t.i;
    coupling[fill[t.j]++] = t.value;
  }
}

QuboMatrix mwis_to_qubo(const WeightedGraph& graph, std::optional<double> penalty) {
  const double max_w = graph.max_weight();
  const double s = penalty.value_or(max_w + 1.0);
  if (!(s > max_w)) {
    throw std::invalid_argument("penalty weight must exceed the largest vertex weight");
  }
  std::vector<QuboTerm> terms;
  terms.reserve(graph.vertex_count() + graph.edge_count());
  for (int v = 0; v < graph.vertex_count(); ++v) terms.push_back({v, v, -graph.weight(v)});
  for (const auto& [u, v] : graph.edges()) terms.push_back({u, v, s});
  return QuboMatrix(graph.vertex_count(), std::move(terms), QuboKind::Logical);
}

double evaluate(const QuboMatrix& q, std::span<const std::uint8_t> x) {
  if (static_cast<int>(x.size()) != q.dimension()) {
    throw std::invalid_argument("assignment length " + std::to_string(x.size()) +
                                " does not match QUBO dimension " +
                                std::to_string(q.dimension()));
  }
  double energy = 0.0;
  for (const auto& t : q.terms()) {
    if (x[t.i] && x[t.j]) energy += t.value;
  }
  return energy;
}

DecodedSet decode_independent_set(const WeightedGraph& graph,
                                  std::span<const std::uint8_t> x) {
  if (static_cast<int>(x.size()) != graph.vertex_count()) {
    throw std::invalid_argument("assignment length does not match vertex count");
  }
  DecodedSet out;
  for (int v = 0; v < graph.vertex_count(); ++v) {
    if (!x[v]) continue;
    out.vertices.push_back(v);
    out.weight += graph.weight(v);
  }
  for (const auto& [u, v] : graph.edges()) {
    if (x[u] && x[v]) {
      out.independent = false;
      break;
    }
  }
  return out;
}

QuboMinimum brute_force_qubo(const QuboMatrix& q, int cap) {
  const int n = q.dimension();
  if (n > cap) {
    throw std::invalid_argument("brute force limited to " + std::to_string(cap) +
                                " variables, got " + std::to_string(n));
  }
  if (n > 62) throw std::invalid_argument("brute force cannot exceed 62 variables");

  const QuboCouplings c(q);
  double scale = 1.0;
  for (const auto& t : q.terms()) scale += std::abs(t.value);
  // Incremental energies drift by rounding; every assignment within `slack`
  // of the running minimum is re-evaluated exactly at the end.
  const double slack = 1e-7 * scale;

  std::vector<double> field(n, 0.0);  // sum_j Q(i,j) x_j over off-diagonal j
  Assignment x(n, 0);
  std::uint64_t mask = 0;
  double energy = 0.0;
  double best = 0.0;
  std::vector<std::pair<std::uint64_t, double>> candidates{{0, 0.0}};

  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k < total; ++k) {
    const int b = std::countr_zero(k);
    const double sign = x[b] ? -1.0 : 1.0;
    energy += sign * (c.diag[b] + field[b]);
    x[b] ^= 1;
    mask ^= std::uint64_t{1} << b;
    for (int e = c.offsets[b]; e < c.offsets[b + 1]; ++e) {
      field[c.neighbor[e]] += sign * c.coupling[e];
    }
    if (energy <= best + slack) {
      if (energy < best) {
        best = energy;
        if (candidates.size() > 1024) {
          std::erase_if(candidates, [&](const auto& cand) { return cand.second > best + slack; });
        }
      }
      candidates.emplace_back(mask, energy);
    }
  }

  QuboMinimum result;
  bool have = false;
  std::uint64_t best_mask = 0;
  Assignment probe(n);
  for (const auto& [m, approx] : candidates) {
    if (approx > best + slack) continue;
    for (int i = 0; i < n; ++i) probe[i] = static_cast<std::uint8_t>((m >> i) & 1U);
    const double exact = evaluate(q, probe);
    if (!have || exact < result.energy || (exact == result.energy && m < best_mask)) {
      have = true;
      result.energy = exact;
      best_mask = m;
    }
  }
  result.x.resize(n);
  for (int i = 0; i < n; ++i) result.x[i] = static_cast<std::uint8_t>((best_mask >> i) & 1U);
  return result;
}

std::string render_qubo(const QuboMatrix& q) {
  std::ostringstream out;
  out << "qubo n " << q.dimension();
  if (q.kind() == QuboKind::Embedded) out << " embedded";
  out << '\n';
  for (const auto& t : q.terms()) {
    out << t.i << ' ' << t.j << ' ' << format_double(t.value) << '\n';
  }
  return out.str();
}

QuboMatrix parse_qubo(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  int dim = -1;
  QuboKind kind = QuboKind::Logical;
  std::vector<QuboTerm> terms;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::string a, b, c, d;
    fields >> a;
    if (a.empty()) continue;
    if (dim < 0) {
      fields >> b >> c >> d;
      const auto n = parse_int<int>(c);
      if (a != "qubo" || b != "n" || !n || *n < 0) {
        throw ParseError(line_no, "expected header 'qubo n <dim>'");
      }
      if (d == "embedded") kind = QuboKind::Embedded;
      else if (!d.empty()) throw ParseError(line_no, "unknown QUBO kind '" + d + "'");
      dim = *n;
      continue;
    }
    fields >> b >> c >> d;
    const auto i = parse_int<int>(a);
    const auto j = parse_int<int>(b);
    const auto v = parse_double(c);
    if (!i || !j || !v || !d.empty()) throw ParseError(line_no, "expected '<i> <j> <value>'");
    if (*i < 0 || *j < 0 || *i >= dim || *j >= dim || *i > *j) {
      throw ParseError(line_no, "term index out of range or below the diagonal");
    }
    terms.push_back({*i, *j, *v});
  }
  if (dim < 0) throw ParseError(line_no, "missing 'qubo n <dim>' header");
  return QuboMatrix(dim, std::move(terms), kind);
}

}  // namespace hybrid
