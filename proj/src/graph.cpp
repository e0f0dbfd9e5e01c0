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

#include "hybrid/graph.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hybrid/numeric_format.hpp"
#include "hybrid/random.hpp"

namespace hybrid {

namespace {

std::vector<Edge> canonical_edges(int n, std::vector<Edge> edges) {
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

void check_weights(int n, const std::vector<double>& weights) {
  if (static_cast<int>(weights.size()) != n) {
    throw std::invalid_argument("weight vector length does not match vertex count");
  }
  for (const double w : weights) {
    if (!(w > 0.0) || !std::isfinite(w)) {
      throw std::invalid_argument("vertex weights must be finite and strictly positive");
    }
  }
}

}  // namespace

WeightedGraph::WeightedGraph(int vertex_count, std::vector<Edge> edges)
    : WeightedGraph(vertex_count, std::move(edges),
                    std::vector<double>(std::max(vertex_count, 0), 1.0)) {}

WeightedGraph::WeightedGraph(int vertex_count, std::vector<Edge> edges,
                             std::vector<double> weights) {
  if (vertex_count < 1) throw std::invalid_argument("graph needs at least one vertex");
  edges_ = canonical_edges(vertex_count, std::move(edges));
  check_weights(vertex_count, weights);
  weights_ = std::move(weights);
  adjacency_.resize(vertex_count);
  for (const auto& [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

bool WeightedGraph::has_edge(int u, int v) const {
  const auto& list = adjacency_.at(u);
  return std::binary_search(list.begin(), list.end(), v);
}

double WeightedGraph::max_weight() const {
  return *std::max_element(weights_.begin(), weights_.end());
}

WeightedGraph WeightedGraph::with_weights(std::vector<double> weights) const {
  check_weights(vertex_count(), weights);
  WeightedGraph copy = *this;
  copy.weights_ = std::move(weights);
  return copy;
}

std::string GraphFamily::tag() const {
  switch (kind) {
    case FamilyKind::Cycle: return "C";
    case FamilyKind::Star: return "S";
    case FamilyKind::Complete: return "K";
    case FamilyKind::Path: return "P";
    case FamilyKind::Grid: return "grid";
    case FamilyKind::Bipartite: return "Kab";
  }
  return "?";
}

std::string GraphFamily::id() const {
  switch (kind) {
    case FamilyKind::Grid:
      return "grid_" + std::to_string(a) + "x" + std::to_string(b);
    case FamilyKind::Bipartite:
      return "K_" + std::to_string(a) + "_" + std::to_string(b);
    default:
      return tag() + "_" + std::to_string(a);
  }
}

GraphFamily GraphFamily::parse(std::string_view id) {
  auto fail = [&]() -> GraphFamily {
    throw std::invalid_argument("unrecognised graph family id '" + std::string(id) + "'");
  };
  const auto us = id.find('_');
  if (us == std::string_view::npos) return fail();
  const auto head = id.substr(0, us);
  const auto rest = id.substr(us + 1);

  GraphFamily fam;
  if (head == "grid") {
    const auto x = rest.find('x');
    if (x == std::string_view::npos) return fail();
    const auto r = parse_int<int>(rest.substr(0, x));
    const auto c = parse_int<int>(rest.substr(x + 1));
    if (!r || !c) return fail();
    fam = {FamilyKind::Grid, *r, *c};
  } else if (head == "K" && rest.find('_') != std::string_view::npos) {
    const auto sep = rest.find('_');
    const auto l = parse_int<int>(rest.substr(0, sep));
    const auto r = parse_int<int>(rest.substr(sep + 1));
    if (!l || !r) return fail();
    fam = {FamilyKind::Bipartite, *l, *r};
  } else {
    const auto n = parse_int<int>(rest);
    if (!n) return fail();
    if (head == "C") fam = {FamilyKind::Cycle, *n, 0};
    else if (head == "S") fam = {FamilyKind::Star, *n, 0};
    else if (head == "K") fam = {FamilyKind::Complete, *n, 0};
    else if (head == "P") fam = {FamilyKind::Path, *n, 0};
    else return fail();
  }
  return fam;
}

WeightedGraph generate_family(const GraphFamily& family) {
  const int a = family.a;
  const int b = family.b;
  auto require = [&](bool ok, const char* why) {
    if (!ok) throw std::invalid_argument(family.id() + ": " + why);
  };
  std::vector<Edge> edges;
  switch (family.kind) {
    case FamilyKind::Cycle:
      require(a >= 3, "a cycle needs at least 3 vertices");
      for (int i = 0; i < a; ++i) edges.emplace_back(i, (i + 1) % a);
      return WeightedGraph(a, std::move(edges));
    case FamilyKind::Star:
      require(a >= 1, "a star needs at least one leaf");
      for (int leaf = 1; leaf <= a; ++leaf) edges.emplace_back(0, leaf);
      return WeightedGraph(a + 1, std::move(edges));
    case FamilyKind::Complete:
      require(a >= 1, "a complete graph needs at least one vertex");
      for (int i = 0; i < a; ++i)
        for (int j = i + 1; j < a; ++j) edges.emplace_back(i, j);
      return WeightedGraph(a, std::move(edges));
    case FamilyKind::Path:
      require(a >= 1, "a path needs at least one vertex");
      for (int i = 0; i + 1 < a; ++i) edges.emplace_back(i, i + 1);
      return WeightedGraph(a, std::move(edges));
    case FamilyKind::Grid:
      require(a >= 1 && b >= 1, "grid dimensions must be positive");
      for (int r = 0; r < a; ++r) {
        for (int c = 0; c < b; ++c) {
          const int v = r * b + c;
          if (c + 1 < b) edges.emplace_back(v, v + 1);
          if (r + 1 < a) edges.emplace_back(v, v + b);
        }
      }
      return WeightedGraph(a * b, std::move(edges));
    case FamilyKind::Bipartite:
      require(a >= 1 && b >= 1, "both sides of K_{a,b} must be nonempty");
      for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
      return WeightedGraph(a + b, std::move(edges));
  }
  throw std::invalid_argument("unknown graph family");
}

DwmwisInstance::DwmwisInstance(WeightedGraph graph,
                               std::vector<std::vector<double>> weight_sets,
                               std::uint64_t seed)
    : graph_(std::move(graph)), weight_sets_(std::move(weight_sets)), seed_(seed) {
  if (weight_sets_.empty()) throw std::invalid_argument("DWMWIS instance needs m >= 1");
  for (const auto& ws : weight_sets_) check_weights(graph_.vertex_count(), ws);
}

WeightedGraph DwmwisInstance::weighted(int i) const {
  return graph_.with_weights(weight_sets_.at(i));
}

double DwmwisInstance::max_weight() const {
  double best = 0.0;
  for (const auto& ws : weight_sets_)
    for (const double w : ws) best = std::max(best, w);
  return best;
}

DwmwisInstance make_dwmwis_instance(const WeightedGraph& graph, int m,
                                    std::uint64_t seed) {
  if (m < 1) throw std::invalid_argument("m must be at least 1");
  Rng rng(seed);
  std::vector<std::vector<double>> sets(m);
  for (auto& ws : sets) {
    ws.resize(graph.vertex_count());
    for (auto& w : ws) {
      auto cents = static_cast<int>(std::lround(uniform01(rng) * 100.0));
      if (cents == 0) cents = 1;
      w = cents / 100.0;
    }
  }
  return DwmwisInstance(graph.with_weights(std::vector<double>(graph.vertex_count(), 1.0)),
                        std::move(sets), seed);
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

WeightedGraph parse_graph(std::string_view text) {
  int n = -1;
  std::vector<Edge> edges;
  std::vector<double> weights;
  std::vector<bool> weight_seen;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    auto tokens = split_ws(line);
    if (tokens.empty()) continue;

    auto vertex = [&](std::string_view tok) {
      const auto v = parse_int<int>(tok);
      if (!v) throw ParseError(line_no, "expected a vertex index, got '" + std::string(tok) + "'");
      if (*v < 0 || *v >= n) {
        throw ParseError(line_no, "vertex " + std::to_string(*v) + " out of range 0.." +
                                      std::to_string(n - 1));
      }
      return *v;
    };

    if (tokens[0] == "n") {
      if (n != -1) throw ParseError(line_no, "duplicate 'n' header");
      if (tokens.size() != 2) throw ParseError(line_no, "expected 'n <vertex_count>'");
      const auto count = parse_int<int>(tokens[1]);
      if (!count || *count < 1) throw ParseError(line_no, "vertex count must be a positive integer");
      n = *count;
      weights.assign(n, 1.0);
      weight_seen.assign(n, false);
      continue;
    }
    if (n == -1) throw ParseError(line_no, "'n <vertex_count>' header must come first");

    if (tokens[0] == "w") {
      if (tokens.size() != 3) throw ParseError(line_no, "expected 'w <index> <decimal>'");
      const int v = vertex(tokens[1]);
      const auto w = parse_double(tokens[2]);
      if (!w || !std::isfinite(*w)) throw ParseError(line_no, "malformed weight");
      if (!(*w > 0.0)) throw ParseError(line_no, "weight of vertex " + std::to_string(v) + " must be positive");
      if (weight_seen[v]) throw ParseError(line_no, "duplicate weight for vertex " + std::to_string(v));
      weight_seen[v] = true;
      weights[v] = *w;
      continue;
    }

    // Adjacency line: "<u>: v1 v2 ..." (the colon may be detached).
    std::string_view head = tokens[0];
    std::size_t first_nb = 1;
    if (head.size() > 1 && head.back() == ':') {
      head.remove_suffix(1);
    } else if (tokens.size() > 1 && tokens[1] == ":") {
      first_nb = 2;
    } else {
      throw ParseError(line_no, "unrecognised line '" + std::string(line) + "'");
    }
    const int u = vertex(head);
    for (std::size_t t = first_nb; t < tokens.size(); ++t) {
      const int v = vertex(tokens[t]);
      if (v == u) throw ParseError(line_no, "self-loop on vertex " + std::to_string(u));
      edges.emplace_back(std::min(u, v), std::max(u, v));
    }
  }
  if (n == -1) throw ParseError(line_no, "missing 'n <vertex_count>' header");
  return WeightedGraph(n, std::move(edges), std::move(weights));
}

std::string render_graph(const WeightedGraph& graph, std::string_view header_comment) {
  std::ostringstream out;
  if (!header_comment.empty()) out << "# " << header_comment << '\n';
  out << "n " << graph.vertex_count() << '\n';
  for (int v = 0; v < graph.vertex_count(); ++v) {
    if (graph.weight(v) != 1.0) out << "w " << v << ' ' << format_double(graph.weight(v)) << '\n';
  }
  for (int u = 0; u < graph.vertex_count(); ++u) {
    bool started = false;
    for (const int v : graph.neighbors(u)) {
      if (v < u) continue;
      if (!started) {
        out << u << ':';
        started = true;
      }
      out << ' ' << v;
    }
    if (started) out << '\n';
  }
  return out.str();
}

std::uint64_t structure_hash(const WeightedGraph& graph) {
  std::uint64_t h = derive_seed(0x6772617068ULL, static_cast<std::uint64_t>(graph.vertex_count()));
  for (const auto& [u, v] : graph.edges()) {
    h = derive_seed(h, (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint64_t>(v));
  }
  return h;
}

}  // namespace hybrid
