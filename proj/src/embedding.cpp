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

#include "hybrid/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "hybrid/clock.hpp"
#include "hybrid/numeric_format.hpp"
#include "hybrid/random.hpp"

namespace hybrid {

Embedding::Embedding(std::shared_ptr<const WeightedGraph> logical,
                     std::shared_ptr<const ChimeraGraph> physical,
                     std::vector<std::vector<int>> chains)
    : logical_(std::move(logical)), physical_(std::move(physical)), chains_(std::move(chains)) {
  if (!logical_ || !physical_) throw std::invalid_argument("embedding needs both graphs");
  if (static_cast<int>(chains_.size()) != logical_->vertex_count()) {
    throw std::invalid_argument("one chain per logical vertex required");
  }
  for (auto& chain : chains_) {
    std::sort(chain.begin(), chain.end());
    chain.erase(std::unique(chain.begin(), chain.end()), chain.end());
    used_.insert(used_.end(), chain.begin(), chain.end());
  }
  std::sort(used_.begin(), used_.end());
  used_.erase(std::unique(used_.begin(), used_.end()), used_.end());
}

int Embedding::compact_index(int q) const {
  const auto it = std::lower_bound(used_.begin(), used_.end(), q);
  return (it != used_.end() && *it == q) ? static_cast<int>(it - used_.begin()) : -1;
}

int Embedding::max_chain_length() const {
  std::size_t best = 0;
  for (const auto& c : chains_) best = std::max(best, c.size());
  return static_cast<int>(best);
}

double Embedding::mean_chain_length() const {
  std::size_t total = 0;
  for (const auto& c : chains_) total += c.size();
  return chains_.empty() ? 0.0 : static_cast<double>(total) / static_cast<double>(chains_.size());
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// One embedding attempt. Qubit cost is (1 + history) * alpha^usage, so
// qubits that stay contested round after round get steadily dearer. With
// alpha above the physical diameter a path through free qubits always beats
// one shared qubit; a small alpha lets chains cross more freely.
class ChainRouter {
 public:
  ChainRouter(const WeightedGraph& logical, const ChimeraGraph& physical, Rng& rng, double alpha)
      : logical_(logical),
        physical_(physical),
        rng_(rng),
        alpha_(alpha),
        usage_(physical.qubit_count(), 0),
        chains_(logical.vertex_count()),
        total_(physical.qubit_count()),
        dist_(physical.qubit_count()),
        mark_(physical.qubit_count(), -1),
        history_(physical.qubit_count(), 0.0),
        jitter_(physical.qubit_count(), 0.0) {
    for (int q = 0; q < physical.qubit_count(); ++q) {
      if (physical.is_active(q)) active_.push_back(q);
    }
  }

  std::uint64_t work() const noexcept { return work_; }
  const std::vector<std::vector<int>>& chains() const noexcept { return chains_; }

  // Breadth-first from the highest-degree vertex of each component, so
  // every chain after the first has a placed neighbour to grow from.
  // Degree ties are broken at random.
  std::vector<int> placement_order() {
    const int n = logical_.vertex_count();
    std::vector<int> by_degree(n);
    std::iota(by_degree.begin(), by_degree.end(), 0);
    shuffle(by_degree, rng_);
    std::stable_sort(by_degree.begin(), by_degree.end(), [&](int a, int b) {
      return logical_.degree(a) > logical_.degree(b);
    });
    std::vector<int> rank(n);
    for (int i = 0; i < n; ++i) rank[by_degree[i]] = i;

    std::vector<int> order;
    std::vector<bool> seen(n, false);
    for (const int start : by_degree) {
      if (seen[start]) continue;
      seen[start] = true;
      std::size_t head = order.size();
      order.push_back(start);
      while (head < order.size()) {
        std::vector<int> next;
        for (const int u : logical_.neighbors(order[head++]))
          if (!seen[u]) {
            seen[u] = true;
            next.push_back(u);
          }
        std::sort(next.begin(), next.end(), [&](int a, int b) { return rank[a] < rank[b]; });
        order.insert(order.end(), next.begin(), next.end());
      }
    }
    return order;
  }

  // Drops chain ends that no logical edge needs. Removing a leaf keeps the
  // chain connected, so validity is preserved.
  void trim(int v) {
    auto& chain = chains_[v];
    auto in = [](const std::vector<int>& c, int q) { return std::binary_search(c.begin(), c.end(), q); };
    bool changed = true;
    while (changed && chain.size() > 1) {
      changed = false;
      for (std::size_t i = 0; i < chain.size() && chain.size() > 1; ++i) {
        const int q = chain[i];
        int inner = 0;
        for (const int h : physical_.neighbors(q)) inner += in(chain, h);
        if (inner > 1) continue;
        bool needed = false;
        for (const int u : logical_.neighbors(v)) {
          bool touches = false;
          for (const int a : chain) {
            if (a == q) continue;
            for (const int h : physical_.neighbors(a))
              if (in(chains_[u], h)) {
                touches = true;
                break;
              }
            if (touches) break;
          }
          if (!touches) {
            needed = true;
            break;
          }
        }
        if (needed) continue;
        chain.erase(chain.begin() + static_cast<std::ptrdiff_t>(i));
        --usage_[q];
        changed = true;
        --i;
      }
    }
  }

  void age_shared_qubits() {
    for (std::size_t q = 0; q < usage_.size(); ++q)
      if (usage_[q] > 1) history_[q] += usage_[q] - 1;
  }

  void shuffled(std::vector<int>& order) { shuffle(order, rng_); }

  // Sum over qubits of (usage - 1) where shared.
  long overlap() const {
    long total = 0;
    for (const int u : usage_)
      if (u > 1) total += u - 1;
    return total;
  }

  int total_qubits() const {
    int total = 0;
    for (const auto& c : chains_) total += static_cast<int>(c.size());
    return total;
  }

  // Tear up v's chain and reroute it. With `exclusive`, only free qubits may
  // be used and the old chain is kept unless the new one is no longer.
  bool place(int v, bool exclusive) {
    std::vector<int> old = std::move(chains_[v]);
    chains_[v].clear();
    for (const int q : old) --usage_[q];

    auto fresh = route(v, exclusive);
    if (exclusive && (fresh.empty() || fresh.size() > old.size())) fresh = std::move(old);
    for (const int q : fresh) ++usage_[q];
    chains_[v] = std::move(fresh);
    return !chains_[v].empty();
  }

 private:
  double cost(int q, bool exclusive) const {
    if (exclusive) return usage_[q] == 0 ? 1.0 + jitter_[q] : kInf;
    return (1.0 + history_[q] + jitter_[q]) * std::pow(alpha_, std::min(usage_[q], 60));
  }

  std::vector<int> route(int v, bool exclusive) {
    std::vector<int> placed;
    for (const int u : logical_.neighbors(v))
      if (!chains_[u].empty()) placed.push_back(u);

    if (placed.empty()) {
      // Nothing to connect to: a random least-used qubit, as close to the
      // middle of the grid as possible so the chains can spread both ways.
      const double mid = 0.5 * (physical_.grid_size() - 1);
      auto ring = [&](int q) {
        const auto c = physical_.coord(q);
        return std::max(std::abs(c.row - mid), std::abs(c.col - mid));
      };
      std::pair<int, double> best{std::numeric_limits<int>::max(), kInf};
      std::vector<int> pool;
      for (const int q : active_) {
        const std::pair<int, double> key{usage_[q], ring(q)};
        if (key < best) {
          best = key;
          pool.clear();
        }
        if (key == best) pool.push_back(q);
      }
      const int best_usage = best.first;
      if (pool.empty() || (exclusive && best_usage > 0)) return {};
      return {pool[uniform_below(rng_, pool.size())]};
    }

    const int nq = physical_.qubit_count();
    // Fresh tie-breaking noise per call, well below one qubit of path length.
    for (const int q : active_) jitter_[q] = 1e-3 * uniform01(rng_);
    parents_.resize(placed.size());
    std::fill(total_.begin(), total_.end(), 0.0);

    for (std::size_t slot = 0; slot < placed.size(); ++slot) {
      const int u = placed[slot];
      auto& parent = parents_[slot];
      parent.assign(nq, -1);
      std::fill(dist_.begin(), dist_.end(), kInf);
      using Item = std::pair<double, int>;
      std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
      for (const int q : chains_[u]) {
        mark_[q] = static_cast<int>(slot) + stamp_;
        dist_[q] = 0.0;
        heap.emplace(0.0, q);
      }
      while (!heap.empty()) {
        const auto [d, q] = heap.top();
        heap.pop();
        ++work_;
        if (d > dist_[q]) continue;
        for (const int h : physical_.neighbors(q)) {
          ++work_;
          const double c = cost(h, exclusive);
          if (c == kInf) continue;
          const double nd = d + c;
          if (nd < dist_[h]) {
            dist_[h] = nd;
            parent[h] = q;
            heap.emplace(nd, h);
          }
        }
      }
      // The root's own weight is paid once per neighbour chain, also when it
      // sits inside that chain, so shared roots are priced per connection.
      for (const int q : active_) {
        if (mark_[q] == static_cast<int>(slot) + stamp_) total_[q] += cost(q, exclusive);
        else total_[q] += dist_[q];
      }
    }

    double best = kInf;
    std::vector<int> roots;
    for (const int q : active_) {
      if (cost(q, exclusive) == kInf || total_[q] == kInf) continue;
      const double t = total_[q];
      if (t < best) {
        best = t;
        roots.clear();
      }
      if (t == best) roots.push_back(q);
    }
    if (roots.empty()) {
      stamp_ += static_cast<int>(placed.size());
      return {};
    }
    const int root = roots[uniform_below(rng_, roots.size())];

    // Paths from the root to each neighbour chain, root excluded.
    std::vector<std::vector<int>> paths(placed.size());
    std::map<int, int> seen;
    for (std::size_t slot = 0; slot < placed.size(); ++slot) {
      const auto& target = chains_[placed[slot]];
      if (std::binary_search(target.begin(), target.end(), root)) continue;
      for (int cur = parents_[slot][root];
           cur >= 0 && !std::binary_search(target.begin(), target.end(), cur);
           cur = parents_[slot][cur]) {
        paths[slot].push_back(cur);
        ++seen[cur];
      }
    }
    stamp_ += static_cast<int>(placed.size());

    // While congested, the far half of each path joins the neighbour's chain,
    // so crowded chains gain ports instead of staying boxed in.
    std::vector<int> chain{root};
    for (std::size_t slot = 0; slot < placed.size(); ++slot) {
      auto& path = paths[slot];
      std::size_t keep = path.size();
      if (!exclusive) {
        auto& target = chains_[placed[slot]];
        const std::size_t min_keep = path.size() / 2;
        while (keep > min_keep && seen[path[keep - 1]] == 1) {
          const int q = path[--keep];
          target.insert(std::lower_bound(target.begin(), target.end(), q), q);
          ++usage_[q];
        }
      }
      chain.insert(chain.end(), path.begin(), path.begin() + static_cast<std::ptrdiff_t>(keep));
    }
    std::sort(chain.begin(), chain.end());
    chain.erase(std::unique(chain.begin(), chain.end()), chain.end());
    return chain;
  }

  const WeightedGraph& logical_;
  const ChimeraGraph& physical_;
  Rng& rng_;
  double alpha_;
  std::vector<int> usage_;
  std::vector<std::vector<int>> chains_;
  std::vector<int> active_;
  std::vector<double> total_;
  std::vector<double> dist_;
  std::vector<int> mark_;
  std::vector<double> history_;  // rounds each qubit spent shared
  std::vector<double> jitter_;
  int stamp_ = 0;
  std::vector<std::vector<int>> parents_;
  std::uint64_t work_ = 0;
};

struct AttemptOutcome {
  std::optional<std::vector<std::vector<int>>> chains;
  std::uint64_t work = 0;
};

AttemptOutcome run_attempt(const WeightedGraph& logical, const ChimeraGraph& physical,
                           std::uint64_t seed, double alpha, const EmbeddingOptions& opt) {
  Rng rng(seed);
  ChainRouter router(logical, physical, rng, alpha);
  auto order = router.placement_order();
  for (const int v : order) router.place(v, false);

  long best_overlap = router.overlap();
  int stale = 0;
  for (int round = 0; round < opt.max_rounds && best_overlap > 0; ++round) {
    router.age_shared_qubits();
    router.shuffled(order);
    for (const int v : order) router.place(v, false);
    const long ov = router.overlap();
    if (ov < best_overlap) {
      best_overlap = ov;
      stale = 0;
    } else if (++stale >= opt.patience) {
      break;
    }
  }
  if (best_overlap > 0 || router.overlap() > 0) return {std::nullopt, router.work()};

  // Shorten chains while keeping them disjoint; stop once a pass gains nothing.
  for (const int v : order) router.trim(v);
  int stalled = 0;
  for (int round = 0; round < opt.refine_rounds && stalled < 2; ++round) {
    const int before = router.total_qubits();
    router.shuffled(order);
    for (const int v : order) {
      router.place(v, true);
      router.trim(v);
    }
    stalled = router.total_qubits() < before ? 0 : stalled + 1;
  }
  return {router.chains(), router.work()};
}

}  // namespace

EmbeddingResult find_embedding(std::shared_ptr<const WeightedGraph> logical,
                               std::shared_ptr<const ChimeraGraph> physical,
                               std::uint64_t seed, const EmbeddingOptions& options) {
  if (!logical || !physical) throw std::invalid_argument("find_embedding needs both graphs");
  if (physical->active_count() == 0) throw std::invalid_argument("physical graph has no active qubits");

  const Stopwatch watch;
  EmbeddingResult result;
  if (logical->vertex_count() > physical->active_count()) {
    result.stats.t_embed_ms = watch.elapsed_ms();
    result.failure = "logical graph has " + std::to_string(logical->vertex_count()) +
                     " vertices but only " + std::to_string(physical->active_count()) +
                     " qubits are active";
    return result;
  }
  for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
    result.stats.attempts = attempt + 1;
    // Steep congestion cost suits cliques, a soft one dense bipartite graphs.
    const double alpha = attempt % 2 == 0 ? 4.0 * physical->grid_size() + 4.0 : 4.0;
    auto outcome = run_attempt(*logical, *physical,
                               derive_seed(seed, static_cast<std::uint64_t>(attempt)), alpha,
                               options);
    result.stats.work_units += outcome.work;
    if (!outcome.chains) continue;
    Embedding e(logical, physical, std::move(*outcome.chains));
    if (!verify_embedding(e).empty()) continue;
    result.stats.qubits_used = static_cast<int>(e.used_qubits().size());
    result.stats.max_chain_length = e.max_chain_length();
    result.stats.mean_chain_length = e.mean_chain_length();
    result.embedding = std::move(e);
    break;
  }
  result.stats.t_embed_ms = watch.elapsed_ms();
  if (!result.embedding) {
    result.failure = "no overlap-free embedding after " + std::to_string(options.max_attempts) +
                     " attempts";
  }
  return result;
}

EmbeddingResult find_embedding(const WeightedGraph& logical, const ChimeraGraph& physical,
                               std::uint64_t seed, int max_attempts) {
  EmbeddingOptions options;
  options.max_attempts = max_attempts;
  return find_embedding(std::make_shared<const WeightedGraph>(logical),
                        std::make_shared<const ChimeraGraph>(physical), seed, options);
}

std::string EmbeddingViolation::describe() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::EmptyChain: out << "chain of vertex " << u << " is empty"; break;
    case Kind::InactiveQubit: out << "chain of vertex " << u << " uses unusable qubit " << qubit; break;
    case Kind::SharedQubit:
      out << "(i) chains of vertices " << u << " and " << v << " share qubit " << qubit;
      break;
    case Kind::DisconnectedChain: out << "(ii) chain of vertex " << u << " is not connected"; break;
    case Kind::MissingCoupler:
      out << "(iii) no physical edge joins the chains of " << u << " and " << v;
      break;
  }
  return out.str();
}

std::vector<EmbeddingViolation> verify_embedding(const Embedding& e) {
  using Kind = EmbeddingViolation::Kind;
  const auto& phys = e.physical();
  std::vector<EmbeddingViolation> out;
  std::vector<int> owner(phys.qubit_count(), -1);

  for (int v = 0; v < e.chain_count(); ++v) {
    const auto& chain = e.chain(v);
    if (chain.empty()) {
      out.push_back({Kind::EmptyChain, v, -1, -1});
      continue;
    }
    bool usable = true;
    for (const int q : chain) {
      if (q < 0 || q >= phys.qubit_count() || !phys.is_active(q)) {
        out.push_back({Kind::InactiveQubit, v, -1, q});
        usable = false;
        continue;
      }
      if (owner[q] >= 0 && owner[q] != v) {
        out.push_back({Kind::SharedQubit, owner[q], v, q});
      } else {
        owner[q] = v;
      }
    }
    if (!usable) continue;

    // Connectivity of the chain's induced subgraph by BFS.
    std::vector<int> frontier{chain.front()};
    std::vector<int> seen{chain.front()};
    while (!frontier.empty()) {
      const int q = frontier.back();
      frontier.pop_back();
      for (const int h : phys.neighbors(q)) {
        if (!std::binary_search(chain.begin(), chain.end(), h)) continue;
        if (std::find(seen.begin(), seen.end(), h) != seen.end()) continue;
        seen.push_back(h);
        frontier.push_back(h);
      }
    }
    if (seen.size() != chain.size()) out.push_back({Kind::DisconnectedChain, v, -1, -1});
  }

  for (const auto& [u, v] : e.logical().edges()) {
    bool joined = false;
    for (const int a : e.chain(u)) {
      if (a < 0 || a >= phys.qubit_count()) continue;
      for (const int b : phys.neighbors(a)) {
        if (std::binary_search(e.chain(v).begin(), e.chain(v).end(), b)) {
          joined = true;
          break;
        }
      }
      if (joined) break;
    }
    if (!joined) out.push_back({Kind::MissingCoupler, u, v, -1});
  }
  return out;
}

double default_chain_strength(const QuboMatrix& logical_q) {
  double s = 0.0;
  double w = 0.0;
  for (const auto& t : logical_q.terms()) {
    if (t.i == t.j) w = std::max(w, std::abs(t.value));
    else s = std::max(s, std::abs(t.value));
  }
  return 2.0 * (s + w);
}

EmbeddedQubo embed_qubo(const QuboMatrix& logical_q, const Embedding& e,
                        const EmbedQuboOptions& options) {
  if (logical_q.dimension() != e.chain_count()) {
    throw std::invalid_argument("logical QUBO dimension does not match the embedding");
  }
  if (const auto violations = verify_embedding(e); !violations.empty()) {
    throw std::invalid_argument("embedding is invalid: " + violations.front().describe());
  }
  const double strength = options.chain_strength.value_or(default_chain_strength(logical_q));
  const auto& phys = e.physical();

  std::vector<QuboTerm> terms;
  auto idx = [&](int q) { return e.compact_index(q); };
  auto add = [&](int a, int b, double value) {
    int i = idx(a);
    int j = idx(b);
    if (i > j) std::swap(i, j);
    terms.push_back({i, j, value});
  };

  for (const auto& t : logical_q.terms()) {
    if (t.i == t.j) {
      const auto& chain = e.chain(t.i);
      const double share = t.value / static_cast<double>(chain.size());
      for (const int q : chain) add(q, q, share);
      continue;
    }
    std::vector<Edge> between;
    for (const int a : e.chain(t.i)) {
      for (const int b : phys.neighbors(a)) {
        if (std::binary_search(e.chain(t.j).begin(), e.chain(t.j).end(), b)) {
          between.emplace_back(std::min(a, b), std::max(a, b));
        }
      }
    }
    if (between.empty()) {
      throw std::invalid_argument("logical coupling (" + std::to_string(t.i) + "," +
                                  std::to_string(t.j) + ") has no physical coupler");
    }
    std::sort(between.begin(), between.end());
    if (options.placement == CouplerPlacement::Representative) {
      add(between.front().first, between.front().second, t.value);
    } else {
      const double share = t.value / static_cast<double>(between.size());
      for (const auto& [a, b] : between) add(a, b, share);
    }
  }

  for (const auto& chain : e.chains()) {
    for (const int a : chain) {
      for (const int b : phys.neighbors(a)) {
        if (b <= a || !std::binary_search(chain.begin(), chain.end(), b)) continue;
        add(a, a, strength);
        add(b, b, strength);
        add(a, b, -2.0 * strength);
      }
    }
  }
  return {QuboMatrix(static_cast<int>(e.used_qubits().size()), std::move(terms), QuboKind::Embedded),
          strength};
}

UnembeddedSample unembed_sample(std::span<const std::uint8_t> x_phys, const Embedding& e,
                                const WeightedGraph& graph) {
  if (x_phys.size() != e.used_qubits().size()) {
    throw std::invalid_argument("physical sample length does not match the embedding");
  }
  if (graph.vertex_count() != e.chain_count()) {
    throw std::invalid_argument("graph does not match the embedding");
  }
  UnembeddedSample out;
  out.logical.assign(e.chain_count(), 0);
  for (int v = 0; v < e.chain_count(); ++v) {
    const auto& chain = e.chain(v);
    std::size_t ones = 0;
    for (const int q : chain) ones += x_phys[e.compact_index(q)] ? 1U : 0U;
    out.logical[v] = 2 * ones > chain.size() ? 1 : 0;
    if (ones != 0 && ones != chain.size()) ++out.broken_chains;
  }
  for (const auto& [u, v] : graph.edges()) {
    if (!out.logical[u] || !out.logical[v]) continue;
    const bool drop_u = graph.weight(u) < graph.weight(v);
    out.logical[drop_u ? u : v] = 0;
  }
  return out;
}

std::string render_chains(const Embedding& e) {
  std::ostringstream out;
  for (int v = 0; v < e.chain_count(); ++v) {
    out << "chain " << v << ':';
    for (const int q : e.chain(v)) out << ' ' << q;
    out << '\n';
  }
  return out.str();
}

std::vector<std::vector<int>> parse_chains(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  std::map<int, std::vector<int>> by_vertex;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::string word;
    fields >> word;
    if (word.empty() || word == "stats" || word == "embedding") continue;
    if (word != "chain") throw ParseError(line_no, "expected 'chain <index>: <qubits>'");
    std::string head;
    fields >> head;
    if (head.empty() || head.back() != ':') throw ParseError(line_no, "missing ':' after chain index");
    head.pop_back();
    const auto v = parse_int<int>(head);
    if (!v || *v < 0) throw ParseError(line_no, "bad chain index");
    if (by_vertex.count(*v)) throw ParseError(line_no, "duplicate chain " + head);
    auto& chain = by_vertex[*v];
    std::string tok;
    while (fields >> tok) {
      const auto q = parse_int<int>(tok);
      if (!q || *q < 0) throw ParseError(line_no, "bad qubit id '" + tok + "'");
      chain.push_back(*q);
    }
  }
  std::vector<std::vector<int>> chains(by_vertex.size());
  for (auto& [v, chain] : by_vertex) {
    if (v >= static_cast<int>(chains.size())) {
      throw ParseError(line_no, "chain indices must be 0..n-1 without gaps");
    }
    chains[v] = std::move(chain);
  }
  return chains;
}

EmbeddingCache::EmbeddingCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

namespace {
std::string hex(std::uint64_t value) {
  std::ostringstream out;
  out << std::hex;
  out.width(16);
  out.fill('0');
  out << value;
  return out.str();
}
}  // namespace

std::filesystem::path EmbeddingCache::entry_path(const WeightedGraph& logical,
                                                 const ChimeraGraph& physical,
                                                 std::uint64_t seed) const {
  return dir_ / (hex(structure_hash(logical)) + "-" + hex(physical.fingerprint()) + "-" +
                 std::to_string(seed) + ".emb");
}

std::optional<EmbeddingResult> EmbeddingCache::load(
    std::shared_ptr<const WeightedGraph> logical, std::shared_ptr<const ChimeraGraph> physical,
    std::uint64_t seed) const {
  const auto path = entry_path(*logical, *physical, seed);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();

  EmbeddingResult result;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream fields(line);
    std::string word;
    fields >> word;
    if (word != "stats") continue;
    std::string key, value;
    while (fields >> key >> value) {
      if (key == "t_embed_ms") result.stats.t_embed_ms = parse_double(value).value_or(0.0);
      else if (key == "attempts") result.stats.attempts = parse_int<int>(value).value_or(0);
      else if (key == "work") result.stats.work_units = parse_int<std::uint64_t>(value).value_or(0);
    }
  }
  Embedding e(logical, physical, parse_chains(text));
  if (!verify_embedding(e).empty()) return std::nullopt;
  result.stats.qubits_used = static_cast<int>(e.used_qubits().size());
  result.stats.max_chain_length = e.max_chain_length();
  result.stats.mean_chain_length = e.mean_chain_length();
  result.embedding = std::move(e);
  return result;
}

void EmbeddingCache::store(const EmbeddingResult& result, std::uint64_t seed) const {
  if (!result.embedding) throw std::invalid_argument("cannot cache a failed embedding");
  const auto& e = *result.embedding;
  std::filesystem::create_directories(dir_);
  std::ofstream out(entry_path(e.logical(), e.physical(), seed));
  out << "embedding graph " << hex(structure_hash(e.logical())) << " physical "
      << hex(e.physical().fingerprint()) << " seed " << seed << '\n';
  out << "stats t_embed_ms " << format_double(result.stats.t_embed_ms) << " attempts "
      << result.stats.attempts << " work " << result.stats.work_units << '\n';
  out << render_chains(e);
  if (!out) throw std::runtime_error("failed to write embedding cache entry");
}

}  // namespace hybrid
