// Copyright 2026 The mwr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Seeded instance generators. All randomness comes from std::mt19937_64,
// whose output sequence is fixed by the standard, and bounded draws use
// rejection sampling on its raw output, so a seed yields the same graph on
// every platform.

#pragma once

#include <cstdint>
#include <optional>
#include <queue>
#include <random>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "mwr/errors.hpp"
#include "mwr/graph.hpp"
#include "mwr/max_spanning.hpp"

namespace mwr {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
    while (true) {
      const std::uint64_t x = engine_();
      if (x >= threshold) return x % bound;
    }
  }

  // Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

namespace detail {

// Random labeled tree on k vertices as (a, b) pairs over labels 0..k-1.
inline std::vector<std::pair<Vertex, Vertex>> random_tree(Vertex k, Rng& rng) {
  std::vector<std::pair<Vertex, Vertex>> out;
  if (k < 2) return out;
  if (k == 2) return {{0, 1}};
  std::vector<Vertex> code(static_cast<std::size_t>(k - 2));
  for (auto& c : code) c = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(k)));
  std::vector<int> degree(static_cast<std::size_t>(k), 1);
  for (Vertex c : code) ++degree[static_cast<std::size_t>(c)];
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < k; ++v) {
    if (degree[static_cast<std::size_t>(v)] == 1) leaves.push(v);
  }
  for (Vertex c : code) {
    const Vertex leaf = leaves.top();
    leaves.pop();
    out.emplace_back(leaf, c);
    if (--degree[static_cast<std::size_t>(c)] == 1) leaves.push(c);
  }
  const Vertex a = leaves.top();
  leaves.pop();
  out.emplace_back(a, leaves.top());
  return out;
}

}  // namespace detail

inline Graph gen_complete(Vertex kappa) {
  if (kappa < 1) throw Error(ErrorCode::kInvalidSpec, "complete graph needs kappa >= 1");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < kappa; ++u) {
    for (Vertex v = u + 1; v < kappa; ++v) edges.emplace_back(u, v);
  }
  return Graph::build(kappa, edges);
}

inline Graph gen_cycle(Vertex n) {
  if (n < 3) throw Error(ErrorCode::kInvalidSpec, "cycle needs n >= 3");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph::build(n, edges);
}

inline Graph gen_path(Vertex n) {
  if (n < 1) throw Error(ErrorCode::kInvalidSpec, "path needs n >= 1");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::build(n, edges);
}

struct GapInstance {
  Graph graph;
  WeightFn weights;  // 1 on clique edges, 0 on tree edges
  Vertex kappa = 0;
  Vertex t = 0;
};

// K_kappa on vertices 0..kappa-1 with a random tree on t + 1 vertices hanging
// off clique vertex 0 (tree vertices kappa..kappa+t-1).
inline GapInstance gen_gap(Vertex kappa, Vertex t, std::uint64_t seed) {
  if (kappa < 2 || t < 1) throw Error(ErrorCode::kInvalidSpec, "gap graph needs kappa >= 2 and t >= 1");
  Rng rng(seed);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < kappa; ++u) {
    for (Vertex v = u + 1; v < kappa; ++v) edges.emplace_back(u, v);
  }
  auto global = [kappa](Vertex local) { return local == 0 ? Vertex{0} : static_cast<Vertex>(kappa + local - 1); };
  for (const auto& [a, b] : detail::random_tree(t + 1, rng)) edges.emplace_back(global(a), global(b));
  GapInstance out;
  out.graph = Graph::build(kappa + t, edges);
  out.kappa = kappa;
  out.t = t;
  std::vector<EdgeIndex> support;
  for (EdgeIndex e = 0; e < out.graph.num_edges(); ++e) {
    if (out.graph.edge(e).v < kappa) support.push_back(e);
  }
  out.weights = WeightFn::zero_one(out.graph.num_edges(), std::move(support));
  return out;
}

// Random spanning tree plus m - (n - 1) distinct extra edges.
inline Graph gen_random_connected(Vertex n, std::int64_t m, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorCode::kInvalidSpec, "n must be >= 1");
  const std::int64_t max_edges = static_cast<std::int64_t>(n) * (n - 1) / 2;
  if (m < n - 1 || m > max_edges) {
    throw Error(ErrorCode::kInvalidSpec, "m must lie in [n-1, n(n-1)/2], got " + std::to_string(m));
  }
  Rng rng(seed);
  auto key = [n](Vertex a, Vertex b) {
    if (a > b) std::swap(a, b);
    return static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(b);
  };
  std::vector<std::pair<Vertex, Vertex>> edges = detail::random_tree(n, rng);
  std::unordered_set<std::uint64_t> present;
  for (const auto& [a, b] : edges) present.insert(key(a, b));
  const std::int64_t extra = m - (n - 1);
  if (extra * 2 <= max_edges) {
    while (static_cast<std::int64_t>(edges.size()) < m) {
      const auto a = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
      const auto b = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
      if (a == b || !present.insert(key(a, b)).second) continue;
      edges.emplace_back(a, b);
    }
  } else {
    std::vector<std::pair<Vertex, Vertex>> pool;
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = a + 1; b < n; ++b) {
        if (!present.count(key(a, b))) pool.emplace_back(a, b);
      }
    }
    for (std::int64_t i = 0; i < extra; ++i) {
      const auto j = static_cast<std::size_t>(i) + static_cast<std::size_t>(rng.below(pool.size() - static_cast<std::size_t>(i)));
      std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
      edges.push_back(pool[static_cast<std::size_t>(i)]);
    }
  }
  return Graph::build(n, edges);
}

// Chordal by construction: vertices arrive in index order and each new vertex
// is joined to a nonempty subset of an existing clique, of size < kmax. The
// reverse of the arrival order is a perfect elimination order and the clique
// number is at most kmax.
inline Graph gen_random_chordal(Vertex n, Vertex kmax, std::uint64_t seed) {
  if (n < 1 || kmax < 2 || kmax > n) {
    throw Error(ErrorCode::kInvalidSpec, "random chordal graph needs n >= 1 and 2 <= kmax <= n");
  }
  Rng rng(seed);
  const auto first = static_cast<Vertex>(rng.between(1, kmax));
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<std::vector<Vertex>> cliques;
  std::vector<Vertex> base;
  for (Vertex v = 0; v < first; ++v) {
    for (Vertex u : base) edges.emplace_back(u, v);
    base.push_back(v);
  }
  cliques.push_back(base);
  for (Vertex v = first; v < n; ++v) {
    const auto& host = cliques[static_cast<std::size_t>(rng.below(cliques.size()))];
    const auto limit = std::min<std::int64_t>(static_cast<std::int64_t>(host.size()), kmax - 1);
    const auto size = static_cast<std::size_t>(rng.between(1, limit));
    std::vector<Vertex> pick(host);
    for (std::size_t i = 0; i < size; ++i) {
      const auto j = i + static_cast<std::size_t>(rng.below(pick.size() - i));
      std::swap(pick[i], pick[j]);
    }
    pick.resize(size);
    std::sort(pick.begin(), pick.end());
    for (Vertex u : pick) edges.emplace_back(u, v);
    pick.push_back(v);
    cliques.push_back(std::move(pick));
  }
  return Graph::build(n, edges);
}

enum class Family { kComplete, kGap, kRandomConnected, kRandomChordal };

inline std::optional<Family> parse_family(std::string_view name) {
  if (name == "complete") return Family::kComplete;
  if (name == "gap") return Family::kGap;
  if (name == "random-connected") return Family::kRandomConnected;
  if (name == "random-chordal") return Family::kRandomChordal;
  return std::nullopt;
}

struct GenSpec {
  Family family = Family::kComplete;
  Vertex kappa = 3;
  Vertex t = 1;
  Vertex n = 1;
  std::int64_t m = 0;
  Vertex kmax = 2;
  std::uint64_t seed = 0;
};

struct Generated {
  Graph graph;
  std::optional<WeightFn> weights;
};

inline Generated generate(const GenSpec& spec) {
  switch (spec.family) {
    case Family::kComplete: return {gen_complete(spec.kappa), std::nullopt};
    case Family::kGap: {
      GapInstance gap = gen_gap(spec.kappa, spec.t, spec.seed);
      return {std::move(gap.graph), std::move(gap.weights)};
    }
    case Family::kRandomConnected: return {gen_random_connected(spec.n, spec.m, spec.seed), std::nullopt};
    case Family::kRandomChordal: return {gen_random_chordal(spec.n, spec.kmax, spec.seed), std::nullopt};
  }
  throw Error(ErrorCode::kInvalidSpec, "unknown family");
}

}  // namespace mwr
