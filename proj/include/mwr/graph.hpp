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

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mwr/errors.hpp"

namespace mwr {

using Vertex = std::int32_t;
using EdgeIndex = std::int32_t;

struct Edge {
  Vertex u;
  Vertex v;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Sorted list of distinct vertex ids.
class VertexSet {
 public:
  VertexSet() = default;

  // Sorts and removes duplicates.
  explicit VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  static VertexSet range(Vertex n) {
    std::vector<Vertex> all(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) all[static_cast<std::size_t>(v)] = v;
    return VertexSet(std::move(all));
  }

  std::span<const Vertex> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Vertex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
  }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  // Throws OutOfRange unless every member lies in [0, n).
  void check_within(Vertex n) const {
    if (!members_.empty() && (members_.front() < 0 || members_.back() >= n)) {
      throw Error(ErrorCode::kOutOfRange, "vertex set member outside [0, " +
                                              std::to_string(n) + ")");
    }
  }

  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

// Undirected simple graph on vertices 0..n-1 in canonical form: the edge list
// holds (u, v) with u < v, strictly sorted. Edge indices refer to positions in
// that list and are stable for the lifetime of the graph.
class Graph {
 public:
  Graph() = default;

  // Duplicate edges collapse; loops are rejected.
  static Graph build(Vertex n, std::span<const std::pair<Vertex, Vertex>> raw_edges) {
    if (n < 0) throw Error(ErrorCode::kOutOfRange, "negative vertex count");
    std::vector<Edge> edges;
    edges.reserve(raw_edges.size());
    for (const auto& [a, b] : raw_edges) {
      if (a < 0 || b < 0 || a >= n || b >= n) {
        throw Error(ErrorCode::kOutOfRange,
                    "edge (" + std::to_string(a) + ", " + std::to_string(b) +
                        ") has an endpoint outside [0, " + std::to_string(n) + ")");
      }
      if (a == b) {
        throw Error(ErrorCode::kInvalidEdge, "loop at vertex " + std::to_string(a));
      }
      edges.push_back(a < b ? Edge{a, b} : Edge{b, a});
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph(n, std::move(edges));
  }

  static Graph build(Vertex n, std::initializer_list<std::pair<Vertex, Vertex>> raw_edges) {
    return build(n, std::span<const std::pair<Vertex, Vertex>>(raw_edges.begin(),
                                                                raw_edges.size()));
  }

  Vertex num_vertices() const { return n_; }
  EdgeIndex num_edges() const { return static_cast<EdgeIndex>(edges_.size()); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeIndex e) const { return edges_[static_cast<std::size_t>(e)]; }

  // Sorted neighbor list of v.
  std::span<const Vertex> neighbors(Vertex v) const {
    const auto b = offsets_[static_cast<std::size_t>(v)];
    const auto e = offsets_[static_cast<std::size_t>(v) + 1];
    return std::span<const Vertex>(neighbors_).subspan(b, e - b);
  }
  // Edge indices aligned with neighbors(v).
  std::span<const EdgeIndex> incident_edges(Vertex v) const {
    const auto b = offsets_[static_cast<std::size_t>(v)];
    const auto e = offsets_[static_cast<std::size_t>(v) + 1];
    return std::span<const EdgeIndex>(incident_).subspan(b, e - b);
  }
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  bool adjacent(Vertex a, Vertex b) const {
    const auto nb = neighbors(a);
    return std::binary_search(nb.begin(), nb.end(), b);
  }

  std::optional<EdgeIndex> edge_index(Vertex a, Vertex b) const {
    if (a > b) std::swap(a, b);
    const Edge key{a, b};
    const auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key) return std::nullopt;
    return static_cast<EdgeIndex>(it - edges_.begin());
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  Graph(Vertex n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (const Edge& e : edges_) {
      ++offsets_[static_cast<std::size_t>(e.u) + 1];
      ++offsets_[static_cast<std::size_t>(e.v) + 1];
    }
    for (std::size_t i = 1; i < offsets_.size(); ++i) offsets_[i] += offsets_[i - 1];
    neighbors_.resize(2 * edges_.size());
    incident_.resize(2 * edges_.size());
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    // Edges (u, x) with u < x precede the block (x, *), and both runs are
    // ascending, so every neighbor list comes out sorted.
    for (EdgeIndex i = 0; i < num_edges(); ++i) {
      const Edge& e = edges_[static_cast<std::size_t>(i)];
      auto& fu = fill[static_cast<std::size_t>(e.u)];
      neighbors_[fu] = e.v;
      incident_[fu] = i;
      ++fu;
      auto& fv = fill[static_cast<std::size_t>(e.v)];
      neighbors_[fv] = e.u;
      incident_[fv] = i;
      ++fv;
    }
  }

  Vertex n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> neighbors_;
  std::vector<EdgeIndex> incident_;
};

inline Graph build_graph(Vertex n, std::span<const std::pair<Vertex, Vertex>> raw_edges) {
  return Graph::build(n, raw_edges);
}

// G[S] together with the maps from its local ids back to the parent graph.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;          // local vertex -> parent vertex
  std::vector<EdgeIndex> edge_to_parent;  // local edge -> parent edge
};

// Membership mask of S over the vertices of g.
inline std::vector<char> membership(const Graph& g, const VertexSet& s) {
  s.check_within(g.num_vertices());
  std::vector<char> in(static_cast<std::size_t>(g.num_vertices()), 0);
  for (Vertex v : s) in[static_cast<std::size_t>(v)] = 1;
  return in;
}

// Edge indices of G[S], ascending.
inline std::vector<EdgeIndex> edges_within(const Graph& g, const VertexSet& s) {
  const auto in = membership(g, s);
  std::vector<EdgeIndex> out;
  for (Vertex v : s) {
    const auto nb = g.neighbors(v);
    const auto inc = g.incident_edges(v);
    for (std::size_t k = 0; k < nb.size(); ++k) {
      if (nb[k] > v && in[static_cast<std::size_t>(nb[k])]) out.push_back(inc[k]);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  s.check_within(g.num_vertices());
  std::vector<Vertex> local(static_cast<std::size_t>(g.num_vertices()), -1);
  InducedSubgraph out;
  out.to_parent.assign(s.begin(), s.end());
  for (std::size_t i = 0; i < out.to_parent.size(); ++i) {
    local[static_cast<std::size_t>(out.to_parent[i])] = static_cast<Vertex>(i);
  }
  out.edge_to_parent = edges_within(g, s);
  std::vector<std::pair<Vertex, Vertex>> raw;
  raw.reserve(out.edge_to_parent.size());
  for (EdgeIndex e : out.edge_to_parent) {
    const Edge& ed = g.edge(e);
    raw.emplace_back(local[static_cast<std::size_t>(ed.u)],
                     local[static_cast<std::size_t>(ed.v)]);
  }
  // The map is monotone, so canonical order is preserved and local edge i
  // corresponds to edge_to_parent[i].
  out.graph = Graph::build(static_cast<Vertex>(s.size()), raw);
  return out;
}

// Components ordered by their smallest vertex.
inline std::vector<VertexSet> connected_components(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.num_vertices());
  std::vector<char> seen(n, 0);
  std::vector<VertexSet> parts;
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < g.num_vertices(); ++root) {
    if (seen[static_cast<std::size_t>(root)]) continue;
    std::vector<Vertex> part;
    stack.push_back(root);
    seen[static_cast<std::size_t>(root)] = 1;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      part.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
    }
    parts.emplace_back(std::move(part));
  }
  return parts;
}

inline bool is_connected(const Graph& g) {
  return g.num_vertices() >= 1 && connected_components(g).size() == 1;
}

// Whether G[S] is connected (false for the empty set).
inline bool induces_connected(const Graph& g, const VertexSet& s) {
  if (s.empty()) return false;
  const auto in = membership(g, s);
  std::vector<char> seen(in.size(), 0);
  std::vector<Vertex> stack{*s.begin()};
  seen[static_cast<std::size_t>(*s.begin())] = 1;
  std::size_t count = 0;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    ++count;
    for (Vertex w : g.neighbors(v)) {
      const auto wi = static_cast<std::size_t>(w);
      if (in[wi] && !seen[wi]) {
        seen[wi] = 1;
        stack.push_back(w);
      }
    }
  }
  return count == s.size();
}

}  // namespace mwr
