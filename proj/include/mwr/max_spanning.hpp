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
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mwr/errors.hpp"
#include "mwr/graph.hpp"
#include "mwr/rational.hpp"

namespace mwr {

// Disjoint-set forest with path halving and union by size.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Returns false if a and b were already joined.
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

// Edge-indexed nonnegative weights, aligned with Graph::edges(). The 0-1 kind
// additionally carries its support {e : w(e) = 1} as a sorted index list.
class WeightFn {
 public:
  enum class Kind { kGeneral, kZeroOne };

  WeightFn() = default;

  static WeightFn general(std::vector<Rational> values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (values[i] < 0) {
        throw Error(ErrorCode::kNegativeWeight,
                    "edge " + std::to_string(i) + " has weight " + to_string(values[i]));
      }
    }
    WeightFn w;
    w.values_ = std::move(values);
    w.kind_ = Kind::kGeneral;
    return w;
  }

  // Indicator weighting of support over num_edges edges.
  static WeightFn zero_one(EdgeIndex num_edges, std::vector<EdgeIndex> support) {
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    if (!support.empty() && (support.front() < 0 || support.back() >= num_edges)) {
      throw Error(ErrorCode::kOutOfRange, "support edge index outside [0, " +
                                              std::to_string(num_edges) + ")");
    }
    WeightFn w;
    w.kind_ = Kind::kZeroOne;
    w.values_.assign(static_cast<std::size_t>(num_edges), Rational(0));
    for (EdgeIndex e : support) w.values_[static_cast<std::size_t>(e)] = 1;
    w.support_ = std::move(support);
    return w;
  }

  static WeightFn all_ones(EdgeIndex num_edges) {
    std::vector<EdgeIndex> all(static_cast<std::size_t>(num_edges));
    std::iota(all.begin(), all.end(), EdgeIndex{0});
    return zero_one(num_edges, std::move(all));
  }

  Kind kind() const { return kind_; }
  std::size_t size() const { return values_.size(); }
  std::span<const Rational> values() const { return values_; }
  const Rational& operator[](EdgeIndex e) const { return values_[static_cast<std::size_t>(e)]; }
  // Only meaningful for the 0-1 kind.
  std::span<const EdgeIndex> support() const { return support_; }

  Rational total() const {
    Rational sum = 0;
    for (const Rational& v : values_) sum += v;
    return sum;
  }

  WeightFn scaled(const Rational& c) const {
    std::vector<Rational> out(values_);
    for (Rational& v : out) v *= c;
    return general(std::move(out));
  }

 private:
  std::vector<Rational> values_;
  std::vector<EdgeIndex> support_;
  Kind kind_ = Kind::kGeneral;
};

struct SpanningResult {
  std::vector<EdgeIndex> tree_edges;  // in Kruskal selection order
  Rational total_weight;
  bool is_spanning_tree = false;

  bool contains(EdgeIndex e) const {
    return std::find(tree_edges.begin(), tree_edges.end(), e) != tree_edges.end();
  }
};

namespace detail {

inline void check_shape(const Graph& g, const WeightFn& w) {
  if (w.size() != static_cast<std::size_t>(g.num_edges())) {
    throw Error(ErrorCode::kShapeMismatch,
                "weight count " + std::to_string(w.size()) + " != edge count " +
                    std::to_string(g.num_edges()));
  }
}

inline void check_nonnegative(const WeightFn& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w.values()[i] < 0) {
      throw Error(ErrorCode::kNegativeWeight, "edge " + std::to_string(i));
    }
  }
}

inline SpanningResult kruskal(const Graph& g, std::span<const EdgeIndex> order,
                              const WeightFn& w) {
  UnionFind uf(static_cast<std::size_t>(g.num_vertices()));
  SpanningResult out;
  out.total_weight = 0;
  std::size_t joined = 0;
  const auto target = g.num_vertices() > 0 ? static_cast<std::size_t>(g.num_vertices() - 1) : 0;
  for (EdgeIndex e : order) {
    if (joined == target) break;
    const Edge& ed = g.edge(e);
    if (uf.unite(static_cast<std::size_t>(ed.u), static_cast<std::size_t>(ed.v))) {
      out.tree_edges.push_back(e);
      out.total_weight += w[e];
      ++joined;
    }
  }
  out.is_spanning_tree = g.num_vertices() >= 1 && joined == target;
  return out;
}

}  // namespace detail

// Maximum-weight spanning forest by Kruskal. Edges are scanned by weight
// descending, ties by ascending edge index, so the result is deterministic.
inline SpanningResult max_spanning_forest(const Graph& g, const WeightFn& w) {
  detail::check_shape(g, w);
  std::vector<EdgeIndex> order;
  order.reserve(static_cast<std::size_t>(g.num_edges()));
  if (w.kind() == WeightFn::Kind::kZeroOne) {
    std::vector<char> in(static_cast<std::size_t>(g.num_edges()), 0);
    for (EdgeIndex e : w.support()) {
      order.push_back(e);
      in[static_cast<std::size_t>(e)] = 1;
    }
    for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
      if (!in[static_cast<std::size_t>(e)]) order.push_back(e);
    }
  } else {
    detail::check_nonnegative(w);
    for (EdgeIndex e = 0; e < g.num_edges(); ++e) order.push_back(e);
    std::stable_sort(order.begin(), order.end(),
                     [&](EdgeIndex a, EdgeIndex b) { return w[a] > w[b]; });
  }
  return detail::kruskal(g, order, w);
}

// Weight of the maximum spanning tree over the total weight.
inline Rational weighting_ratio(const Graph& g, const WeightFn& w) {
  detail::check_shape(g, w);
  if (!is_connected(g)) throw Error(ErrorCode::kNotConnected, "weighting ratio needs a connected graph");
  const Rational total = w.total();
  if (total == 0) throw Error(ErrorCode::kZeroTotalWeight, "total edge weight is zero");
  return max_spanning_forest(g, w).total_weight / total;
}

// (n - 1) / e(G): the weighting ratio under all-ones weights.
inline Rational uniform_ratio(const Graph& g) {
  if (!is_connected(g)) throw Error(ErrorCode::kNotConnected, "uniform ratio needs a connected graph");
  if (g.num_edges() == 0) throw Error(ErrorCode::kZeroTotalWeight, "graph has no edges");
  return Rational(g.num_vertices() - 1, g.num_edges());
}

struct MarginalGain {
  int gain = 0;  // always 0 or 1
  SpanningResult with_edge;
};

// Change in maximum-forest weight when edge e joins a 0-1 support.
inline MarginalGain marginal_gain(const Graph& g, std::span<const EdgeIndex> base,
                                  EdgeIndex e) {
  if (e < 0 || e >= g.num_edges()) {
    throw Error(ErrorCode::kOutOfRange, "edge index " + std::to_string(e));
  }
  if (std::find(base.begin(), base.end(), e) != base.end()) {
    throw Error(ErrorCode::kAlreadyInSupport, "edge " + std::to_string(e) + " is already in the support");
  }
  const auto before = max_spanning_forest(
      g, WeightFn::zero_one(g.num_edges(), std::vector<EdgeIndex>(base.begin(), base.end())));
  // e is scanned after the old support, so the new forest extends the old one.
  const WeightFn w2 = WeightFn::zero_one(g.num_edges(), [&] {
    std::vector<EdgeIndex> grown(base.begin(), base.end());
    grown.push_back(e);
    return grown;
  }());
  std::vector<EdgeIndex> order(w2.support().begin(), w2.support().end());
  std::erase(order, e);
  order.push_back(e);
  for (EdgeIndex f = 0; f < g.num_edges(); ++f) {
    if (w2[f] == 0) order.push_back(f);
  }
  MarginalGain out;
  out.with_edge = detail::kruskal(g, order, w2);
  const Rational diff = out.with_edge.total_weight - before.total_weight;
  out.gain = static_cast<int>(numerator_of(diff));
  return out;
}

}  // namespace mwr
