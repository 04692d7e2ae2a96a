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
#include <limits>
#include <string>
#include <vector>

#include "mwr/errors.hpp"
#include "mwr/rational.hpp"

namespace mwr {

using NodeId = std::int32_t;

template <class Cap>
struct FlowArc {
  NodeId from;
  NodeId to;
  Cap capacity;
};

// Directed network with nonnegative integer capacities. An "unbounded" arc is
// encoded by a finite capacity larger than the sum of all source-arc
// capacities.
template <class Cap = BigInt>
struct FlowNetwork {
  NodeId num_nodes = 0;
  NodeId source = 0;
  NodeId sink = 1;
  std::vector<FlowArc<Cap>> arcs;

  std::size_t add_arc(NodeId from, NodeId to, Cap capacity) {
    arcs.push_back({from, to, std::move(capacity)});
    return arcs.size() - 1;
  }
};

template <class Cap>
struct MaxFlowResult {
  Cap value{};
  // Nodes reachable from the source in the final residual network: the
  // source side of the minimum cut closest to the source.
  std::vector<NodeId> source_side;
  std::vector<Cap> arc_flow;  // aligned with FlowNetwork::arcs
};

// Residual network with Dinic blocking-flow augmentation. The state is kept
// between calls, so flows can be augmented incrementally after capacity edits.
// Nodes can be blocked; blocked nodes are never entered by a search.
template <class Cap>
class ResidualGraph {
 public:
  explicit ResidualGraph(NodeId num_nodes)
      : out_(static_cast<std::size_t>(num_nodes)),
        blocked_(static_cast<std::size_t>(num_nodes), 0),
        level_(static_cast<std::size_t>(num_nodes)),
        cursor_(static_cast<std::size_t>(num_nodes)) {}

  NodeId num_nodes() const { return static_cast<NodeId>(out_.size()); }

  // Returns the id of the forward arc; the paired reverse arc is id ^ 1.
  std::size_t add_arc(NodeId from, NodeId to, const Cap& capacity) {
    const std::size_t id = head_.size();
    head_.push_back(to);
    residual_.push_back(capacity);
    capacity_.push_back(capacity);
    head_.push_back(from);
    residual_.push_back(Cap(0));
    capacity_.push_back(Cap(0));
    out_[static_cast<std::size_t>(from)].push_back(static_cast<std::int32_t>(id));
    out_[static_cast<std::size_t>(to)].push_back(static_cast<std::int32_t>(id + 1));
    return id;
  }

  NodeId head(std::size_t arc) const { return head_[arc]; }
  NodeId tail(std::size_t arc) const { return head_[arc ^ 1]; }
  const Cap& residual(std::size_t arc) const { return residual_[arc]; }
  const Cap& capacity(std::size_t arc) const { return capacity_[arc]; }
  Cap flow(std::size_t arc) const { return capacity_[arc] - residual_[arc]; }

  // Changes the capacity of a forward arc and its flow at the same time.
  void set_arc(std::size_t arc, const Cap& capacity, const Cap& flow) {
    capacity_[arc] = capacity;
    residual_[arc] = capacity - flow;
    residual_[arc ^ 1] = flow;
  }

  // Adds delta (possibly negative) to the flow on a forward arc.
  void add_flow(std::size_t arc, const Cap& delta) {
    residual_[arc] -= delta;
    residual_[arc ^ 1] += delta;
  }

  void set_blocked(NodeId v, bool blocked) { blocked_[static_cast<std::size_t>(v)] = blocked ? 1 : 0; }
  bool blocked(NodeId v) const { return blocked_[static_cast<std::size_t>(v)] != 0; }

  // Pushes up to limit units from s to t along residual paths and returns
  // the amount pushed. limit < 0 means unlimited.
  Cap augment(NodeId s, NodeId t, const Cap& limit = Cap(-1)) {
    Cap total(0);
    const bool bounded = limit >= 0;
    while (!bounded || total < limit) {
      if (!build_levels(s, t)) break;
      const Cap pushed = blocking_flow(s, t, bounded ? Cap(limit - total) : Cap(-1));
      if (pushed == 0) break;
      total += pushed;
    }
    return total;
  }

  // Nodes reachable from s through arcs with positive residual capacity.
  std::vector<char> reachable_from(NodeId s) const {
    std::vector<char> seen(out_.size(), 0);
    std::vector<NodeId> stack{s};
    seen[static_cast<std::size_t>(s)] = 1;
    while (!stack.empty()) {
      const NodeId v = stack.back();
      stack.pop_back();
      for (std::int32_t a : out_[static_cast<std::size_t>(v)]) {
        const NodeId w = head_[static_cast<std::size_t>(a)];
        const auto wi = static_cast<std::size_t>(w);
        if (!seen[wi] && !blocked_[wi] && residual_[static_cast<std::size_t>(a)] > 0) {
          seen[wi] = 1;
          stack.push_back(w);
        }
      }
    }
    return seen;
  }

 private:
  bool build_levels(NodeId s, NodeId t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::vector<NodeId> queue{s};
    level_[static_cast<std::size_t>(s)] = 0;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const NodeId v = queue[qi];
      const auto lv = level_[static_cast<std::size_t>(v)];
      if (level_[static_cast<std::size_t>(t)] >= 0 && lv >= level_[static_cast<std::size_t>(t)]) break;
      for (std::int32_t a : out_[static_cast<std::size_t>(v)]) {
        const NodeId w = head_[static_cast<std::size_t>(a)];
        const auto wi = static_cast<std::size_t>(w);
        if (level_[wi] < 0 && !blocked_[wi] && residual_[static_cast<std::size_t>(a)] > 0) {
          level_[wi] = lv + 1;
          queue.push_back(w);
        }
      }
    }
    return level_[static_cast<std::size_t>(t)] >= 0;
  }

  // Iterative blocking flow on the level graph.
  Cap blocking_flow(NodeId s, NodeId t, const Cap& limit) {
    std::fill(cursor_.begin(), cursor_.end(), 0);
    const bool bounded = limit >= 0;
    Cap total(0);
    std::vector<std::int32_t> path;  // arc ids from s
    NodeId v = s;
    while (!bounded || total < limit) {
      if (v == t) {
        Cap push = bounded ? Cap(limit - total) : Cap(-1);
        for (std::int32_t a : path) {
          const Cap& r = residual_[static_cast<std::size_t>(a)];
          if (push < 0 || r < push) push = r;
        }
        std::size_t cut_at = path.size();
        for (std::size_t i = 0; i < path.size(); ++i) {
          const auto a = static_cast<std::size_t>(path[i]);
          residual_[a] -= push;
          residual_[a ^ 1] += push;
          if (residual_[a] == 0 && cut_at == path.size()) cut_at = i;
        }
        total += push;
        if (cut_at == path.size()) break;  // only the limit stopped us
        path.resize(cut_at);
        v = path.empty() ? s : head_[static_cast<std::size_t>(path.back())];
        continue;
      }
      const auto vi = static_cast<std::size_t>(v);
      auto& cur = cursor_[vi];
      const auto& arcs = out_[vi];
      bool advanced = false;
      while (cur < arcs.size()) {
        const auto a = static_cast<std::size_t>(arcs[cur]);
        const NodeId w = head_[a];
        const auto wi = static_cast<std::size_t>(w);
        if (residual_[a] > 0 && level_[wi] == level_[vi] + 1 && !blocked_[wi]) {
          path.push_back(static_cast<std::int32_t>(a));
          v = w;
          advanced = true;
          break;
        }
        ++cur;
      }
      if (advanced) continue;
      // Dead end: retreat.
      level_[vi] = -1;
      if (path.empty()) break;
      path.pop_back();
      v = path.empty() ? s : head_[static_cast<std::size_t>(path.back())];
      ++cursor_[static_cast<std::size_t>(v)];
    }
    return total;
  }

  std::vector<NodeId> head_;
  std::vector<Cap> residual_;
  std::vector<Cap> capacity_;
  std::vector<std::vector<std::int32_t>> out_;
  std::vector<char> blocked_;
  std::vector<std::int32_t> level_;
  std::vector<std::size_t> cursor_;
};

template <class Cap>
void validate_network(const FlowNetwork<Cap>& net) {
  if (net.num_nodes < 2) throw Error(ErrorCode::kInvalidNetwork, "fewer than two nodes");
  auto in_range = [&](NodeId v) { return v >= 0 && v < net.num_nodes; };
  if (!in_range(net.source) || !in_range(net.sink)) {
    throw Error(ErrorCode::kInvalidNetwork, "source or sink out of range");
  }
  if (net.source == net.sink) throw Error(ErrorCode::kInvalidNetwork, "source equals sink");
  for (const auto& arc : net.arcs) {
    if (!in_range(arc.from) || !in_range(arc.to)) {
      throw Error(ErrorCode::kInvalidNetwork, "arc endpoint out of range");
    }
    if (arc.capacity < 0) throw Error(ErrorCode::kInvalidNetwork, "negative capacity");
  }
}

// Exact maximum flow and the source-minimal minimum cut.
template <class Cap>
MaxFlowResult<Cap> max_flow(const FlowNetwork<Cap>& net) {
  validate_network(net);
  ResidualGraph<Cap> rg(net.num_nodes);
  std::vector<std::size_t> ids;
  ids.reserve(net.arcs.size());
  for (const auto& arc : net.arcs) ids.push_back(rg.add_arc(arc.from, arc.to, arc.capacity));
  MaxFlowResult<Cap> out;
  out.value = rg.augment(net.source, net.sink);
  const auto seen = rg.reachable_from(net.source);
  for (NodeId v = 0; v < net.num_nodes; ++v) {
    if (seen[static_cast<std::size_t>(v)]) out.source_side.push_back(v);
  }
  out.arc_flow.reserve(ids.size());
  for (std::size_t id : ids) out.arc_flow.push_back(rg.flow(id));
  return out;
}

}  // namespace mwr
