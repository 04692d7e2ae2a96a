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

#include <gtest/gtest.h>

#include "mwr/flow.hpp"
#include "mwr/generators.hpp"
#include "oracles.hpp"
#include "support.hpp"

namespace mwr {
namespace {

TEST(MaxFlow, SingleArc) {
  FlowNetwork<> net{2, 0, 1, {}};
  net.add_arc(0, 1, 5);
  const auto r = max_flow(net);
  EXPECT_EQ(r.value, 5);
  EXPECT_EQ(r.source_side, (std::vector<NodeId>{0}));
}

TEST(MaxFlow, Bottleneck) {
  FlowNetwork<> net{3, 0, 1, {}};
  net.add_arc(0, 2, 3);
  net.add_arc(2, 1, 2);
  const auto r = max_flow(net);
  EXPECT_EQ(r.value, 2);
  EXPECT_EQ(r.source_side, (std::vector<NodeId>{0, 2}));
  EXPECT_EQ(r.arc_flow, (std::vector<BigInt>{2, 2}));
}

TEST(MaxFlow, InvalidNetworks) {
  FlowNetwork<> same{3, 1, 1, {}};
  EXPECT_MWR_ERROR(max_flow(same), ErrorCode::kInvalidNetwork);
  FlowNetwork<> tiny{1, 0, 0, {}};
  EXPECT_MWR_ERROR(max_flow(tiny), ErrorCode::kInvalidNetwork);
  FlowNetwork<> negative{2, 0, 1, {}};
  negative.add_arc(0, 1, -1);
  EXPECT_MWR_ERROR(max_flow(negative), ErrorCode::kInvalidNetwork);
  FlowNetwork<> outside{2, 0, 1, {}};
  outside.add_arc(0, 4, 1);
  EXPECT_MWR_ERROR(max_flow(outside), ErrorCode::kInvalidNetwork);
}

template <class Cap>
FlowNetwork<Cap> random_network(Rng& rng) {
  FlowNetwork<Cap> net;
  net.num_nodes = static_cast<NodeId>(rng.between(2, 12));
  net.source = 0;
  net.sink = net.num_nodes - 1;
  const auto arcs = rng.between(0, 3 * net.num_nodes);
  for (std::int64_t i = 0; i < arcs; ++i) {
    const auto a = static_cast<NodeId>(rng.below(static_cast<std::uint64_t>(net.num_nodes)));
    const auto b = static_cast<NodeId>(rng.below(static_cast<std::uint64_t>(net.num_nodes)));
    net.add_arc(a, b, Cap(rng.between(0, 20)));
  }
  return net;
}

template <class Cap>
void check_against_exhaustive_cut(std::uint64_t seed) {
  Rng rng(seed);
  for (int trial = 0; trial < 200; ++trial) {
    const auto net = random_network<Cap>(rng);
    const auto r = max_flow(net);
    EXPECT_EQ(r.value, oracle::min_cut(net));
    EXPECT_EQ(oracle::cut_capacity(net, r.source_side), r.value);
    ASSERT_FALSE(r.source_side.empty());
    EXPECT_EQ(r.source_side.front(), net.source);
    EXPECT_EQ(std::count(r.source_side.begin(), r.source_side.end(), net.sink), 0);
    // conservation and capacity
    std::vector<Cap> balance(static_cast<std::size_t>(net.num_nodes), Cap(0));
    for (std::size_t i = 0; i < net.arcs.size(); ++i) {
      EXPECT_GE(r.arc_flow[i], 0);
      EXPECT_LE(r.arc_flow[i], net.arcs[i].capacity);
      balance[static_cast<std::size_t>(net.arcs[i].from)] -= r.arc_flow[i];
      balance[static_cast<std::size_t>(net.arcs[i].to)] += r.arc_flow[i];
    }
    for (NodeId v = 0; v < net.num_nodes; ++v) {
      if (v == net.source || v == net.sink) continue;
      EXPECT_EQ(balance[static_cast<std::size_t>(v)], 0);
    }
    EXPECT_EQ(balance[static_cast<std::size_t>(net.sink)], r.value);
  }
}

TEST(MaxFlow, MatchesExhaustiveCutBigInt) { check_against_exhaustive_cut<BigInt>(23); }
TEST(MaxFlow, MatchesExhaustiveCutInt64) { check_against_exhaustive_cut<std::int64_t>(29); }

TEST(ResidualGraph, IncrementalAugmentAfterCapacityEdit) {
  ResidualGraph<std::int64_t> rg(4);
  const auto sa = rg.add_arc(0, 2, 4);
  rg.add_arc(2, 1, 10);
  const auto sb = rg.add_arc(0, 3, 4);
  const auto bt = rg.add_arc(3, 1, 1);
  EXPECT_EQ(rg.augment(0, 1), 5);
  rg.set_arc(bt, 10, rg.flow(bt));
  EXPECT_EQ(rg.augment(0, 1), 3);
  EXPECT_EQ(rg.flow(sa), 4);
  EXPECT_EQ(rg.flow(sb), 4);
}

TEST(ResidualGraph, BlockedNodesAreSkipped) {
  ResidualGraph<std::int64_t> rg(3);
  rg.add_arc(0, 2, 5);
  rg.add_arc(2, 1, 5);
  rg.set_blocked(2, true);
  EXPECT_EQ(rg.augment(0, 1), 0);
  EXPECT_FALSE(rg.reachable_from(0)[2]);
  rg.set_blocked(2, false);
  EXPECT_EQ(rg.augment(0, 1, 3), 3);
}

}  // namespace
}  // namespace mwr
