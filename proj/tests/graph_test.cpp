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

#include "mwr/graph.hpp"
#include "oracles.hpp"
#include "support.hpp"

namespace mwr {
namespace {

using testing_support::triangle_pendant;
using testing_support::two_disjoint_edges;

TEST(BuildGraph, Triangle) {
  const Graph g = Graph::build(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(g.num_vertices(), 3);
  EXPECT_EQ(g.num_edges(), 3);
}

TEST(BuildGraph, DuplicatesCollapseAndReorder) {
  const Graph g = Graph::build(2, {{1, 0}, {0, 1}});
  ASSERT_EQ(g.num_edges(), 1);
  EXPECT_EQ(g.edge(0), (Edge{0, 1}));
}

TEST(BuildGraph, SingleVertex) {
  const Graph g = Graph::build(1, {});
  EXPECT_EQ(g.num_vertices(), 1);
  EXPECT_EQ(g.num_edges(), 0);
}

TEST(BuildGraph, Errors) {
  EXPECT_MWR_ERROR(Graph::build(3, {{1, 1}}), ErrorCode::kInvalidEdge);
  EXPECT_MWR_ERROR(Graph::build(3, {{0, 3}}), ErrorCode::kOutOfRange);
  EXPECT_MWR_ERROR(Graph::build(3, {{-1, 2}}), ErrorCode::kOutOfRange);
}

TEST(BuildGraph, CanonicalEdgeOrder) {
  const Graph g = Graph::build(4, {{3, 2}, {0, 3}, {1, 0}});
  const std::vector<Edge> want = {{0, 1}, {0, 3}, {2, 3}};
  EXPECT_TRUE(std::equal(g.edges().begin(), g.edges().end(), want.begin(), want.end()));
  EXPECT_EQ(g.edge_index(3, 0), 1);
  EXPECT_FALSE(g.edge_index(1, 2).has_value());
  EXPECT_TRUE(g.adjacent(2, 3));
  EXPECT_EQ(g.degree(0), 2U);
}

TEST(InducedSubgraph, Examples) {
  const Graph k4 = Graph::build(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  const auto sub = induced_subgraph(k4, VertexSet({0, 1, 2}));
  EXPECT_EQ(sub.graph.num_vertices(), 3);
  EXPECT_EQ(sub.graph.num_edges(), 3);

  const Graph path = Graph::build(3, {{0, 1}, {1, 2}});
  const auto ends = induced_subgraph(path, VertexSet({0, 2}));
  EXPECT_EQ(ends.graph.num_vertices(), 2);
  EXPECT_EQ(ends.graph.num_edges(), 0);

  const auto tri = induced_subgraph(triangle_pendant(), VertexSet({0, 1, 2}));
  EXPECT_EQ(tri.graph, Graph::build(3, {{0, 1}, {0, 2}, {1, 2}}));
  EXPECT_EQ(tri.edge_to_parent, (std::vector<EdgeIndex>{0, 1, 2}));

  EXPECT_MWR_ERROR(induced_subgraph(path, VertexSet({0, 3})), ErrorCode::kOutOfRange);
}

TEST(ConnectedComponents, Examples) {
  const Graph tri_iso = Graph::build(4, {{0, 1}, {0, 2}, {1, 2}});
  EXPECT_EQ(connected_components(tri_iso), (std::vector<VertexSet>{VertexSet({0, 1, 2}), VertexSet({3})}));
  EXPECT_EQ(connected_components(Graph::build(1, {})), (std::vector<VertexSet>{VertexSet({0})}));
  EXPECT_EQ(connected_components(two_disjoint_edges()),
            (std::vector<VertexSet>{VertexSet({0, 1}), VertexSet({2, 3})}));
}

TEST(IsConnected, Examples) {
  EXPECT_TRUE(is_connected(gen_complete(5)));
  EXPECT_FALSE(is_connected(two_disjoint_edges()));
  EXPECT_TRUE(is_connected(Graph::build(1, {})));
  EXPECT_FALSE(is_connected(Graph::build(0, {})));
}

TEST(GraphProperties, InducedEdgeCountMatchesFilter) {
  Rng rng(101);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<Vertex>(rng.between(1, 12));
    const Graph g = testing_support::random_graph(rng, n, 1, 2);
    std::vector<Vertex> members;
    for (Vertex v = 0; v < n; ++v) {
      if (rng.below(2)) members.push_back(v);
    }
    std::uint64_t mask = 0;
    for (Vertex v : members) mask |= std::uint64_t{1} << v;
    const auto sub = induced_subgraph(g, VertexSet(members));
    EXPECT_EQ(sub.graph.num_edges(), oracle::induced_edge_count(g, mask));
    EXPECT_EQ(static_cast<int>(edges_within(g, VertexSet(members)).size()), oracle::induced_edge_count(g, mask));
  }
}

TEST(GraphProperties, ComponentsPartitionVertices) {
  Rng rng(202);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<Vertex>(rng.between(1, 14));
    const Graph g = testing_support::random_graph(rng, n, 1, 6);
    std::vector<int> seen(static_cast<std::size_t>(n), 0);
    for (const auto& c : connected_components(g)) {
      EXPECT_TRUE(induces_connected(g, c));
      for (Vertex v : c) ++seen[static_cast<std::size_t>(v)];
      std::uint64_t mask = 0;
      for (Vertex v : c) mask |= std::uint64_t{1} << v;
      EXPECT_TRUE(oracle::mask_connected(g, mask, oracle::all_edges(g)));
      // maximal: no edge leaves the part
      for (Vertex v : c) {
        for (Vertex w : g.neighbors(v)) EXPECT_TRUE(c.contains(w));
      }
    }
    for (int s : seen) EXPECT_EQ(s, 1);
  }
}

}  // namespace
}  // namespace mwr
