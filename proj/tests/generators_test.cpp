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

#include "mwr/chordal.hpp"
#include "mwr/generators.hpp"
#include "mwr/io.hpp"
#include "mwr/max_spanning.hpp"
#include "support.hpp"

namespace mwr {
namespace {

TEST(GenComplete, Examples) {
  EXPECT_EQ(gen_complete(1).num_vertices(), 1);
  EXPECT_EQ(gen_complete(1).num_edges(), 0);
  EXPECT_EQ(gen_complete(4).num_edges(), 6);
  EXPECT_EQ(gen_complete(10).num_edges(), 45);
  EXPECT_MWR_ERROR(gen_complete(0), ErrorCode::kInvalidSpec);
}

TEST(GenGap, SmallExample) {
  const GapInstance gap = gen_gap(3, 2, 1);
  EXPECT_EQ(gap.graph.num_vertices(), 5);
  EXPECT_EQ(gap.graph.num_edges(), 5);
  const Rational tw = weighting_ratio(gap.graph, gap.weights);
  const Rational u = uniform_ratio(gap.graph);
  EXPECT_EQ(tw, Rational(2, 3));
  EXPECT_EQ(u, Rational(4, 5));
  EXPECT_EQ(tw / u, Rational(5, 6));
}

TEST(GenGap, PathCase) {
  const GapInstance gap = gen_gap(2, 1, 4);
  EXPECT_EQ(gap.graph, Graph::build(3, {{0, 1}, {0, 2}}));
  // t_w = 1/1 on the clique edge, u = 2/2.
  EXPECT_EQ(weighting_ratio(gap.graph, gap.weights) / uniform_ratio(gap.graph), 1);
}

TEST(GenGap, ShapeAndWeights) {
  Rng rng(71);
  for (int trial = 0; trial < 50; ++trial) {
    const auto kappa = static_cast<Vertex>(rng.between(2, 12));
    const auto t = static_cast<Vertex>(rng.between(1, 40));
    const GapInstance gap = gen_gap(kappa, t, rng.next());
    EXPECT_EQ(gap.graph.num_vertices(), kappa + t);
    EXPECT_EQ(gap.graph.num_edges(), kappa * (kappa - 1) / 2 + t);
    EXPECT_TRUE(is_connected(gap.graph));
    EXPECT_EQ(static_cast<Vertex>(gap.weights.support().size()), kappa * (kappa - 1) / 2);
    for (EdgeIndex e = 0; e < gap.graph.num_edges(); ++e) {
      const Edge& ed = gap.graph.edge(e);
      EXPECT_EQ(gap.weights[e] == 1, ed.v < kappa);
      // tree edges touch the clique only at vertex 0
      if (ed.v >= kappa) EXPECT_TRUE(ed.u == 0 || ed.u >= kappa);
    }
  }
  EXPECT_MWR_ERROR(gen_gap(1, 3, 0), ErrorCode::kInvalidSpec);
  EXPECT_MWR_ERROR(gen_gap(3, 0, 0), ErrorCode::kInvalidSpec);
}

TEST(GenRandomConnected, Examples) {
  const Graph tree = gen_random_connected(5, 4, 3);
  EXPECT_EQ(tree.num_edges(), 4);
  EXPECT_TRUE(is_connected(tree));
  EXPECT_EQ(gen_random_connected(4, 6, 99), gen_complete(4));
  const Graph g = gen_random_connected(8, 12, 7);
  EXPECT_EQ(g.num_edges(), 12);
  EXPECT_TRUE(is_connected(g));
  EXPECT_MWR_ERROR(gen_random_connected(5, 3, 0), ErrorCode::kInvalidSpec);
  EXPECT_MWR_ERROR(gen_random_connected(4, 7, 0), ErrorCode::kInvalidSpec);
  EXPECT_MWR_ERROR(gen_random_connected(0, 0, 0), ErrorCode::kInvalidSpec);
}

TEST(GenRandomConnected, DeterministicPerSeed) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    EXPECT_EQ(serialize_graph(gen_random_connected(30, 100, seed)),
              serialize_graph(gen_random_connected(30, 100, seed)));
  }
  EXPECT_NE(serialize_graph(gen_random_connected(30, 100, 1)), serialize_graph(gen_random_connected(30, 100, 2)));
}

TEST(GenRandomConnected, DenseRequests) {
  const Graph g = gen_random_connected(60, 1700, 5);
  EXPECT_EQ(g.num_edges(), 1700);
  EXPECT_TRUE(is_connected(g));
}

TEST(GenRandomChordal, Examples) {
  const Graph tree = gen_random_chordal(20, 2, 5);
  EXPECT_EQ(tree.num_edges(), 19);
  EXPECT_TRUE(is_connected(tree));
  const Graph g = gen_random_chordal(30, 5, 11);
  EXPECT_TRUE(is_chordal(g));
  EXPECT_LE(clique_number(g), 5U);
  EXPECT_MWR_ERROR(gen_random_chordal(5, 1, 0), ErrorCode::kInvalidSpec);
  EXPECT_MWR_ERROR(gen_random_chordal(5, 6, 0), ErrorCode::kInvalidSpec);
}

TEST(GenRandomChordal, CanEmitCompleteGraph) {
  bool complete = false;
  for (std::uint64_t seed = 0; seed < 200 && !complete; ++seed) {
    complete = gen_random_chordal(4, 4, seed) == gen_complete(4);
  }
  EXPECT_TRUE(complete);
}

TEST(GenRandomChordal, ChordalWithBoundedCliques) {
  Rng rng(73);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<Vertex>(rng.between(1, 50));
    const auto kmax = static_cast<Vertex>(rng.between(std::min<Vertex>(2, n), n));
    if (kmax < 2) continue;
    const Graph g = gen_random_chordal(n, kmax, rng.next());
    EXPECT_TRUE(is_connected(g));
    EXPECT_TRUE(is_chordal(g));
    EXPECT_LE(clique_number(g), static_cast<std::size_t>(kmax));
    // Vertices are inserted in index order, so the reverse is a PEO.
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = n - 1 - v;
    EXPECT_TRUE(check_peo(g, {order}));
  }
}

TEST(Generate, Dispatch) {
  GenSpec spec;
  spec.family = Family::kGap;
  spec.kappa = 4;
  spec.t = 3;
  spec.seed = 2;
  const Generated gen = generate(spec);
  ASSERT_TRUE(gen.weights.has_value());
  EXPECT_EQ(gen.graph.num_vertices(), 7);
  EXPECT_EQ(parse_family("random-chordal"), Family::kRandomChordal);
  EXPECT_FALSE(parse_family("petersen").has_value());
}

}  // namespace
}  // namespace mwr
