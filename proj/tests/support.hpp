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

#include <gtest/gtest.h>

#include "mwr/errors.hpp"
#include "mwr/generators.hpp"
#include "mwr/graph.hpp"

#define EXPECT_MWR_ERROR(stmt, expected)                              \
  do {                                                                \
    try {                                                             \
      (void)(stmt);                                                   \
      ADD_FAILURE() << "no error thrown by " #stmt;                   \
    } catch (const mwr::Error& err_) {                                \
      EXPECT_EQ(err_.code(), (expected)) << err_.what();              \
    }                                                                 \
  } while (0)

namespace testing_support {

// Triangle 0-1-2 with pendant edge 2-3.
inline mwr::Graph triangle_pendant() { return mwr::Graph::build(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}); }

inline mwr::Graph two_disjoint_edges() { return mwr::Graph::build(4, {{0, 1}, {2, 3}}); }

// Random connected graph with at most max_n vertices and max_m edges.
inline mwr::Graph random_connected(mwr::Rng& rng, mwr::Vertex min_n, mwr::Vertex max_n, std::int64_t max_m) {
  const auto n = static_cast<mwr::Vertex>(rng.between(min_n, max_n));
  const std::int64_t full = static_cast<std::int64_t>(n) * (n - 1) / 2;
  const std::int64_t hi = std::max<std::int64_t>(n - 1, std::min(full, max_m));
  return mwr::gen_random_connected(n, rng.between(n - 1, hi), rng.next());
}

// Any graph (possibly disconnected) on n vertices, each pair kept with
// probability num/den.
inline mwr::Graph random_graph(mwr::Rng& rng, mwr::Vertex n, int num, int den) {
  std::vector<std::pair<mwr::Vertex, mwr::Vertex>> edges;
  for (mwr::Vertex u = 0; u < n; ++u) {
    for (mwr::Vertex v = u + 1; v < n; ++v) {
      if (static_cast<int>(rng.below(static_cast<std::uint64_t>(den))) < num) edges.emplace_back(u, v);
    }
  }
  return mwr::Graph::build(n, edges);
}

}  // namespace testing_support
