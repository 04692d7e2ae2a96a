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

// Minimum weighting ratio: min over nonnegative edge weightings of
// w(maximum spanning tree) / w(G). The optimum equals the minimum of
// (|S| - 1) / e(G[S]) over vertex sets S with G[S] connected and |S| >= 2,
// and is attained by the 0-1 weighting supported on E(G[S]). Equivalently we
// maximize the density e(G[S]) / (|S| - 1).

#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mwr/errors.hpp"
#include "mwr/flow.hpp"
#include "mwr/graph.hpp"
#include "mwr/max_spanning.hpp"
#include "mwr/rational.hpp"

namespace mwr {

enum class SolveMethod { kBruteSubsets, kBruteWeightings, kDinkelbach };

inline std::string_view method_name(SolveMethod m) {
  switch (m) {
    case SolveMethod::kBruteSubsets: return "brute-subsets";
    case SolveMethod::kBruteWeightings: return "brute-weightings";
    case SolveMethod::kDinkelbach: return "dinkelbach";
  }
  return "unknown";
}

struct RatioSolution {
  Rational value;                  // (|subset| - 1) / e(G[subset])
  VertexSet subset;                // G[subset] connected, |subset| >= 2
  std::vector<EdgeIndex> support;  // E(G[subset]), ascending
  SolveMethod method = SolveMethod::kDinkelbach;
  int iterations = 0;
  std::vector<Rational> trace;     // densities tried, one per iteration

  // e(G[subset]) / (|subset| - 1), the reciprocal of value.
  Rational density() const { return 1 / value; }
};

inline constexpr Vertex kDefaultBruteVertexCap = 20;
inline constexpr EdgeIndex kDefaultBruteEdgeCap = 16;

namespace detail {

inline RatioSolution make_solution(const Graph& g, VertexSet subset, SolveMethod method) {
  RatioSolution sol;
  sol.support = edges_within(g, subset);
  sol.value = Rational(static_cast<std::int64_t>(subset.size()) - 1,
                       static_cast<std::int64_t>(sol.support.size()));
  sol.subset = std::move(subset);
  sol.method = method;
  return sol;
}

inline void require_solvable(const Graph& g) {
  if (g.num_vertices() < 2) {
    throw Error(ErrorCode::kDegenerateGraph, "need at least two vertices");
  }
  if (!is_connected(g)) throw Error(ErrorCode::kNotConnected, "graph is not connected");
}

inline VertexSet mask_to_set(std::uint64_t mask) {
  std::vector<Vertex> out;
  while (mask) {
    out.push_back(static_cast<Vertex>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return VertexSet(std::move(out));
}

// True if (ka - 1) / ea beats (kb - 1) / eb under the ordering: smaller
// ratio, then fewer vertices, then lexicographically smaller set.
inline bool better_subset(std::int64_t ka, std::int64_t ea, const VertexSet& a,
                          std::int64_t kb, std::int64_t eb, const VertexSet& b) {
  const std::int64_t lhs = (ka - 1) * eb;
  const std::int64_t rhs = (kb - 1) * ea;
  if (lhs != rhs) return lhs < rhs;
  if (ka != kb) return ka < kb;
  return a < b;
}

}  // namespace detail

// Calls visit(mask) once for every vertex set S with G[S] connected and
// |S| >= 1. Sets are grown from their smallest vertex, adding only larger
// vertices adjacent to the current set.
inline void for_each_connected_subset(const Graph& g, Vertex cap,
                                      const std::function<void(std::uint64_t)>& visit) {
  if (g.num_vertices() > cap || g.num_vertices() > 62) {
    throw Error(ErrorCode::kTooLargeForBrute,
                std::to_string(g.num_vertices()) + " vertices exceeds the cap of " +
                    std::to_string(std::min<Vertex>(cap, 62)));
  }
  const auto n = static_cast<std::size_t>(g.num_vertices());
  std::vector<std::uint64_t> adj(n, 0);
  for (const Edge& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u)] |= std::uint64_t{1} << e.v;
    adj[static_cast<std::size_t>(e.v)] |= std::uint64_t{1} << e.u;
  }
  std::function<void(std::uint64_t, std::uint64_t, std::uint64_t, std::uint64_t)> extend =
      [&](std::uint64_t set, std::uint64_t ext, std::uint64_t excl, std::uint64_t allowed) {
        visit(set);
        while (ext) {
          const auto v = static_cast<std::size_t>(std::countr_zero(ext));
          const std::uint64_t bit = std::uint64_t{1} << v;
          ext &= ext - 1;
          excl |= bit;
          extend(set | bit, ext | (adj[v] & allowed & ~excl), excl, allowed);
        }
      };
  for (std::size_t r = 0; r < n; ++r) {
    const std::uint64_t root = std::uint64_t{1} << r;
    const std::uint64_t allowed = ~((root << 1) - 1);  // vertices > r
    extend(root, adj[r] & allowed, root, allowed);
  }
}

// Exhaustive minimum of (|S| - 1) / e(G[S]) over connected S, |S| >= 2.
inline RatioSolution brute_min_ratio(const Graph& g, Vertex cap = kDefaultBruteVertexCap) {
  detail::require_solvable(g);
  if (g.num_vertices() > cap) {
    throw Error(ErrorCode::kTooLargeForBrute, std::to_string(g.num_vertices()) +
                                                  " vertices exceeds the cap of " +
                                                  std::to_string(cap));
  }
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(g.num_vertices()), 0);
  for (const Edge& e : g.edges()) adj[static_cast<std::size_t>(e.u)] |= std::uint64_t{1} << e.v;
  std::int64_t best_k = 0, best_e = 0;
  VertexSet best;
  for_each_connected_subset(g, cap, [&](std::uint64_t mask) {
    const auto k = static_cast<std::int64_t>(std::popcount(mask));
    if (k < 2) return;
    std::int64_t e = 0;
    for (std::uint64_t rest = mask; rest; rest &= rest - 1) {
      e += std::popcount(adj[static_cast<std::size_t>(std::countr_zero(rest))] & mask);
    }
    if (best_k == 0) {
      best_k = k, best_e = e, best = detail::mask_to_set(mask);
      return;
    }
    // Cheap ratio screen before materializing the set.
    const std::int64_t lhs = (k - 1) * best_e, rhs = (best_k - 1) * e;
    if (lhs > rhs || (lhs == rhs && k > best_k)) return;
    VertexSet cand = detail::mask_to_set(mask);
    if (detail::better_subset(k, e, cand, best_k, best_e, best)) {
      best_k = k, best_e = e, best = std::move(cand);
    }
  });
  return detail::make_solution(g, std::move(best), SolveMethod::kBruteSubsets);
}

// Every optimal connected subset, for small graphs.
inline std::vector<VertexSet> all_optimal_subsets(const Graph& g,
                                                  Vertex cap = kDefaultBruteVertexCap) {
  const RatioSolution best = brute_min_ratio(g, cap);
  const auto bk = static_cast<std::int64_t>(best.subset.size());
  const auto be = static_cast<std::int64_t>(best.support.size());
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(g.num_vertices()), 0);
  for (const Edge& e : g.edges()) adj[static_cast<std::size_t>(e.u)] |= std::uint64_t{1} << e.v;
  std::vector<VertexSet> out;
  for_each_connected_subset(g, cap, [&](std::uint64_t mask) {
    const auto k = static_cast<std::int64_t>(std::popcount(mask));
    if (k < 2) return;
    std::int64_t e = 0;
    for (std::uint64_t rest = mask; rest; rest &= rest - 1) {
      e += std::popcount(adj[static_cast<std::size_t>(std::countr_zero(rest))] & mask);
    }
    if ((k - 1) * be == (bk - 1) * e) out.push_back(detail::mask_to_set(mask));
  });
  std::sort(out.begin(), out.end());
  return out;
}

// Among the components of G[S] with an edge, the densest one. Ties go to the
// component holding the smallest vertex.
inline VertexSet extract_best_component(const Graph& g, const VertexSet& s) {
  const InducedSubgraph sub = induced_subgraph(g, s);
  const auto parts = connected_components(sub.graph);
  const VertexSet* best = nullptr;
  std::int64_t best_k = 0, best_e = 0;
  std::vector<VertexSet> mapped;
  mapped.reserve(parts.size());
  for (const VertexSet& part : parts) {
    std::vector<Vertex> members;
    for (Vertex v : part) members.push_back(sub.to_parent[static_cast<std::size_t>(v)]);
    mapped.emplace_back(std::move(members));
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto k = static_cast<std::int64_t>(parts[i].size());
    if (k < 2) continue;
    const auto e = static_cast<std::int64_t>(edges_within(sub.graph, parts[i]).size());
    // e / (k - 1) > best_e / (best_k - 1)
    if (best == nullptr || e * (best_k - 1) > best_e * (k - 1)) {
      best = &mapped[i];
      best_k = k;
      best_e = e;
    }
  }
  if (best == nullptr) {
    throw Error(ErrorCode::kNoEdgeComponent, "every component of G[S] is a single vertex");
  }
  return *best;
}

struct DensityDecision {
  bool exceeds = false;
  VertexSet witness;  // q * e(G[S]) > p * (|S| - 1) when exceeds
};

namespace detail {

// Network: source -> edge node (q), edge node -> each endpoint (unbounded),
// vertex node -> sink (p). A full flow saturates every source arc exactly
// when q * e(S) <= p * |S| for all S.
template <class Cap>
DensityDecision density_decision_impl(const Graph& g, const Cap& p, const Cap& q) {
  const NodeId source = 0;
  const NodeId sink = 1;
  const auto m = static_cast<NodeId>(g.num_edges());
  const auto n = static_cast<NodeId>(g.num_vertices());
  auto edge_node = [](EdgeIndex e) { return static_cast<NodeId>(2 + e); };
  auto vertex_node = [m](Vertex v) { return static_cast<NodeId>(2 + m + v); };

  const Cap full = q * Cap(m);
  const Cap unbounded = full + 1;
  ResidualGraph<Cap> rg(2 + m + n);
  std::vector<std::size_t> source_arc(static_cast<std::size_t>(m));
  std::vector<std::size_t> to_u(static_cast<std::size_t>(m));
  std::vector<std::size_t> to_v(static_cast<std::size_t>(m));
  std::vector<std::size_t> sink_arc(static_cast<std::size_t>(n));
  for (EdgeIndex e = 0; e < m; ++e) {
    const Edge& ed = g.edge(e);
    const auto ei = static_cast<std::size_t>(e);
    source_arc[ei] = rg.add_arc(source, edge_node(e), q);
    to_u[ei] = rg.add_arc(edge_node(e), vertex_node(ed.u), unbounded);
    to_v[ei] = rg.add_arc(edge_node(e), vertex_node(ed.v), unbounded);
  }
  for (Vertex v = 0; v < n; ++v) sink_arc[static_cast<std::size_t>(v)] = rg.add_arc(vertex_node(v), sink, p);

  auto collect = [&](const std::vector<char>& seen) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n; ++v) {
      if (seen[static_cast<std::size_t>(vertex_node(v))]) out.push_back(v);
    }
    return VertexSet(std::move(out));
  };

  // Max over all S of q*e(S) - p*|S| is full - flow. A positive value is
  // attained only by sets with an edge, hence |S| >= 2.
  const Cap flow = rg.augment(source, sink);
  if (flow < full) return {true, collect(rg.reachable_from(source))};

  // The flow is full. Test every S by its first vertex v in index order:
  // remove the vertices before v, drop v's sink capacity to zero and reroute
  // its load. The load can be rerouted iff q*e(S) <= p*(|S| - 1) for every S
  // containing v in the remaining graph.
  rg.set_blocked(source, true);
  for (Vertex v = 0; v < n; ++v) {
    const auto vi = static_cast<std::size_t>(v);
    const Cap load = rg.flow(sink_arc[vi]);
    if (load > 0) {
      rg.set_arc(sink_arc[vi], Cap(0), Cap(0));
      const Cap routed = rg.augment(vertex_node(v), sink, load);
      if (routed < load) {
        // The vertices reachable from v carry their full capacity p, and v
        // still holds load - routed > 0 units.
        return {true, collect(rg.reachable_from(vertex_node(v)))};
      }
      rg.set_arc(sink_arc[vi], p, Cap(0));
    }
    const auto nb = g.neighbors(v);
    const auto inc = g.incident_edges(v);
    for (std::size_t k = 0; k < nb.size(); ++k) {
      if (nb[k] < v) continue;  // already removed with nb[k]
      const auto ei = static_cast<std::size_t>(inc[k]);
      const Edge& ed = g.edge(inc[k]);
      const std::size_t own = ed.u == v ? to_u[ei] : to_v[ei];
      const std::size_t other = ed.u == v ? to_v[ei] : to_u[ei];
      if (rg.flow(own) != 0) throw std::logic_error("density_decision: residual load on removed vertex");
      const Cap f = rg.flow(other);
      rg.add_flow(other, -f);
      rg.add_flow(sink_arc[static_cast<std::size_t>(nb[k])], -f);
      rg.add_flow(source_arc[ei], -f);
      rg.set_blocked(edge_node(inc[k]), true);
    }
    rg.set_blocked(vertex_node(v), true);
  }
  return {false, {}};
}

}  // namespace detail

// Decides whether some S with |S| >= 2 has density e(G[S]) / (|S| - 1)
// strictly above p / q, returning such an S if so.
inline DensityDecision density_decision(const Graph& g, const BigInt& p, const BigInt& q) {
  if (p <= 0 || q <= 0) {
    throw Error(ErrorCode::kInvalidThreshold, "threshold p/q needs p >= 1 and q >= 1");
  }
  const BigInt bound = q * g.num_edges() * 2 + p * g.num_vertices() + 2;
  if (bound < (BigInt(1) << 62)) {
    return detail::density_decision_impl<std::int64_t>(g, static_cast<std::int64_t>(p),
                                                       static_cast<std::int64_t>(q));
  }
  return detail::density_decision_impl<BigInt>(g, p, q);
}

// Dinkelbach iteration on the density: start from S = V, and while a strictly
// denser set exists, move to the densest component of the witness.
inline RatioSolution solve_min_ratio(const Graph& g) {
  detail::require_solvable(g);
  VertexSet current = VertexSet::range(g.num_vertices());
  std::int64_t k = g.num_vertices();
  std::int64_t e = g.num_edges();
  std::vector<Rational> trace;
  int iterations = 0;
  const std::int64_t max_iterations = static_cast<std::int64_t>(g.num_vertices()) * g.num_edges() + 1;
  while (true) {
    const Rational lambda(e, k - 1);
    trace.push_back(lambda);
    ++iterations;
    const DensityDecision d = density_decision(g, numerator_of(lambda), denominator_of(lambda));
    if (!d.exceeds) break;
    VertexSet next = extract_best_component(g, d.witness);
    const auto nk = static_cast<std::int64_t>(next.size());
    const auto ne = static_cast<std::int64_t>(edges_within(g, next).size());
    if (ne * (k - 1) <= e * (nk - 1)) {
      throw std::logic_error("solve_min_ratio: density did not increase");
    }
    if (iterations > max_iterations) throw std::logic_error("solve_min_ratio: no convergence");
    current = std::move(next);
    k = nk;
    e = ne;
  }
  RatioSolution sol = detail::make_solution(g, std::move(current), SolveMethod::kDinkelbach);
  sol.iterations = iterations;
  sol.trace = std::move(trace);
  return sol;
}

// Exhaustive minimum of t_w(G) over all nonzero 0-1 weightings, each
// evaluated with max_spanning_forest. The witness subset is the densest
// component of the best support.
inline RatioSolution brute_weighting_min(const Graph& g, EdgeIndex cap = kDefaultBruteEdgeCap) {
  detail::require_solvable(g);
  const EdgeIndex m = g.num_edges();
  if (m > cap || m > 30) {
    throw Error(ErrorCode::kTooLargeForBrute, std::to_string(m) + " edges exceeds the cap of " +
                                                  std::to_string(std::min<EdgeIndex>(cap, 30)));
  }
  Rational best;
  std::uint32_t best_mask = 0;
  const std::uint32_t limit = std::uint32_t{1} << m;
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    std::vector<EdgeIndex> support;
    for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
      support.push_back(static_cast<EdgeIndex>(std::countr_zero(rest)));
    }
    const auto size = static_cast<std::int64_t>(support.size());
    const SpanningResult tree = max_spanning_forest(g, WeightFn::zero_one(m, std::move(support)));
    const Rational t = tree.total_weight / size;
    if (best_mask == 0 || t < best) {
      best = t;
      best_mask = mask;
    }
  }
  std::vector<Vertex> touched;
  for (std::uint32_t rest = best_mask; rest; rest &= rest - 1) {
    const Edge& ed = g.edge(static_cast<EdgeIndex>(std::countr_zero(rest)));
    touched.push_back(ed.u);
    touched.push_back(ed.v);
  }
  RatioSolution sol = detail::make_solution(g, extract_best_component(g, VertexSet(std::move(touched))),
                                            SolveMethod::kBruteWeightings);
  if (sol.value > best) throw std::logic_error("brute_weighting_min: witness worse than weighting");
  sol.value = best;
  return sol;
}

// Throws InvalidSolution unless sol is internally consistent for g.
inline void validate_solution(const Graph& g, const RatioSolution& sol) {
  sol.subset.check_within(g.num_vertices());
  if (sol.subset.size() < 2 || !induces_connected(g, sol.subset)) {
    throw Error(ErrorCode::kInvalidSolution, "subset must induce a connected graph on >= 2 vertices");
  }
  if (sol.support != edges_within(g, sol.subset)) {
    throw Error(ErrorCode::kInvalidSolution, "support must equal the edges induced by the subset");
  }
  const Rational expected(static_cast<std::int64_t>(sol.subset.size()) - 1,
                          static_cast<std::int64_t>(sol.support.size()));
  if (sol.value != expected) {
    throw Error(ErrorCode::kInvalidSolution, "value " + to_string(sol.value) + " != " + to_string(expected));
  }
}

// The 0-1 weighting supported on E(G[subset]).
inline WeightFn optimal_weighting(const Graph& g, const RatioSolution& sol) {
  validate_solution(g, sol);
  return WeightFn::zero_one(g.num_edges(), sol.support);
}

enum class SolveChoice { kAuto, kFlow, kBrute, kBruteWeightings };

// kAuto: brute subsets for n <= 10, flow otherwise.
inline RatioSolution solve(const Graph& g, SolveChoice choice) {
  switch (choice) {
    case SolveChoice::kFlow: return solve_min_ratio(g);
    case SolveChoice::kBrute: return brute_min_ratio(g);
    case SolveChoice::kBruteWeightings: return brute_weighting_min(g);
    case SolveChoice::kAuto: break;
  }
  return g.num_vertices() <= 10 ? brute_min_ratio(g) : solve_min_ratio(g);
}

}  // namespace mwr
