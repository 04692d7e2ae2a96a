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

// Seeded property suites behind `mwr verify <suite>`.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mwr/chordal.hpp"
#include "mwr/generators.hpp"
#include "mwr/graph.hpp"
#include "mwr/max_spanning.hpp"
#include "mwr/ratio_opt.hpp"
#include "mwr/rational.hpp"

namespace mwr::verify {

struct SuiteResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::vector<std::string> failures;  // first few diagnostics

  bool ok() const { return failed == 0 && passed > 0; }

  void record(bool ok, const std::function<std::string()>& why) {
    if (ok) {
      ++passed;
      return;
    }
    ++failed;
    if (failures.size() < 10) failures.push_back(why());
  }
};

// Random connected graph with n in [n_lo, n_hi] and m capped at m_cap.
inline Graph random_small_graph(Rng& rng, Vertex n_lo, Vertex n_hi, std::int64_t m_cap) {
  const auto n = static_cast<Vertex>(rng.between(n_lo, n_hi));
  const std::int64_t max_m = std::min<std::int64_t>(static_cast<std::int64_t>(n) * (n - 1) / 2, m_cap);
  const std::int64_t m = rng.between(n - 1, std::max<std::int64_t>(n - 1, max_m));
  return gen_random_connected(n, m, rng.next());
}

inline std::vector<EdgeIndex> random_edge_subset(Rng& rng, EdgeIndex m) {
  std::vector<EdgeIndex> out;
  for (EdgeIndex e = 0; e < m; ++e) {
    if (rng.below(2)) out.push_back(e);
  }
  return out;
}

inline std::string describe(const Graph& g) {
  std::ostringstream os;
  os << "n=" << g.num_vertices() << " edges={";
  for (const Edge& e : g.edges()) os << '(' << e.u << ',' << e.v << ')';
  os << '}';
  return os.str();
}

// Marginal gain of a new support edge is 0 or 1, and 1 exactly when the edge
// enters the new maximum forest.
inline SuiteResult marginal_gain_indicator(std::uint64_t seed, std::size_t trials = 1000) {
  SuiteResult r{"lemma4"};
  Rng rng(seed);
  while (r.passed + r.failed < trials) {
    const Graph g = random_small_graph(rng, 2, 9, 36);
    auto base = random_edge_subset(rng, g.num_edges());
    std::vector<EdgeIndex> outside;
    for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
      if (!std::binary_search(base.begin(), base.end(), e)) outside.push_back(e);
    }
    if (outside.empty()) continue;
    const EdgeIndex e = outside[static_cast<std::size_t>(rng.below(outside.size()))];
    const MarginalGain mg = marginal_gain(g, base, e);
    const bool ok = (mg.gain == 0 || mg.gain == 1) && (mg.gain == 1) == mg.with_edge.contains(e);
    r.record(ok, [&] { return describe(g) + " edge " + std::to_string(e) + " gain " + std::to_string(mg.gain); });
  }
  return r;
}

// Marginal gains shrink as the support grows.
inline SuiteResult marginal_gain_submodular(std::uint64_t seed, std::size_t trials = 1000) {
  SuiteResult r{"lemma5"};
  Rng rng(seed);
  while (r.passed + r.failed < trials) {
    const Graph g = random_small_graph(rng, 2, 9, 36);
    const auto big = random_edge_subset(rng, g.num_edges());
    std::vector<EdgeIndex> small;
    for (EdgeIndex e : big) {
      if (rng.below(2)) small.push_back(e);
    }
    std::vector<EdgeIndex> outside;
    for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
      if (!std::binary_search(big.begin(), big.end(), e)) outside.push_back(e);
    }
    if (outside.empty()) continue;
    const EdgeIndex e = outside[static_cast<std::size_t>(rng.below(outside.size()))];
    const int ga = marginal_gain(g, small, e).gain;
    const int gb = marginal_gain(g, big, e).gain;
    r.record(ga >= gb, [&] { return describe(g) + " edge " + std::to_string(e); });
  }
  return r;
}

inline SuiteResult mediant_bounds_suite(std::uint64_t seed, std::size_t trials = 1000) {
  SuiteResult r{"mediant"};
  Rng rng(seed);
  for (std::size_t i = 0; i < trials; ++i) {
    std::vector<Fraction> parts(static_cast<std::size_t>(rng.between(1, 8)));
    for (auto& f : parts) {
      f.numerator = Rational(rng.between(0, 1000), rng.between(1, 1000));
      f.denominator = Rational(rng.between(1, 1000), rng.between(1, 1000));
    }
    const MediantBounds b = mediant_bounds(parts);
    r.record(b.holds(), [&] { return "mediant " + to_string(b.mediant) + " outside [" + to_string(b.min_ratio) + ", " + to_string(b.max_ratio) + "]"; });
  }
  return r;
}

// Closed form of t_w/u on the gap construction, and the ratio dropping below
// a target once kappa is large.
inline SuiteResult gap_construction(std::uint64_t seed, std::size_t trials = 40) {
  SuiteResult r{"theorem1"};
  Rng rng(seed);
  for (std::size_t i = 0; i < trials; ++i) {
    const auto kappa = static_cast<Vertex>(rng.between(2, 30));
    const auto t = static_cast<Vertex>(rng.between(1, 200));
    const GapInstance gap = gen_gap(kappa, t, rng.next());
    const Rational got = weighting_ratio(gap.graph, gap.weights) / uniform_ratio(gap.graph);
    const std::int64_t k = kappa;
    const Rational closed = Rational(2, k) * Rational(k * (k - 1) / 2 + t, k - 1 + t);
    r.record(got == closed, [&] { return "kappa=" + std::to_string(kappa) + " t=" + std::to_string(t) + ": " + to_string(got) + " != " + to_string(closed); });
  }
  for (const auto& [eps_num, eps_den] : std::vector<std::pair<int, int>>{{1, 10}, {1, 50}, {1, 200}}) {
    // (2/k) * ((k^2-k)/2 + k^2) / (k - 1 + k^2) < 3/k, so k >= 3/eps suffices.
    const auto kappa = static_cast<Vertex>(3 * eps_den / eps_num + 1);
    const GapInstance gap = gen_gap(kappa, kappa * kappa, seed);
    const Rational got = weighting_ratio(gap.graph, gap.weights) / uniform_ratio(gap.graph);
    r.record(got < Rational(eps_num, eps_den), [&] { return "kappa=" + std::to_string(kappa) + " gives " + to_string(got); });
  }
  return r;
}

// Flow solver, subset enumeration and 0-1 weighting enumeration agree.
inline SuiteResult oracle_agreement(std::uint64_t seed, std::size_t trials = 100) {
  SuiteResult r{"theorem3"};
  Rng rng(seed);
  for (std::size_t i = 0; i < trials; ++i) {
    const Graph g = random_small_graph(rng, 2, 10, kDefaultBruteEdgeCap);
    const RatioSolution flow = solve_min_ratio(g);
    const RatioSolution subsets = brute_min_ratio(g);
    const RatioSolution weightings = brute_weighting_min(g);
    bool ok = flow.value == subsets.value && subsets.value == weightings.value;
    if (ok) {
      validate_solution(g, flow);
      ok = weighting_ratio(g, optimal_weighting(g, flow)) == flow.value;
    }
    r.record(ok, [&] { return describe(g) + ": flow " + to_string(flow.value) + ", subsets " + to_string(subsets.value) + ", weightings " + to_string(weightings.value); });
  }
  return r;
}

inline Graph complete_bipartite(Vertex a, Vertex b) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  }
  return Graph::build(a + b, edges);
}

// Chordal graphs get a clique tree whose leaves own a private vertex; small
// non-chordal graphs admit no tree under any selection order.
inline SuiteResult clique_trees(std::uint64_t seed, std::size_t trials = 200) {
  SuiteResult r{"theorem4"};
  Rng rng(seed);
  for (std::size_t i = 0; i < trials; ++i) {
    const auto n = static_cast<Vertex>(rng.between(2, 60));
    const auto kmax = static_cast<Vertex>(rng.between(2, std::min<Vertex>(n, 8)));
    const Graph g = gen_random_chordal(n, kmax, rng.next());
    const CliqueGraph cg = chordal_clique_tree(g);
    const bool ok = cg.is_tree() && cg.links.size() + 1 == cg.cliques.size() && leaves_have_private_vertex(cg);
    r.record(ok, [&] { return describe(g); });
  }
  for (const Graph& g : {gen_cycle(4), gen_cycle(5), complete_bipartite(2, 3)}) {
    r.record(!has_tree_clique_graph(g), [&] { return "tree clique graph found for " + describe(g); });
  }
  std::size_t checked = 0;
  for (std::size_t guard = 0; checked < std::max<std::size_t>(trials / 4, 1) && guard < 50 * trials; ++guard) {
    const Graph g = random_small_graph(rng, 4, 7, 12);
    if (is_chordal(g)) continue;
    const auto cliques = maximal_cliques(g);
    if (cliques.size() > 5) continue;
    ++checked;
    r.record(!has_tree_clique_graph(g), [&] { return "tree clique graph found for non-chordal " + describe(g); });
  }
  return r;
}

// Bounds on chordal optima for every instance; the structural properties for
// some optimal subset on small instances.
inline SuiteResult chordal_optima(std::uint64_t seed, std::size_t trials = 200) {
  SuiteResult r{"theorem5"};
  Rng rng(seed);
  for (std::size_t i = 0; i < trials; ++i) {
    const auto n = static_cast<Vertex>(rng.between(2, 40));
    const auto kmax = static_cast<Vertex>(rng.between(2, std::min<Vertex>(n, 7)));
    const Graph g = gen_random_chordal(n, kmax, rng.next());
    const RatioSolution sol = solve_min_ratio(g);
    const StructureReport rep = verify_chordal_optimum(g, sol);
    bool ok = rep.bounds_ok;
    if (n <= 12) ok = ok && rep.some_optimum_conforms.value_or(false);
    r.record(ok, [&] {
      std::string why = describe(g) + " value " + to_string(sol.value) + " s=" + std::to_string(rep.s);
      for (const auto& f : rep.failures) why += "; " + f;
      return why;
    });
  }
  return r;
}

inline SuiteResult complete_graphs(std::uint64_t /*seed*/, std::size_t trials = 10) {
  SuiteResult r{"corollary-complete"};
  for (Vertex kappa = 3; kappa < 3 + static_cast<Vertex>(trials); ++kappa) {
    const Graph g = gen_complete(kappa);
    const RatioSolution sol = solve_min_ratio(g);
    const bool ok = sol.value == Rational(2, kappa) && sol.subset == VertexSet::range(kappa) &&
                    static_cast<EdgeIndex>(sol.support.size()) == g.num_edges();
    r.record(ok, [&] { return "K_" + std::to_string(kappa) + " gives " + to_string(sol.value); });
  }
  return r;
}

using SuiteFn = SuiteResult (*)(std::uint64_t, std::size_t);

struct SuiteEntry {
  SuiteFn run;
  std::size_t default_trials;
};

inline const std::map<std::string, SuiteEntry>& suites() {
  static const std::map<std::string, SuiteEntry> table = {
      {"lemma4", {&marginal_gain_indicator, 1000}},
      {"lemma5", {&marginal_gain_submodular, 1000}},
      {"mediant", {&mediant_bounds_suite, 1000}},
      {"theorem1", {&gap_construction, 40}},
      {"theorem3", {&oracle_agreement, 100}},
      {"theorem4", {&clique_trees, 200}},
      {"theorem5", {&chordal_optima, 200}},
      {"corollary-complete", {&complete_graphs, 10}},
  };
  return table;
}

inline std::optional<SuiteResult> run_suite(const std::string& name, std::uint64_t seed,
                                            std::optional<std::size_t> trials = std::nullopt) {
  const auto& table = suites();
  const auto it = table.find(name);
  if (it == table.end()) return std::nullopt;
  return it->second.run(seed, trials.value_or(it->second.default_trials));
}

}  // namespace mwr::verify
