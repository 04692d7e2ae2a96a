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

// The `mwr` command line. Exit codes: 0 success, 1 verification failure,
// 2 usage, parse or precondition error.

#pragma once

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mwr/chordal.hpp"
#include "mwr/errors.hpp"
#include "mwr/generators.hpp"
#include "mwr/graph.hpp"
#include "mwr/io.hpp"
#include "mwr/max_spanning.hpp"
#include "mwr/ratio_opt.hpp"
#include "mwr/rational.hpp"
#include "mwr/verify.hpp"

namespace mwr::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

namespace detail {

inline ParsedGraph load(const std::string& path) {
  if (path == "-") return parse_graph(std::cin);
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + path);
  return parse_graph(in);
}

inline std::string edge_str(const Graph& g, EdgeIndex e) {
  return std::to_string(g.edge(e).u + 1) + "-" + std::to_string(g.edge(e).v + 1);
}

inline std::string set_str(const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  for (Vertex v : s) {
    if (!first) out += ' ';
    out += std::to_string(v + 1);
    first = false;
  }
  return out + "}";
}

inline int cmd_mst(const std::string& path, std::ostream& out) {
  const ParsedGraph pg = load(path);
  if (!pg.weights) throw Error(ErrorCode::kParseError, "mst needs a weighted graph file");
  const SpanningResult r = max_spanning_forest(pg.graph, *pg.weights);
  out << "weight " << to_string(r.total_weight) << '\n';
  out << "spanning_tree " << (r.is_spanning_tree ? "yes" : "no") << '\n';
  for (EdgeIndex e : r.tree_edges) out << "e " << edge_str(pg.graph, e) << ' ' << to_string((*pg.weights)[e]) << '\n';
  return kExitOk;
}

inline int cmd_ratio(const std::string& path, std::ostream& out) {
  const ParsedGraph pg = load(path);
  const WeightFn w = pg.weights ? *pg.weights : WeightFn::all_ones(pg.graph.num_edges());
  out << "t_w " << to_string(weighting_ratio(pg.graph, w)) << '\n';
  out << "u " << to_string(uniform_ratio(pg.graph)) << '\n';
  return kExitOk;
}

inline SolveChoice parse_choice(const std::string& method) {
  if (method == "auto") return SolveChoice::kAuto;
  if (method == "flow") return SolveChoice::kFlow;
  if (method == "brute") return SolveChoice::kBrute;
  return SolveChoice::kBruteWeightings;
}

inline int cmd_solve(const std::string& path, const std::string& method, bool json, std::ostream& out) {
  const ParsedGraph pg = load(path);
  const Graph& g = pg.graph;
  const RatioSolution sol = solve(g, parse_choice(method));
  validate_solution(g, sol);
  if (json) {
    out << solution_to_json(g, sol).dump() << '\n';
    return kExitOk;
  }
  out << "ratio " << to_string(sol.value) << '\n';
  out << "density " << to_string(sol.density()) << '\n';
  out << "subset " << set_str(sol.subset) << '\n';
  out << "support";
  for (EdgeIndex e : sol.support) out << ' ' << edge_str(g, e);
  out << '\n';
  out << "method " << method_name(sol.method) << '\n';
  out << "iterations " << sol.iterations << '\n';
  return kExitOk;
}

inline int cmd_chordal(const std::string& path, bool tree, bool verify_optimum, std::ostream& out) {
  const ParsedGraph pg = load(path);
  const Graph& g = pg.graph;
  const bool chordal = is_chordal(g);
  out << "chordal " << (chordal ? "yes" : "no") << '\n';
  const auto cliques = maximal_cliques(g);
  std::size_t s = 0;
  for (const auto& c : cliques) s = std::max(s, c.size());
  out << "clique_number " << s << '\n';
  out << "maximal_cliques " << cliques.size() << '\n';
  for (const auto& c : cliques) out << "  " << set_str(c) << '\n';
  if (tree) {
    if (!chordal) throw Error(ErrorCode::kNotChordal, "no clique tree for a non-chordal graph");
    const CliqueGraph cg = chordal_clique_tree(g);
    out << "clique_tree\n";
    for (const auto& [a, b] : cg.links) out << "  " << set_str(cg.cliques[static_cast<std::size_t>(a)]) << " -- " << set_str(cg.cliques[static_cast<std::size_t>(b)]) << '\n';
    out << "leaves_private " << (leaves_have_private_vertex(cg) ? "yes" : "no") << '\n';
  }
  if (!verify_optimum) return kExitOk;
  const RatioSolution sol = solve_min_ratio(g);
  const StructureReport rep = verify_chordal_optimum(g, sol);
  out << "optimum " << to_string(rep.value) << " subset " << set_str(sol.subset) << '\n';
  out << "bounds " << (rep.bounds_ok ? "ok" : "violated") << (rep.lower_bound_vacuous ? " (lower bound vacuous)" : "") << '\n';
  out << "F_connected_chordal " << (rep.is_connected_chordal_F ? "yes" : "no") << '\n';
  out << "leaf_cliques_maximal " << (rep.leaf_cliques_maximal_in_G ? "yes" : "no") << '\n';
  out << "min_degree " << (rep.min_degree_ok ? "ok" : "low") << '\n';
  if (rep.some_optimum_conforms) {
    out << "some_optimum_conforms " << (*rep.some_optimum_conforms ? "yes" : "no");
    if (rep.conforming_subset) out << ' ' << set_str(*rep.conforming_subset);
    out << '\n';
  }
  for (const auto& f : rep.failures) out << "failure " << f << '\n';
  out << "report " << (rep.ok() ? "ok" : "failed") << '\n';
  return rep.ok() ? kExitOk : kExitFailure;
}

inline int cmd_gen(const std::string& family, GenSpec spec, const std::string& output, std::ostream& out) {
  const auto fam = parse_family(family);
  if (!fam) throw Error(ErrorCode::kInvalidSpec, "unknown family " + family);
  spec.family = *fam;
  const Generated gen = generate(spec);
  const std::vector<std::string> comments = {"mwr gen " + family + " seed " + std::to_string(spec.seed)};
  const std::string text = serialize_graph(gen.graph, gen.weights ? &*gen.weights : nullptr, comments);
  if (output.empty() || output == "-") {
    out << text;
    return kExitOk;
  }
  std::ofstream f(output);
  if (!f) throw Error(ErrorCode::kInvalidSpec, "cannot write " + output);
  f << text;
  return kExitOk;
}

inline int cmd_verify(const std::string& suite, std::uint64_t seed, std::optional<std::size_t> trials,
                      std::ostream& out, std::ostream& err) {
  std::vector<std::string> names;
  if (suite == "all") {
    for (const auto& [name, entry] : verify::suites()) names.push_back(name);
  } else {
    names.push_back(suite);
  }
  bool all_ok = true;
  for (const auto& name : names) {
    const auto result = verify::run_suite(name, seed, trials);
    if (!result) {
      err << "error: unknown suite " << name << '\n';
      return kExitUsage;
    }
    out << name << ": passed " << result->passed << ", failed " << result->failed << " (seed " << seed << ")\n";
    for (const auto& f : result->failures) out << "  " << f << '\n';
    all_ok = all_ok && result->ok();
  }
  return all_ok ? kExitOk : kExitFailure;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimum weighting ratio of graphs and chordal graph tools"};
  app.require_subcommand(1);

  std::string file;
  auto* mst = app.add_subcommand("mst", "Maximum spanning tree of a weighted graph");
  mst->add_option("file", file, "graph file")->required();

  auto* ratio = app.add_subcommand("ratio", "Weighting ratio of the given weights and the uniform ratio");
  ratio->add_option("file", file, "graph file")->required();

  std::string method = "auto";
  bool json = false;
  auto* solve_cmd = app.add_subcommand("solve", "Minimum weighting ratio with witness subset");
  solve_cmd->add_option("file", file, "graph file")->required();
  solve_cmd->add_option("--method", method, "auto, flow, brute or brute-weightings")
      ->check(CLI::IsMember({"auto", "flow", "brute", "brute-weightings"}));
  solve_cmd->add_flag("--json", json, "print a JSON solution document");

  bool clique_tree = false;
  bool verify_optimum = false;
  auto* chordal = app.add_subcommand("chordal", "Chordality, maximal cliques and clique tree");
  chordal->add_option("file", file, "graph file")->required();
  chordal->add_flag("--clique-tree", clique_tree, "print a clique tree");
  chordal->add_flag("--verify-optimum", verify_optimum, "check the structure of the optimal subset");

  std::string family;
  std::string output;
  GenSpec spec;
  auto* gen = app.add_subcommand("gen", "Generate a graph file");
  gen->add_option("family", family, "complete, gap, random-connected or random-chordal")->required();
  gen->add_option("--kappa", spec.kappa, "clique size");
  gen->add_option("--t", spec.t, "tree size for gap");
  gen->add_option("--n", spec.n, "vertex count");
  gen->add_option("--m", spec.m, "edge count");
  gen->add_option("--kmax", spec.kmax, "clique size bound");
  gen->add_option("--seed", spec.seed, "random seed");
  gen->add_option("-o,--output", output, "output file");

  std::string suite;
  std::uint64_t seed = 1;
  std::optional<std::size_t> trials;
  auto* verify_cmd = app.add_subcommand("verify", "Run a property suite");
  verify_cmd->add_option("suite", suite, "lemma4, lemma5, mediant, theorem1, theorem3, theorem4, theorem5, corollary-complete or all")
      ->required();
  verify_cmd->add_option("--seed", seed, "random seed");
  verify_cmd->add_option("--trials", trials, "trial count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*mst) return detail::cmd_mst(file, out);
    if (*ratio) return detail::cmd_ratio(file, out);
    if (*solve_cmd) return detail::cmd_solve(file, method, json, out);
    if (*chordal) return detail::cmd_chordal(file, clique_tree, verify_optimum, out);
    if (*gen) return detail::cmd_gen(family, spec, output, out);
    if (*verify_cmd) return detail::cmd_verify(suite, seed, trials, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace mwr::cli
