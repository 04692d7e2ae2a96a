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

// Text graph files and JSON solution documents.
//
// Graph file:
//   # comment
//   p <n> <m>
//   e <u> <v> [<w>]      (m lines, vertices 1-indexed)
// Weights are nonnegative integers, decimals ("0.25") or fractions ("1/3").
// Either every edge line carries a weight or none does.

#pragma once

#include <cctype>
#include <cstdint>
#include <limits>
#include <numeric>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "mwr/errors.hpp"
#include "mwr/graph.hpp"
#include "mwr/max_spanning.hpp"
#include "mwr/ratio_opt.hpp"
#include "mwr/rational.hpp"

namespace mwr {

struct ParsedGraph {
  Graph graph;
  std::optional<WeightFn> weights;
};

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] inline void parse_fail(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::kParseError, "line " + std::to_string(line) + ": " + what);
}

inline std::int64_t parse_count(std::string_view tok, std::size_t line) {
  if (!all_digits(tok) || tok.size() > 12) parse_fail(line, "expected a nonnegative integer, got '" + std::string(tok) + "'");
  return std::stoll(std::string(tok));
}

}  // namespace detail

// Exact value of "12", "0.125" or "3/4".
inline std::optional<Rational> parse_weight(std::string_view tok) {
  if (const auto slash = tok.find('/'); slash != std::string_view::npos) {
    const auto num = tok.substr(0, slash);
    const auto den = tok.substr(slash + 1);
    if (!detail::all_digits(num) || !detail::all_digits(den)) return std::nullopt;
    const BigInt d{std::string(den)};
    if (d == 0) return std::nullopt;
    return Rational(BigInt(std::string(num)), d);
  }
  if (const auto dot = tok.find('.'); dot != std::string_view::npos) {
    const auto whole = tok.substr(0, dot);
    const auto frac = tok.substr(dot + 1);
    if ((!whole.empty() && !detail::all_digits(whole)) || !detail::all_digits(frac)) return std::nullopt;
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const BigInt w = whole.empty() ? BigInt(0) : BigInt(std::string(whole));
    return Rational(w * scale + BigInt(std::string(frac)), scale);
  }
  if (!detail::all_digits(tok)) return std::nullopt;
  return Rational(BigInt(std::string(tok)));
}

inline ParsedGraph parse_graph(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::optional<std::pair<std::int64_t, std::int64_t>> header;
  std::vector<std::pair<Vertex, Vertex>> raw;
  std::vector<Rational> raw_weights;
  std::optional<bool> weighted;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty() || tok[0][0] == '#') continue;
    if (tok[0] == "p") {
      if (header) detail::parse_fail(lineno, "duplicate header");
      if (tok.size() != 3) detail::parse_fail(lineno, "header must be 'p <n> <m>'");
      header = {detail::parse_count(tok[1], lineno), detail::parse_count(tok[2], lineno)};
      if (header->first > (std::int64_t{1} << 30)) detail::parse_fail(lineno, "vertex count too large");
      continue;
    }
    if (tok[0] == "e") {
      if (!header) detail::parse_fail(lineno, "edge line before header");
      if (tok.size() != 3 && tok.size() != 4) detail::parse_fail(lineno, "edge line must be 'e <u> <v> [<w>]'");
      const bool has_w = tok.size() == 4;
      if (weighted && *weighted != has_w) detail::parse_fail(lineno, "weights must be given on all edge lines or none");
      weighted = has_w;
      const auto u = detail::parse_count(tok[1], lineno);
      const auto v = detail::parse_count(tok[2], lineno);
      for (auto x : {u, v}) {
        if (x < 1 || x > header->first) {
          throw Error(ErrorCode::kOutOfRange, "line " + std::to_string(lineno) + ": vertex " +
                                                  std::to_string(x) + " outside [1, " +
                                                  std::to_string(header->first) + "]");
        }
      }
      if (u == v) throw Error(ErrorCode::kInvalidEdge, "line " + std::to_string(lineno) + ": loop at vertex " + std::to_string(u));
      raw.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
      if (has_w) {
        auto w = parse_weight(tok[3]);
        if (!w) detail::parse_fail(lineno, "bad weight '" + tok[3] + "'");
        raw_weights.push_back(std::move(*w));
      }
      continue;
    }
    detail::parse_fail(lineno, "unrecognized line '" + line + "'");
  }
  if (!header) throw Error(ErrorCode::kParseError, "missing 'p <n> <m>' header");
  if (static_cast<std::int64_t>(raw.size()) != header->second) {
    throw Error(ErrorCode::kParseError, "header announces " + std::to_string(header->second) +
                                            " edges, found " + std::to_string(raw.size()));
  }
  ParsedGraph out;
  out.graph = Graph::build(static_cast<Vertex>(header->first), raw);
  if (weighted.value_or(false)) {
    if (out.graph.num_edges() != static_cast<EdgeIndex>(raw.size())) {
      throw Error(ErrorCode::kParseError, "duplicate edge in a weighted file");
    }
    std::vector<Rational> values(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
      const EdgeIndex e = *out.graph.edge_index(raw[i].first, raw[i].second);
      values[static_cast<std::size_t>(e)] = raw_weights[i];
    }
    out.weights = WeightFn::general(std::move(values));
  }
  return out;
}

inline ParsedGraph parse_graph_string(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

// Canonical edge order, 1-indexed vertices.
inline std::string serialize_graph(const Graph& g, const WeightFn* weights = nullptr,
                                   const std::vector<std::string>& comments = {}) {
  if (weights != nullptr && weights->size() != static_cast<std::size_t>(g.num_edges())) {
    throw Error(ErrorCode::kShapeMismatch, "weight count does not match edge count");
  }
  std::ostringstream out;
  for (const auto& c : comments) out << "# " << c << '\n';
  out << "p " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    out << "e " << ed.u + 1 << ' ' << ed.v + 1;
    if (weights != nullptr) out << ' ' << to_string((*weights)[e]);
    out << '\n';
  }
  return out.str();
}

// Numbers are emitted as JSON integers when they fit in 64 bits and as
// decimal strings otherwise.
inline nlohmann::json big_to_json(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(x);
  }
  return x.str();
}

inline nlohmann::json solution_to_json(const Graph& g, const RatioSolution& sol,
                                       std::optional<std::uint64_t> seed = std::nullopt) {
  nlohmann::json doc;
  doc["ratio"] = {{"num", big_to_json(numerator_of(sol.value))}, {"den", big_to_json(denominator_of(sol.value))}};
  nlohmann::json subset = nlohmann::json::array();
  for (Vertex v : sol.subset) subset.push_back(v + 1);
  doc["subset"] = subset;
  nlohmann::json support = nlohmann::json::array();
  for (EdgeIndex e : sol.support) support.push_back({g.edge(e).u + 1, g.edge(e).v + 1});
  doc["support_edges"] = support;
  doc["method"] = std::string(method_name(sol.method));
  doc["iterations"] = sol.iterations;
  doc["graph"] = {{"n", g.num_vertices()}, {"m", g.num_edges()}};
  if (seed) doc["seed"] = *seed;
  return doc;
}

// Checks a solution document against the schema and against g: lowest-terms
// ratio, sorted 1-indexed subset, support_edges exactly the induced edges.
inline void validate_solution_json(const Graph& g, const nlohmann::json& doc) {
  auto fail = [](const std::string& what) { throw Error(ErrorCode::kInvalidSolution, what); };
  for (const char* key : {"ratio", "subset", "support_edges", "method", "iterations", "graph"}) {
    if (!doc.contains(key)) fail(std::string("missing key '") + key + "'");
  }
  if (!doc["ratio"]["num"].is_number_integer() || !doc["ratio"]["den"].is_number_integer()) {
    fail("ratio must have integer num and den");
  }
  const std::int64_t num = doc["ratio"]["num"];
  const std::int64_t den = doc["ratio"]["den"];
  if (den <= 0 || std::gcd(num, den) != 1) fail("ratio is not in lowest terms");
  if (doc["graph"]["n"] != g.num_vertices() || doc["graph"]["m"] != g.num_edges()) fail("graph size mismatch");
  std::vector<Vertex> subset;
  for (const auto& v : doc["subset"]) {
    const auto x = v.get<std::int64_t>();
    if (x < 1 || x > g.num_vertices()) fail("subset vertex out of range");
    subset.push_back(static_cast<Vertex>(x - 1));
  }
  if (!std::is_sorted(subset.begin(), subset.end()) ||
      std::adjacent_find(subset.begin(), subset.end()) != subset.end()) {
    fail("subset must be strictly increasing");
  }
  const VertexSet s(subset);
  std::vector<std::pair<std::int64_t, std::int64_t>> expected;
  for (EdgeIndex e : edges_within(g, s)) expected.emplace_back(g.edge(e).u + 1, g.edge(e).v + 1);
  std::vector<std::pair<std::int64_t, std::int64_t>> got;
  for (const auto& pair : doc["support_edges"]) got.emplace_back(pair.at(0).get<std::int64_t>(), pair.at(1).get<std::int64_t>());
  if (got != expected) fail("support_edges differ from the edges induced by subset");
  if (subset.size() < 2 || expected.empty()) fail("subset must span at least one edge");
  if (Rational(num, den) != Rational(static_cast<std::int64_t>(subset.size()) - 1,
                                     static_cast<std::int64_t>(expected.size()))) {
    fail("ratio does not match (|subset| - 1) / |support_edges|");
  }
}

}  // namespace mwr
