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
#include <functional>
#include <iterator>
#include <list>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mwr/errors.hpp"
#include "mwr/graph.hpp"
#include "mwr/max_spanning.hpp"
#include "mwr/ratio_opt.hpp"
#include "mwr/rational.hpp"

namespace mwr {

struct EliminationOrder {
  std::vector<Vertex> order;
};

// Lexicographic breadth-first search by partition refinement. Among vertices
// with equal labels the smallest index is visited first. Returns the visit
// order; its reverse is a perfect elimination order iff G is chordal.
inline EliminationOrder lex_bfs(const Graph& g, Vertex start = 0) {
  const Vertex n = g.num_vertices();
  EliminationOrder out;
  if (n == 0) return out;
  if (start < 0 || start >= n) throw Error(ErrorCode::kOutOfRange, "start vertex " + std::to_string(start));

  struct Cell {
    std::set<Vertex> members;
    int stamp = -1;
    std::list<Cell>::iterator split;
  };
  std::list<Cell> cells;  // front holds the lexicographically largest label
  std::vector<std::list<Cell>::iterator> cell_of(static_cast<std::size_t>(n));
  std::vector<char> visited(static_cast<std::size_t>(n), 0);
  cells.emplace_back();
  for (Vertex v = 0; v < n; ++v) {
    cells.front().members.insert(v);
    cell_of[static_cast<std::size_t>(v)] = cells.begin();
  }
  out.order.reserve(static_cast<std::size_t>(n));
  for (int step = 0; step < n; ++step) {
    const Vertex v = step == 0 ? start : *cells.front().members.begin();
    auto home = cell_of[static_cast<std::size_t>(v)];
    home->members.erase(v);
    if (home->members.empty()) cells.erase(home);
    visited[static_cast<std::size_t>(v)] = 1;
    out.order.push_back(v);
    std::vector<std::list<Cell>::iterator> touched;
    for (Vertex w : g.neighbors(v)) {
      if (visited[static_cast<std::size_t>(w)]) continue;
      auto c = cell_of[static_cast<std::size_t>(w)];
      if (c->stamp != step) {
        c->stamp = step;
        c->split = cells.insert(c, Cell{});
        touched.push_back(c);
      }
      c->members.erase(w);
      c->split->members.insert(w);
      cell_of[static_cast<std::size_t>(w)] = c->split;
    }
    for (auto c : touched) {
      if (c->members.empty()) cells.erase(c);
    }
  }
  return out;
}

// True iff, for every v, the neighbors of v that come later in the order form
// a clique. Uses the parent test: later(v) minus its first vertex u must be
// adjacent to u.
inline bool check_peo(const Graph& g, const EliminationOrder& order) {
  const auto n = static_cast<std::size_t>(g.num_vertices());
  if (order.order.size() != n) throw Error(ErrorCode::kInvalidOrder, "order is not a permutation");
  std::vector<std::int64_t> pos(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex v = order.order[i];
    if (v < 0 || static_cast<std::size_t>(v) >= n || pos[static_cast<std::size_t>(v)] >= 0) {
      throw Error(ErrorCode::kInvalidOrder, "order is not a permutation");
    }
    pos[static_cast<std::size_t>(v)] = static_cast<std::int64_t>(i);
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const auto pv = pos[static_cast<std::size_t>(v)];
    Vertex parent = -1;
    for (Vertex w : g.neighbors(v)) {
      const auto pw = pos[static_cast<std::size_t>(w)];
      if (pw > pv && (parent < 0 || pw < pos[static_cast<std::size_t>(parent)])) parent = w;
    }
    if (parent < 0) continue;
    for (Vertex w : g.neighbors(v)) {
      if (w == parent || pos[static_cast<std::size_t>(w)] <= pv) continue;
      if (!g.adjacent(parent, w)) return false;
    }
  }
  return true;
}

inline EliminationOrder reversed(EliminationOrder order) {
  std::reverse(order.order.begin(), order.order.end());
  return order;
}

inline bool is_chordal(const Graph& g) {
  if (g.num_vertices() == 0) return true;
  return check_peo(g, reversed(lex_bfs(g, 0)));
}

inline constexpr std::size_t kDefaultCliqueCap = 100000;

namespace detail {

// Maximal cliques of a chordal graph from a perfect elimination order: each is
// {v} + later(v) for some v, and a candidate is dropped when an earlier
// neighbor's candidate contains it.
inline std::vector<VertexSet> chordal_maximal_cliques(const Graph& g, const EliminationOrder& peo) {
  const auto n = static_cast<std::size_t>(g.num_vertices());
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[static_cast<std::size_t>(peo.order[i])] = i;
  std::vector<std::vector<Vertex>> cand(n);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    auto& c = cand[static_cast<std::size_t>(v)];
    c.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      if (pos[static_cast<std::size_t>(w)] > pos[static_cast<std::size_t>(v)]) c.push_back(w);
    }
    std::sort(c.begin(), c.end());
  }
  std::vector<VertexSet> out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const auto& c = cand[static_cast<std::size_t>(v)];
    bool maximal = true;
    for (Vertex u : g.neighbors(v)) {
      const auto& cu = cand[static_cast<std::size_t>(u)];
      if (pos[static_cast<std::size_t>(u)] < pos[static_cast<std::size_t>(v)] && cu.size() > c.size() &&
          std::includes(cu.begin(), cu.end(), c.begin(), c.end())) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.emplace_back(c);
  }
  return out;
}

// Bron-Kerbosch with Tomita pivoting over sorted vertex vectors.
class CliqueEnumerator {
 public:
  CliqueEnumerator(std::function<std::vector<Vertex>(Vertex)> neighbors, std::size_t cap)
      : neighbors_(std::move(neighbors)), cap_(cap) {}

  std::vector<VertexSet> run(std::vector<Vertex> vertices) {
    std::sort(vertices.begin(), vertices.end());
    std::vector<Vertex> r;
    expand(r, vertices, {});
    return std::move(found_);
  }

 private:
  static std::vector<Vertex> intersect(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    std::vector<Vertex> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  }

  void expand(std::vector<Vertex>& r, std::vector<Vertex> p, std::vector<Vertex> x) {
    if (p.empty()) {
      if (x.empty()) {
        if (found_.size() >= cap_) {
          throw Error(ErrorCode::kTooManyCliques,
                      "more than " + std::to_string(cap_) + " maximal cliques");
        }
        found_.emplace_back(r);
      }
      return;
    }
    Vertex pivot = p.front();
    std::size_t best = 0;
    for (const auto* pool : {&p, &x}) {
      for (Vertex u : *pool) {
        const auto hits = intersect(p, neighbors_(u)).size();
        if (hits > best || (hits == best && u < pivot)) {
          best = hits;
          pivot = u;
        }
      }
    }
    const auto pivot_nb = neighbors_(pivot);
    std::vector<Vertex> branch;
    std::set_difference(p.begin(), p.end(), pivot_nb.begin(), pivot_nb.end(),
                        std::back_inserter(branch));
    for (Vertex v : branch) {
      const auto nb = neighbors_(v);
      r.push_back(v);
      expand(r, intersect(p, nb), intersect(x, nb));
      r.pop_back();
      p.erase(std::lower_bound(p.begin(), p.end(), v));
      x.insert(std::lower_bound(x.begin(), x.end(), v), v);
    }
  }

  std::function<std::vector<Vertex>(Vertex)> neighbors_;
  std::size_t cap_;
  std::vector<VertexSet> found_;
};

}  // namespace detail

// All maximal cliques, sorted lexicographically. Chordal graphs go through a
// perfect elimination order (at most n cliques); other graphs through
// Bron-Kerbosch, which stops with TooManyCliques past cap.
inline std::vector<VertexSet> maximal_cliques(const Graph& g, std::size_t cap = kDefaultCliqueCap) {
  std::vector<VertexSet> out;
  if (g.num_vertices() == 0) return out;
  const EliminationOrder peo = reversed(lex_bfs(g, 0));
  if (check_peo(g, peo)) {
    out = detail::chordal_maximal_cliques(g, peo);
    if (out.size() > cap) {
      throw Error(ErrorCode::kTooManyCliques, "more than " + std::to_string(cap) + " maximal cliques");
    }
  } else {
    detail::CliqueEnumerator en(
        [&](Vertex v) {
          const auto nb = g.neighbors(v);
          return std::vector<Vertex>(nb.begin(), nb.end());
        },
        cap);
    const VertexSet all = VertexSet::range(g.num_vertices());
    out = en.run(std::vector<Vertex>(all.begin(), all.end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}


inline std::size_t clique_number(const Graph& g, std::size_t cap = kDefaultCliqueCap) {
  std::size_t best = 0;
  for (const VertexSet& c : maximal_cliques(g, cap)) best = std::max(best, c.size());
  return best;
}

// A clique graph produced by the incremental covering procedure: cliques are
// added one at a time; a new clique C meeting the covered subgraph G' is
// linked, for every maximal clique S of G'[V(C) & V(G')], to one maximal
// clique of G that contains S.
struct CliqueGraph {
  std::vector<VertexSet> cliques;            // all maximal cliques of G; ids index this list
  std::vector<int> selection_order;          // clique ids in the order they were added
  std::vector<std::pair<int, int>> links;    // (added clique, covering clique)

  // Clique ids that appear as nodes, ascending.
  std::vector<int> nodes() const {
    std::vector<int> out(selection_order.begin(), selection_order.end());
    for (const auto& [a, b] : links) {
      out.push_back(a);
      out.push_back(b);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::size_t degree(int id) const {
    std::size_t d = 0;
    for (const auto& [a, b] : links) d += static_cast<std::size_t>(a == id) + static_cast<std::size_t>(b == id);
    return d;
  }

  // Every maximal clique is a node and the links form a spanning tree on them
  // (parallel links count as a cycle).
  bool is_tree() const {
    const auto ns = nodes();
    if (ns.size() != cliques.size() || links.size() + 1 != ns.size()) return false;
    UnionFind uf(cliques.size());
    for (const auto& [a, b] : links) {
      if (!uf.unite(static_cast<std::size_t>(a), static_cast<std::size_t>(b))) return false;
    }
    return true;
  }

  // Nodes of degree at most one.
  std::vector<int> leaves() const {
    std::vector<int> out;
    for (int id : nodes()) {
      if (degree(id) <= 1) out.push_back(id);
    }
    return out;
  }
};

enum class CoveringChoice {
  // Prefer the earliest-added clique containing the piece; when no added
  // clique contains it, the smallest-id clique not added yet.
  kEarliestSelected,
};

namespace detail {

class CliqueGraphBuilder {
 public:
  CliqueGraphBuilder(const Graph& g, std::vector<VertexSet> cliques)
      : g_(&g),
        vin_(static_cast<std::size_t>(g.num_vertices()), 0),
        ein_(static_cast<std::size_t>(g.num_edges()), 0),
        pos_(cliques.size(), -1) {
    result_.cliques = std::move(cliques);
  }

  bool done() const {
    return covered_vertices_ == static_cast<std::size_t>(g_->num_vertices()) &&
           covered_edges_ == static_cast<std::size_t>(g_->num_edges());
  }

  bool added(int id) const { return pos_[static_cast<std::size_t>(id)] >= 0; }

  // Whether clique id already lies inside the covered subgraph.
  bool covered(int id) const {
    const auto& c = result_.cliques[static_cast<std::size_t>(id)].members();
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (!vin_[static_cast<std::size_t>(c[i])]) return false;
      for (std::size_t j = i + 1; j < c.size(); ++j) {
        if (!ein_[static_cast<std::size_t>(*g_->edge_index(c[i], c[j]))]) return false;
      }
    }
    return true;
  }

  // Maximal cliques of G'[V(C) & V(G')], each with its admissible covering
  // cliques in preference order.
  std::vector<std::pair<VertexSet, std::vector<int>>> joints(int id) const {
    std::vector<Vertex> shared;
    for (Vertex v : result_.cliques[static_cast<std::size_t>(id)]) {
      if (vin_[static_cast<std::size_t>(v)]) shared.push_back(v);
    }
    std::vector<std::pair<VertexSet, std::vector<int>>> out;
    if (shared.empty()) return out;
    CliqueEnumerator en(
        [&](Vertex v) {
          std::vector<Vertex> nb;
          for (Vertex w : shared) {
            if (w == v) continue;
            const auto e = g_->edge_index(v, w);
            if (e && ein_[static_cast<std::size_t>(*e)]) nb.push_back(w);
          }
          return nb;
        },
        result_.cliques.size() + shared.size() + 1);
    auto pieces = en.run(shared);
    std::sort(pieces.begin(), pieces.end());
    for (VertexSet& piece : pieces) {
      std::vector<int> cover;
      for (int c = 0; c < static_cast<int>(result_.cliques.size()); ++c) {
        if (c == id) continue;
        const auto& cm = result_.cliques[static_cast<std::size_t>(c)];
        if (std::includes(cm.begin(), cm.end(), piece.begin(), piece.end())) cover.push_back(c);
      }
      std::stable_sort(cover.begin(), cover.end(), [&](int a, int b) {
        const auto pa = pos_[static_cast<std::size_t>(a)];
        const auto pb = pos_[static_cast<std::size_t>(b)];
        if ((pa >= 0) != (pb >= 0)) return pa >= 0;
        return pa >= 0 && pa < pb;
      });
      // Only C itself contains the piece: a self-link.
      if (cover.empty()) cover.push_back(id);
      // Cliques already in G_c take precedence over all others.
      if (!cover.empty() && pos_[static_cast<std::size_t>(cover.front())] >= 0) {
        std::erase_if(cover, [&](int c) { return pos_[static_cast<std::size_t>(c)] < 0; });
      }
      out.emplace_back(std::move(piece), std::move(cover));
    }
    return out;
  }

  void add(int id, const std::vector<int>& covering) {
    pos_[static_cast<std::size_t>(id)] = static_cast<int>(result_.selection_order.size());
    result_.selection_order.push_back(id);
    for (int c : covering) result_.links.emplace_back(id, c);
    const auto& cm = result_.cliques[static_cast<std::size_t>(id)].members();
    for (std::size_t i = 0; i < cm.size(); ++i) {
      auto& vi = vin_[static_cast<std::size_t>(cm[i])];
      if (!vi) {
        vi = 1;
        ++covered_vertices_;
      }
      for (std::size_t j = i + 1; j < cm.size(); ++j) {
        auto& ej = ein_[static_cast<std::size_t>(*g_->edge_index(cm[i], cm[j]))];
        if (!ej) {
          ej = 1;
          ++covered_edges_;
        }
      }
    }
  }

  const CliqueGraph& result() const { return result_; }

 private:
  const Graph* g_;
  std::vector<char> vin_;
  std::vector<char> ein_;
  std::vector<int> pos_;
  std::size_t covered_vertices_ = 0;
  std::size_t covered_edges_ = 0;
  CliqueGraph result_;
};

inline void require_connected_for_cliques(const Graph& g) {
  if (!is_connected(g)) throw Error(ErrorCode::kNotConnected, "clique graphs need a connected graph");
}

}  // namespace detail

// Runs the covering procedure with cliques taken in the given order. Cliques
// already inside the covered subgraph are passed over; the run stops once the
// covered subgraph equals G.
inline CliqueGraph build_clique_graph(const Graph& g, std::vector<VertexSet> cliques,
                                      const std::vector<int>& selection,
                                      CoveringChoice choice = CoveringChoice::kEarliestSelected) {
  (void)choice;
  detail::require_connected_for_cliques(g);
  std::vector<char> seen(cliques.size(), 0);
  for (int id : selection) {
    if (id < 0 || static_cast<std::size_t>(id) >= cliques.size() || seen[static_cast<std::size_t>(id)]) {
      throw Error(ErrorCode::kIncompleteSelection, "selection must list each clique id once");
    }
    seen[static_cast<std::size_t>(id)] = 1;
  }
  detail::CliqueGraphBuilder b(g, std::move(cliques));
  for (int id : selection) {
    if (b.done()) break;
    if (b.covered(id)) continue;
    std::vector<int> covering;
    for (const auto& [piece, cover] : b.joints(id)) covering.push_back(cover.front());
    b.add(id, covering);
  }
  if (!b.done()) {
    throw Error(ErrorCode::kIncompleteSelection, "selected cliques do not cover the graph");
  }
  return b.result();
}

inline CliqueGraph build_clique_graph(const Graph& g, const std::vector<int>& selection) {
  return build_clique_graph(g, maximal_cliques(g), selection);
}

// Visits every clique graph the procedure can output, over all clique
// selection orders and all covering choices. Stops early when visit returns
// false. Returns the number of graphs visited.
inline std::size_t enumerate_clique_graphs(const Graph& g, const std::vector<VertexSet>& cliques,
                                           const std::function<bool(const CliqueGraph&)>& visit) {
  detail::require_connected_for_cliques(g);
  std::size_t count = 0;
  bool stop = false;
  std::function<void(const detail::CliqueGraphBuilder&)> recurse =
      [&](const detail::CliqueGraphBuilder& b) {
        if (stop) return;
        if (b.done()) {
          ++count;
          if (!visit(b.result())) stop = true;
          return;
        }
        for (int id = 0; id < static_cast<int>(cliques.size()) && !stop; ++id) {
          if (b.added(id) || b.covered(id)) continue;
          const auto joints = b.joints(id);
          std::vector<std::size_t> pick(joints.size(), 0);
          while (!stop) {
            std::vector<int> covering;
            for (std::size_t i = 0; i < joints.size(); ++i) covering.push_back(joints[i].second[pick[i]]);
            detail::CliqueGraphBuilder next = b;
            next.add(id, covering);
            recurse(next);
            std::size_t i = 0;
            while (i < joints.size() && ++pick[i] == joints[i].second.size()) pick[i++] = 0;
            if (i == joints.size()) break;
          }
        }
      };
  recurse(detail::CliqueGraphBuilder(g, cliques));
  return count;
}

// Whether some selection order and covering choice yields a tree.
inline bool has_tree_clique_graph(const Graph& g) {
  bool found = false;
  enumerate_clique_graphs(g, maximal_cliques(g), [&](const CliqueGraph& cg) {
    found = cg.is_tree();
    return !found;
  });
  return found;
}

// Vertices lying in exactly one maximal clique.
inline bool has_private_vertex(const CliqueGraph& cg, int id) {
  for (Vertex v : cg.cliques[static_cast<std::size_t>(id)]) {
    std::size_t count = 0;
    for (const VertexSet& c : cg.cliques) count += c.contains(v) ? 1 : 0;
    if (count == 1) return true;
  }
  return false;
}

inline bool leaves_have_private_vertex(const CliqueGraph& cg) {
  for (int id : cg.leaves()) {
    if (!has_private_vertex(cg, id)) return false;
  }
  return true;
}

// Clique tree of a connected chordal graph. Cliques are selected by the
// visit position of their last LexBFS vertex, which gives the running
// intersection property: each new clique meets the earlier ones inside a
// single earlier clique, so it gets exactly one link.
inline CliqueGraph chordal_clique_tree(const Graph& g) {
  detail::require_connected_for_cliques(g);
  if (!is_chordal(g)) throw Error(ErrorCode::kNotChordal, "graph has an induced cycle of length >= 4");
  const EliminationOrder visit = lex_bfs(g, 0);
  std::vector<std::size_t> pos(static_cast<std::size_t>(g.num_vertices()));
  for (std::size_t i = 0; i < visit.order.size(); ++i) pos[static_cast<std::size_t>(visit.order[i])] = i;
  std::vector<VertexSet> cliques = maximal_cliques(g);
  std::vector<std::size_t> key(cliques.size(), 0);
  for (std::size_t c = 0; c < cliques.size(); ++c) {
    for (Vertex v : cliques[c]) key[c] = std::max(key[c], pos[static_cast<std::size_t>(v)]);
  }
  std::vector<int> selection(cliques.size());
  for (std::size_t c = 0; c < cliques.size(); ++c) selection[c] = static_cast<int>(c);
  std::sort(selection.begin(), selection.end(), [&](int a, int b) {
    return key[static_cast<std::size_t>(a)] < key[static_cast<std::size_t>(b)];
  });
  CliqueGraph cg = build_clique_graph(g, std::move(cliques), selection);
  if (!cg.is_tree() || cg.selection_order.size() != cg.cliques.size()) {
    throw std::logic_error("chordal_clique_tree: construction did not produce a clique tree");
  }
  return cg;
}

struct StructureReport {
  std::size_t s = 0;  // clique number of G
  Rational value;
  bool is_connected_chordal_F = false;
  bool leaf_cliques_maximal_in_G = false;
  bool min_degree_ok = false;
  bool bounds_ok = false;
  bool lower_bound_vacuous = false;  // s = 2
  std::vector<std::string> failures;
  // Filled when G is small enough to enumerate every optimal subset.
  std::optional<bool> some_optimum_conforms;
  std::optional<VertexSet> conforming_subset;

  bool given_subset_conforms() const {
    return is_connected_chordal_F && leaf_cliques_maximal_in_G && min_degree_ok;
  }
  bool ok() const {
    return bounds_ok && (given_subset_conforms() || some_optimum_conforms.value_or(false));
  }
};

namespace detail {

inline bool is_maximal_clique_in(const Graph& g, const std::vector<Vertex>& clique) {
  if (clique.empty()) return false;
  for (Vertex w : g.neighbors(clique.front())) {
    if (std::find(clique.begin(), clique.end(), w) != clique.end()) continue;
    bool extends = true;
    for (Vertex v : clique) {
      if (v != clique.front() && !g.adjacent(v, w)) {
        extends = false;
        break;
      }
    }
    if (extends) return false;
  }
  return true;
}

struct SubsetChecks {
  bool connected_chordal = false;
  bool leaves_maximal = false;
  bool min_degree = false;
  std::vector<std::string> failures;
};

inline SubsetChecks check_optimal_subset(const Graph& g, const VertexSet& subset, std::size_t s) {
  SubsetChecks out;
  const InducedSubgraph f = induced_subgraph(g, subset);
  out.connected_chordal = is_connected(f.graph) && is_chordal(f.graph);
  if (!out.connected_chordal) {
    out.failures.push_back("F is not a connected chordal graph");
  } else {
    const CliqueGraph tree = chordal_clique_tree(f.graph);
    out.leaves_maximal = true;
    for (int id : tree.leaves()) {
      std::vector<Vertex> in_g;
      for (Vertex v : tree.cliques[static_cast<std::size_t>(id)]) in_g.push_back(f.to_parent[static_cast<std::size_t>(v)]);
      if (!is_maximal_clique_in(g, in_g)) {
        out.leaves_maximal = false;
        out.failures.push_back("leaf clique " + std::to_string(id) + " of F is not maximal in G");
      }
    }
  }
  out.min_degree = true;
  for (Vertex v = 0; v < f.graph.num_vertices(); ++v) {
    if (2 * f.graph.degree(v) < s) {
      out.min_degree = false;
      out.failures.push_back("vertex " + std::to_string(f.to_parent[static_cast<std::size_t>(v)]) +
                             " has degree " + std::to_string(f.graph.degree(v)) + " in F, below s/2");
    }
  }
  return out;
}

}  // namespace detail

// Checks an optimal solution on a chordal graph against the structure of
// chordal optima: (1) F = G[subset] is connected and chordal and the leaf
// cliques of its clique tree are maximal cliques of G, (2) every degree in F
// is at least s/2, (3) 1/(s-1) <= value <= 2/s. (1) and (2) hold for some
// optimal subset, not necessarily the given one, so for n <= brute_cap every
// optimal subset is tried as well.
inline StructureReport verify_chordal_optimum(const Graph& g, const RatioSolution& sol,
                                              Vertex brute_cap = 12) {
  if (!is_chordal(g)) throw Error(ErrorCode::kNotChordal, "graph has an induced cycle of length >= 4");
  validate_solution(g, sol);
  StructureReport rep;
  rep.s = clique_number(g);
  rep.value = sol.value;
  if (rep.s < 2) throw Error(ErrorCode::kDegenerateGraph, "clique number below 2");
  const auto s = static_cast<std::int64_t>(rep.s);

  const auto checks = detail::check_optimal_subset(g, sol.subset, rep.s);
  rep.is_connected_chordal_F = checks.connected_chordal;
  rep.leaf_cliques_maximal_in_G = checks.leaves_maximal;
  rep.min_degree_ok = checks.min_degree;
  rep.failures = checks.failures;

  const bool upper = sol.value <= Rational(2, s);
  rep.lower_bound_vacuous = s == 2;
  const bool lower = rep.lower_bound_vacuous || Rational(1, s - 1) <= sol.value;
  rep.bounds_ok = upper && lower;
  if (!upper) rep.failures.push_back("value " + to_string(sol.value) + " exceeds 2/s");
  if (!lower) rep.failures.push_back("value " + to_string(sol.value) + " is below 1/(s-1)");

  if (g.num_vertices() <= brute_cap) {
    rep.some_optimum_conforms = false;
    for (const VertexSet& cand : all_optimal_subsets(g, brute_cap)) {
      const auto c = detail::check_optimal_subset(g, cand, rep.s);
      if (c.connected_chordal && c.leaves_maximal && c.min_degree) {
        rep.some_optimum_conforms = true;
        rep.conforming_subset = cand;
        break;
      }
    }
  }
  return rep;
}

}  // namespace mwr
