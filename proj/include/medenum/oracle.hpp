// Copyright 2026 The medenum Authors.
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

#ifndef MEDENUM_ORACLE_HPP_
#define MEDENUM_ORACLE_HPP_

// Exhaustive ground truth and fixture builders. Nothing here depends on the
// level machinery except brute_force_children, whose definition is the skip
// parent itself.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "medenum/decomposition.hpp"
#include "medenum/edge_subset.hpp"
#include "medenum/graph.hpp"
#include "medenum/transversal.hpp"

namespace medenum::oracle {

class OracleRefusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kMaxEdsEdges = 24;
inline constexpr std::size_t kMaxTrEdges = 20;

namespace detail {

inline std::vector<std::uint32_t> neighborhood_masks(const Graph& g) {
  std::vector<std::uint32_t> nb(g.edge_count(), 0);
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    for (std::size_t f = 0; f < g.edge_count(); ++f) {
      const Edge& a = g.edges()[e];
      const Edge& b = g.edges()[f];
      if (a.has(b.u) || a.has(b.v)) nb[e] |= 1u << f;
    }
  return nb;
}

// All subsets s of the m edges that meet every mask in `targets` and where
// every member of s is the sole member of s inside some target.
inline std::vector<EdgeSubset> minimal_hitting_sets(std::size_t m,
                                                    const std::vector<std::uint32_t>& targets) {
  std::vector<EdgeSubset> out;
  const std::uint64_t total = std::uint64_t{1} << m;
  for (std::uint64_t s64 = 0; s64 < total; ++s64) {
    const auto s = static_cast<std::uint32_t>(s64);
    bool hits_all = true;
    std::uint32_t owners = 0;
    for (std::uint32_t t : targets) {
      const std::uint32_t common = s & t;
      if (common == 0) {
        hits_all = false;
        break;
      }
      if ((common & (common - 1)) == 0) owners |= common;
    }
    if (hits_all && owners == s) {
      EdgeSubset set(m);
      for (std::size_t e = 0; e < m; ++e)
        if (s & (1u << e)) set.insert(static_cast<EdgeId>(e));
      out.push_back(std::move(set));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// Every inclusion-minimal edge dominating set, sorted canonically.
inline std::vector<EdgeSubset> brute_force_min_eds(const Graph& g) {
  if (g.edge_count() > kMaxEdsEdges)
    throw OracleRefusal("brute force refuses graphs with more than " +
                        std::to_string(kMaxEdsEdges) + " edges");
  return detail::minimal_hitting_sets(g.edge_count(), detail::neighborhood_masks(g));
}

/// tr(F_j): minimal transversals of the first j hyperedges, members from E.
inline std::vector<EdgeSubset> brute_force_tr(const Graph& g, const MatchingDecomposition& d,
                                              std::size_t j) {
  if (g.edge_count() > kMaxTrEdges)
    throw OracleRefusal("brute force refuses prefixes over more than " +
                        std::to_string(kMaxTrEdges) + " edges");
  if (j > g.edge_count()) throw std::out_of_range("prefix length exceeds |E|");
  const auto nb = detail::neighborhood_masks(g);
  std::vector<std::uint32_t> targets;
  for (std::size_t r = 0; r < j; ++r) targets.push_back(nb[d.edge_at_rank(r)]);
  return detail::minimal_hitting_sets(g.edge_count(), targets);
}

/// The skip-children of t, by filtering tr(E_i) on the skip parent.
inline std::vector<EdgeSubset> brute_force_children(const Graph& g,
                                                    const MatchingDecomposition& d,
                                                    const EdgeSubset& t, int i) {
  std::vector<EdgeSubset> out;
  for (auto& c : brute_force_tr(g, d, d.level_boundary(i)))
    if (skip_parent(g, d, i, c) == t) out.push_back(std::move(c));
  return out;
}

/// Uniform simple graph on n vertices with m edges; the edge list is a
/// seeded shuffle of all vertex pairs, truncated to m.
inline Graph random_graph(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (m > n * (n > 0 ? n - 1 : 0) / 2)
    throw std::invalid_argument("cannot place " + std::to_string(m) + " edges on " +
                                std::to_string(n) + " vertices");
  std::vector<Edge> pairs;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      pairs.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
  std::mt19937_64 rng(seed);
  // Partial Fisher-Yates with an explicit draw so the stream does not depend
  // on the standard library's shuffle.
  for (std::size_t i = 0; i < m; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, pairs.size() - 1);
    std::swap(pairs[i], pairs[pick(rng)]);
  }
  pairs.resize(m);
  return Graph(n, std::move(pairs));
}

/// Graph whose edge set is the subset `mask` of the edges of K_n, listed in
/// the order (0,1), (0,2), ..., (n-2,n-1).
inline Graph subgraph_of_complete(std::size_t n, std::uint64_t mask) {
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v, ++bit)
      if (mask & (std::uint64_t{1} << bit))
        edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
  return Graph(n, std::move(edges));
}

/// t vertex-disjoint triangles; 3^t minimal edge dominating sets.
inline Graph disjoint_triangles(std::size_t t) {
  std::vector<Edge> edges;
  for (std::size_t j = 0; j < t; ++j) {
    const auto a = static_cast<VertexId>(3 * j);
    edges.push_back({a, a + 1});
    edges.push_back({a + 1, a + 2});
    edges.push_back({a, a + 2});
  }
  return Graph(3 * t, std::move(edges));
}

/// Crown graph: K_{n,n} minus a perfect matching, n(n-1) edges.
inline Graph crown(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b) edges.push_back({static_cast<VertexId>(a), static_cast<VertexId>(n + b)});
  return Graph(2 * n, std::move(edges));
}

// ---------------------------------------------------------------------------
// 3-CNF formulas and the reduction to selection existence.

struct CnfFormula {
  int num_vars = 0;
  /// Literals are +v / -v for variables 1..num_vars.
  std::vector<std::vector<int>> clauses;

  void validate() const {
    if (num_vars < 1) throw std::invalid_argument("formula has no variables");
    for (std::size_t h = 0; h < clauses.size(); ++h) {
      const auto& c = clauses[h];
      if (c.size() != 3)
        throw std::invalid_argument("clause " + std::to_string(h + 1) + " has " +
                                    std::to_string(c.size()) + " literals, expected 3");
      for (int lit : c)
        if (lit == 0 || std::abs(lit) > num_vars)
          throw std::invalid_argument("clause " + std::to_string(h + 1) +
                                      " has an out-of-range literal");
    }
  }
};

inline bool satisfiable(const CnfFormula& f) {
  if (f.num_vars > 24) throw OracleRefusal("assignment search limited to 24 variables");
  for (std::uint32_t a = 0; a < (1u << f.num_vars); ++a) {
    bool ok = true;
    for (const auto& c : f.clauses) {
      bool sat = false;
      for (int lit : c) {
        const bool val = (a >> (std::abs(lit) - 1)) & 1u;
        if ((lit > 0) == val) {
          sat = true;
          break;
        }
      }
      if (!sat) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

struct ImtInstance {
  Graph graph;
  std::vector<std::string> vertex_names;
  int level = 0;
  // T of the construction. It includes the anchor xw, which lies outside
  // E_{i-1}, so base_transversal - {anchor} is the member of tr(E_{i-1}).
  EdgeSubset base_transversal;
  EdgeId anchor = -1;
  EdgeId b_edge = -1;
  VertexId x = -1;
  VertexId y = -1;
};

/// Builds the graph of the 3SAT reduction: literal vertices x_j and ~x_j,
/// clause vertices C_h, pendant vertices z_j (on x_j) and y_j (on ~x_j), and
/// w, x, y. The last level is b = xy, above E_{i-1} which holds every edge not
/// touching x or y. The edge list is ordered so that the greedy matching is
/// {x_j z_j, ~x_j y_j} followed by xy, which makes xy the last matching edge.
inline ImtInstance sat_to_imt(const CnfFormula& f) {
  f.validate();
  const int n = f.num_vars;
  const int m = static_cast<int>(f.clauses.size());
  std::vector<std::string> names;
  auto add = [&](std::string s) {
    names.push_back(std::move(s));
    return static_cast<VertexId>(names.size() - 1);
  };
  std::vector<VertexId> pos(n + 1), neg(n + 1), zv(n + 1), yv(n + 1), cv(m + 1);
  for (int j = 1; j <= n; ++j) {
    pos[j] = add("x" + std::to_string(j));
    zv[j] = add("z" + std::to_string(j));
    neg[j] = add("nx" + std::to_string(j));
    yv[j] = add("y" + std::to_string(j));
  }
  const VertexId x = add("x");
  const VertexId y = add("y");
  const VertexId w = add("w");
  for (int h = 1; h <= m; ++h) cv[h] = add("C" + std::to_string(h));

  std::vector<Edge> edges;
  for (int j = 1; j <= n; ++j) {
    edges.push_back({pos[j], zv[j]});
    edges.push_back({neg[j], yv[j]});
  }
  const auto b_edge = static_cast<EdgeId>(edges.size());
  edges.push_back({x, y});
  std::vector<EdgeId> base;
  const auto anchor = static_cast<EdgeId>(edges.size());
  base.push_back(anchor);
  edges.push_back({x, w});
  for (int j = 1; j <= n; ++j) {
    base.push_back(static_cast<EdgeId>(edges.size()));
    edges.push_back({pos[j], neg[j]});
  }
  for (int h = 1; h <= m; ++h) {
    std::vector<VertexId> lits;
    for (int lit : f.clauses[h - 1]) {
      const VertexId v = lit > 0 ? pos[lit] : neg[-lit];
      if (std::find(lits.begin(), lits.end(), v) == lits.end()) lits.push_back(v);
    }
    for (VertexId v : lits) edges.push_back({v, cv[h]});
  }
  for (int h = 1; h <= m; ++h) edges.push_back({y, cv[h]});

  Graph g(names.size(), std::move(edges));
  EdgeSubset t(g.edge_count());
  for (EdgeId e : base) t.insert(e);
  const auto d = MatchingDecomposition::build(g);
  ImtInstance inst{std::move(g), std::move(names), d.levels(), std::move(t), anchor, b_edge, x, y};
  const MatchedEdge& last = d.matched(d.levels());
  if (last.edge != b_edge || last.x != x || last.y != y)
    throw std::logic_error("reduction graph did not place xy on the last level");
  return inst;
}

/// Exhaustive search for a selection Z (one edge per free vertex, drawn from
/// the given per-vertex options) with base ∪ Z minimal for E_i.
inline std::optional<EdgeSubset> find_valid_selection(
    const Graph& g, const MatchingDecomposition& d, int i, const EdgeSubset& base,
    const std::vector<std::vector<EdgeId>>& options, std::uint64_t max_candidates = 1u << 22) {
  std::uint64_t total = 1;
  for (const auto& o : options) {
    if (o.empty()) return std::nullopt;
    total *= o.size();
    if (total > max_candidates) throw OracleRefusal("selection search space too large");
  }
  std::vector<std::size_t> idx(options.size(), 0);
  const LevelContext ctx = LevelContext::for_level(g, d, i);
  while (true) {
    EdgeSubset c = base;
    for (std::size_t h = 0; h < options.size(); ++h) c.insert(options[h][idx[h]]);
    if (is_minimal_transversal(ctx, c)) return c;
    std::size_t h = 0;
    while (h < idx.size() && ++idx[h] == options[h].size()) idx[h++] = 0;
    if (h == idx.size()) return std::nullopt;
  }
}

}  // namespace medenum::oracle

#endif  // MEDENUM_ORACLE_HPP_
