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

#ifndef MEDENUM_SKIP_CHILDREN_HPP_
#define MEDENUM_SKIP_CHILDREN_HPP_

// Skip-children of T in tr(E_{i-1}): the members T' of tr(E_i) whose Berge
// ancestor in tr(E_{i-1}) is T.
//
// Every skip-child has the form T ∪ A. Write T+ for the ancestor of T' at
// the prefix ending with N[b_i]; T+ is T, or T plus one edge f != b_i at
// x_i or y_i (the anchor). When T' touches only one endpoint of b_i (the
// covered endpoint) and T' != T+, the edges T' \ T+ form a selection: one
// edge at every free vertex, i.e. every neighbor of the other endpoint (the
// hub) not touched by T+. These are the selection children, enumerated by
// ExtraChildren. All other skip-children add at most one edge at each
// endpoint of b_i, or b_i alone, and are enumerated by NonExtraChildren.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "medenum/decomposition.hpp"
#include "medenum/edge_subset.hpp"
#include "medenum/graph.hpp"
#include "medenum/transversal.hpp"

namespace medenum {

enum class Side { x, y };

struct HPattern {
  VertexId z_l;
  VertexId v_l;
  VertexId z_j;
  VertexId v_j;
  EdgeId edge_zl_vl;
  EdgeId edge_zj_vj;
  EdgeId edge_vl_vj;
};

/// One border edge per free vertex, listed in free-vertex order.
using Selection = std::vector<std::pair<VertexId, EdgeId>>;

struct BorderAnalysis {
  int level = 0;
  Side covered_side = Side::x;
  VertexId covered = -1;
  VertexId hub = -1;
  EdgeSubset base;
  std::optional<EdgeId> anchor;
  /// base plus the anchor.
  EdgeSubset support;
  std::vector<VertexId> free_vertices;
  /// Edges outside B_i incident to a free vertex.
  EdgeSubset border_edges;
  /// Edges covered-z for free z; they compete with border edges for z.
  std::vector<EdgeId> cross_edges;
  EdgeSubset x_set;
  EdgeSubset preceding_set;
  std::vector<HPattern> h_patterns;
  EdgeSubset h_set;
  bool redundant_found = false;
  bool fail_found = false;
  bool uncovered_free = false;
  /// Per free vertex (same order as free_vertices): its border and cross
  /// edges minus x_set, preceding_set and h_set, by increasing edge id.
  std::vector<std::vector<EdgeId>> allowed_by_free;

  bool blocks_extension() const { return redundant_found || fail_found || uncovered_free; }
};

enum class AnalysisDepth { full, patterns_only };

namespace detail {

inline bool touches(const Graph& g, const EdgeSubset& t, VertexId v) { return g.touches(t, v); }

// The endpoint of e that is free, or -1.
inline VertexId free_endpoint(const Edge& e, const std::vector<int>& free_index) {
  if (free_index[e.u] >= 0) return e.u;
  if (free_index[e.v] >= 0) return e.v;
  return -1;
}

}  // namespace detail

namespace detail {

// Neighbors of the hub in V_i untouched by s, in increasing id.
inline std::vector<VertexId> free_vertices(const Graph& g, const MatchingDecomposition& d, int i,
                                           VertexId hub, const EdgeSubset& s) {
  std::vector<VertexId> out;
  for (EdgeId e : g.incidence(hub)) {
    const VertexId z = g.edge(e).other(hub);
    if (d.in_level_vertices(z, i) && !g.touches(s, z)) out.push_back(z);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Analysis without the membership test of t in tr(E_{i-1}), for callers
// that already know it.
inline BorderAnalysis analyze_member(const Graph& g, const MatchingDecomposition& d,
                                     const EdgeSubset& t, int i, std::optional<EdgeId> anchor,
                                     Side covered_side, AnalysisDepth depth) {
  const MatchedEdge& b = d.matched(i);
  if (anchor) covered_side = g.edge(*anchor).has(b.x) ? Side::x : Side::y;

  const std::size_t m = g.edge_count();
  BorderAnalysis a;
  a.level = i;
  a.covered_side = covered_side;
  a.covered = covered_side == Side::x ? b.x : b.y;
  a.hub = covered_side == Side::x ? b.y : b.x;
  a.base = t;
  a.anchor = anchor;
  a.support = t;
  if (anchor) a.support.insert(*anchor);
  a.border_edges = EdgeSubset(m);
  a.x_set = EdgeSubset(m);
  a.preceding_set = EdgeSubset(m);
  a.h_set = EdgeSubset(m);
  const EdgeSubset& s = a.support;

  a.free_vertices = free_vertices(g, d, i, a.hub, s);
  std::vector<int> free_index(g.vertex_count(), -1);
  for (std::size_t k = 0; k < a.free_vertices.size(); ++k)
    free_index[a.free_vertices[k]] = static_cast<int>(k);

  std::vector<std::vector<EdgeId>> options(a.free_vertices.size());
  for (std::size_t k = 0; k < a.free_vertices.size(); ++k) {
    const VertexId z = a.free_vertices[k];
    for (EdgeId e : g.incidence(z)) {
      const Edge& ed = g.edge(e);
      if (d.level_of_edge(e) != i) {
        if (free_index[ed.other(z)] >= 0)
          throw std::logic_error("border edge joins two free vertices");
        a.border_edges.insert(e);
        options[k].push_back(e);
      } else if (z != a.covered && ed.has(a.covered)) {
        a.cross_edges.push_back(e);
        options[k].push_back(e);
      }
    }
    std::sort(options[k].begin(), options[k].end());
  }

  const std::size_t prev = d.level_boundary(i - 1);
  const LevelContext ctx = LevelContext::for_level(g, d, i);
  const PrivateProfile prof(ctx, s);
  auto hub_edge = [&](VertexId z) { return g.find_edge(a.hub, z); };
  auto in_prev = [&](EdgeId f) { return d.rank(f) < prev; };
  // Hyperedges at a free vertex are dominated by every selection.
  auto doomed = [&](EdgeId f) {
    const Edge& ef = g.edge(f);
    return free_index[ef.u] >= 0 || free_index[ef.v] >= 0;
  };
  auto option_at = [&](VertexId v) {
    std::vector<std::pair<VertexId, EdgeId>> out;
    for (EdgeId f : g.incidence(v)) {
      const VertexId z = g.edge(f).other(v);
      if (free_index[z] >= 0 && (a.border_edges.contains(f) || v == a.covered))
        out.emplace_back(z, f);
    }
    return out;
  };

  // A member whose every private hyperedge is doomed loses all of them to
  // any selection.
  for (EdgeId e : s) {
    bool all_doomed = true;
    prof.for_each_private(e, [&](EdgeId f) { all_doomed = all_doomed && doomed(f); });
    if (all_doomed) a.redundant_found = true;
  }

  // Fail edges: a member of T whose E_{i-1} privates are all border edges
  // loses them to any selection, and is then dropped by the Berge chain at
  // its first private in B_i unless a border private at a later hub neighbor
  // comes back before that. The anchor keeps b_i until the support prefix.
  for (EdgeId e : s) {
    if (anchor && e == *anchor) continue;
    bool prev_border = true;
    std::optional<std::size_t> first_bi;
    prof.for_each_private(e, [&](EdgeId f) {
      if (in_prev(f)) {
        prev_border = prev_border && a.border_edges.contains(f);
      } else if (ctx.in_prefix(f)) {
        first_bi = std::min(first_bi.value_or(d.rank(f)), d.rank(f));
      }
    });
    if (!prev_border || !first_bi) continue;
    bool later_border = false;
    prof.for_each_private(e, [&](EdgeId f) {
      if (!in_prev(f)) return;
      const VertexId zl = detail::free_endpoint(g.edge(f), free_index);
      if (zl >= 0 && d.rank(*hub_edge(zl)) > *first_bi) later_border = true;
    });
    if (!later_border) a.fail_found = true;
  }

  // H-patterns: a member v_l v_j keeping a non-doomed private at each end
  // (away from the other end) survives any single option, but options at
  // both ends from distinct free vertices leave it with nothing.
  for (EdgeId e : s) {
    const Edge& ed = g.edge(e);
    bool at_u = false;
    bool at_v = false;
    prof.for_each_private(e, [&](EdgeId f) {
      if (doomed(f)) return;
      const Edge& pf = g.edge(f);
      if (pf.has(ed.u) && !pf.has(ed.v)) at_u = true;
      if (pf.has(ed.v) && !pf.has(ed.u)) at_v = true;
    });
    if (!at_u || !at_v) continue;
    const auto reach_u = option_at(ed.u);
    const auto reach_v = option_at(ed.v);
    for (const auto& [zl, el] : reach_u)
      for (const auto& [zj, ej] : reach_v) {
        if (zl == zj) continue;
        a.h_patterns.push_back({zl, ed.u, zj, ed.v, el, ej, e});
        a.h_set.insert(el);
        a.h_set.insert(ej);
      }
  }
  if (depth == AnalysisDepth::patterns_only) return a;

  for (std::size_t k = 0; k < options.size(); ++k) {
    const VertexId zl = a.free_vertices[k];
    const auto zl_hub = hub_edge(zl);
    for (EdgeId e : options[k]) {
      // Adding e leaves some member with doomed privates only.
      const PrivateProfile with_e(ctx, s.with(e));
      for (EdgeId member : s) {
        bool all_doomed = true;
        with_e.for_each_private(member, [&](EdgeId f) { all_doomed = all_doomed && doomed(f); });
        if (all_doomed) {
          a.x_set.insert(e);
          break;
        }
      }
      // Preceding: a member v z_h at the other end of e, z_h a hub neighbor
      // after z_l, whose E_{i-1} privates all lie in N[e].
      const VertexId v = g.edge(e).other(zl);
      const EdgeSubset& ne = g.closed_edge_neighborhood(e);
      for (EdgeId member : g.incidence(v)) {
        if (!s.contains(member)) continue;
        const VertexId zh = g.edge(member).other(v);
        if (zh == zl) continue;
        const auto zh_hub = hub_edge(zh);
        if (!zh_hub || !zl_hub || d.rank(*zl_hub) >= d.rank(*zh_hub)) continue;
        bool inside = true;
        prof.for_each_private(member, [&](EdgeId f) {
          if (in_prev(f) && !ne.contains(f)) inside = false;
        });
        if (inside) a.preceding_set.insert(e);
      }
    }
  }

  a.allowed_by_free.resize(options.size());
  for (std::size_t k = 0; k < options.size(); ++k) {
    for (EdgeId e : options[k])
      if (!a.x_set.contains(e) && !a.preceding_set.contains(e) && !a.h_set.contains(e))
        a.allowed_by_free[k].push_back(e);
    if (a.allowed_by_free[k].empty()) a.uncovered_free = true;
  }
  return a;
}

}  // namespace detail

/// Border analysis of T at level i relative to an anchor (or to T's own
/// edge at the covered endpoint when no anchor is given).
inline BorderAnalysis analyze(const Graph& g, const MatchingDecomposition& d, const EdgeSubset& t,
                              int i, std::optional<EdgeId> anchor, Side covered_side = Side::x,
                              AnalysisDepth depth = AnalysisDepth::full) {
  if (i < 1 || i > d.levels()) throw std::domain_error("analysis level out of range");
  const MatchedEdge& b = d.matched(i);
  if (anchor) {
    const Edge& f = g.edge(*anchor);
    if (*anchor == b.edge || !(f.has(b.x) || f.has(b.y)))
      throw std::domain_error("anchor must be an edge other than b_i at an endpoint of b_i");
  }
  if (!PrivateProfile(LevelContext::for_level(g, d, i - 1), t).is_minimal())
    throw std::domain_error("analysis needs a minimal transversal of E_{i-1}");
  return detail::analyze_member(g, d, t, i, anchor, covered_side, depth);
}

/// Cartesian product of the allowed edges of each free vertex, in
/// lexicographic order of (free vertex, edge id).
class SelectionIterator {
 public:
  explicit SelectionIterator(const BorderAnalysis& a) : a_(&a), idx_(a.free_vertices.size(), 0) {
    if (a.redundant_found || a.fail_found || a.uncovered_free)
      throw std::domain_error("selections requested for an analysis that admits none");
  }

  std::optional<Selection> next() {
    if (done_) return std::nullopt;
    Selection sel;
    sel.reserve(idx_.size());
    for (std::size_t k = 0; k < idx_.size(); ++k)
      sel.emplace_back(a_->free_vertices[k], a_->allowed_by_free[k][idx_[k]]);
    // Advance the last free vertex fastest.
    std::size_t k = idx_.size();
    while (k > 0) {
      --k;
      if (++idx_[k] < a_->allowed_by_free[k].size()) break;
      idx_[k] = 0;
      if (k == 0) {
        done_ = true;
        break;
      }
    }
    if (idx_.empty()) done_ = true;
    return sel;
  }

 private:
  const BorderAnalysis* a_;
  std::vector<std::size_t> idx_;
  bool done_ = false;
};

inline std::vector<Selection> enumerate_selections(const BorderAnalysis& a) {
  SelectionIterator it(a);
  std::vector<Selection> out;
  while (auto s = it.next()) out.push_back(std::move(*s));
  return out;
}

/// A skip-child is a selection child when it touches exactly one endpoint
/// of b_i and strictly contains its support.
inline bool is_selection_class(const Graph& g, const MatchingDecomposition& d, int i,
                               const EdgeSubset& child, const EdgeSubset& support) {
  const MatchedEdge& b = d.matched(i);
  return g.touches(child, b.x) != g.touches(child, b.y) && !(child == support);
}

/// T ∪ A for A ⊆ N[b_i] \ T with at most one new edge at each endpoint of
/// b_i (or A = {b_i}), in lexicographic order of A, keeping those that are
/// skip-children of T and not selection children.
class NonExtraChildren {
 public:
  // t must outlive the iterator.
  NonExtraChildren(const Graph& g, const MatchingDecomposition& d, const EdgeSubset& t, int i)
      : g_(&g), d_(&d), t_(&t), level_(i) {
    const MatchedEdge& b = d.matched(i);
    const EdgeSubset& nb = g.closed_edge_neighborhood(b.edge);
    for (EdgeId e : nb)
      if (!t.contains(e)) pool_.push_back(e);
  }

  std::optional<EdgeSubset> next() {
    while (advance()) {
      if (!allowed()) continue;
      EdgeSubset c = *t_;
      if (first_ >= 0) c.insert(pool_[first_]);
      if (second_ >= 0) c.insert(pool_[second_]);
      if (accept(c)) return c;
    }
    return std::nullopt;
  }

 private:
  // Walks A in lexicographic order of pool indices: {}, {0}, {0,1}, {0,2},
  // ..., {1}, {1,2}, ...
  bool advance() {
    const int n = static_cast<int>(pool_.size());
    if (!started_) {
      started_ = true;
      return true;
    }
    if (first_ < 0) {
      if (n == 0) return false;
      first_ = 0;
      return true;
    }
    if (second_ < 0 ? first_ + 1 < n : second_ + 1 < n) {
      second_ = second_ < 0 ? first_ + 1 : second_ + 1;
      return true;
    }
    second_ = -1;
    return ++first_ < n;
  }

  // A pair may not contain b_i nor two edges at the same endpoint of b_i.
  bool allowed() const {
    if (second_ < 0) return true;
    const MatchedEdge& b = d_->matched(level_);
    const EdgeId e0 = pool_[first_];
    const EdgeId e1 = pool_[second_];
    if (e0 == b.edge || e1 == b.edge) return false;
    const Edge& a0 = g_->edge(e0);
    const Edge& a1 = g_->edge(e1);
    return !(a0.has(b.x) && a1.has(b.x)) && !(a0.has(b.y) && a1.has(b.y));
  }

  bool accept(const EdgeSubset& c) const {
    // b_i must be dominated; this is free to test.
    const MatchedEdge& b = d_->matched(level_);
    if (!g_->touches(c, b.x) && !g_->touches(c, b.y)) return false;
    const auto anc = try_skip_ancestry(*g_, *d_, level_, c);
    return anc && anc->parent == *t_ && !is_selection_class(*g_, *d_, level_, c, anc->support);
  }

  const Graph* g_;
  const MatchingDecomposition* d_;
  const EdgeSubset* t_;
  int level_;
  std::vector<EdgeId> pool_;
  int first_ = -1;
  int second_ = -1;
  bool started_ = false;
};

inline std::vector<EdgeSubset> enumerate_nonextra_children(const Graph& g,
                                                           const MatchingDecomposition& d,
                                                           const EdgeSubset& t, int i) {
  NonExtraChildren it(g, d, t, i);
  std::vector<EdgeSubset> out;
  while (auto c = it.next()) out.push_back(std::move(*c));
  return out;
}

/// Selection children of T that use no H-pattern edge. For each way the
/// covered endpoint can be dominated (T's own edge there, or one anchor), the
/// analysis either rules out every selection or yields the allowed edges per
/// free vertex; each product element is checked against its skip parent and
/// support before it is emitted, so a child is produced under exactly one
/// anchor.
class ExtraChildren {
 public:
  // t must outlive the iterator.
  ExtraChildren(const Graph& g, const MatchingDecomposition& d, const EdgeSubset& t, int i)
      : g_(&g), d_(&d), t_(&t), level_(i) {
    const MatchedEdge& b = d.matched(i);
    const bool tx = g.touches(t, b.x);
    const bool ty = g.touches(t, b.y);
    if (tx && ty) return;
    if (tx) {
      configs_.push_back({std::nullopt, Side::x});
    } else if (ty) {
      configs_.push_back({std::nullopt, Side::y});
    } else {
      for (VertexId end : {b.x, b.y})
        for (EdgeId f : g.incidence(end))
          if (f != b.edge) configs_.push_back({f, end == b.x ? Side::x : Side::y});
    }
  }

  std::optional<EdgeSubset> next() {
    while (true) {
      if (!selections_) {
        if (cursor_ >= configs_.size()) return std::nullopt;
        const Config& cfg = configs_[cursor_++];
        if (!has_free_vertex(cfg)) continue;
        analysis_.emplace(
            detail::analyze_member(*g_, *d_, *t_, level_, cfg.anchor, cfg.side, AnalysisDepth::full));
        if (analysis_->blocks_extension() || analysis_->free_vertices.empty()) {
          analysis_.reset();
          continue;
        }
        selections_.emplace(*analysis_);
      }
      auto sel = selections_->next();
      if (!sel) {
        selections_.reset();
        analysis_.reset();
        continue;
      }
      EdgeSubset c = analysis_->support;
      for (const auto& [z, e] : *sel) c.insert(e);
      ++candidates_;
      const auto anc = try_skip_ancestry(*g_, *d_, level_, c);
      if (!anc || !(anc->parent == *t_) || !(anc->support == analysis_->support)) {
        ++rejected_;
        continue;
      }
      return c;
    }
  }

  std::size_t candidates() const { return candidates_; }
  std::size_t rejected() const { return rejected_; }

 private:
  struct Config {
    std::optional<EdgeId> anchor;
    Side side;
  };

  bool has_free_vertex(const Config& cfg) const {
    const MatchedEdge& b = d_->matched(level_);
    const VertexId hub = cfg.side == Side::x ? b.y : b.x;
    for (EdgeId e : g_->incidence(hub)) {
      const VertexId z = g_->edge(e).other(hub);
      if (!d_->in_level_vertices(z, level_) || g_->touches(*t_, z)) continue;
      if (cfg.anchor && g_->edge(*cfg.anchor).has(z)) continue;
      return true;
    }
    return false;
  }

  const Graph* g_;
  const MatchingDecomposition* d_;
  const EdgeSubset* t_;
  int level_;
  std::vector<Config> configs_;
  std::size_t cursor_ = 0;
  std::optional<BorderAnalysis> analysis_;
  std::optional<SelectionIterator> selections_;
  std::size_t candidates_ = 0;
  std::size_t rejected_ = 0;
};

inline std::vector<EdgeSubset> enumerate_extra_nonH_children(const Graph& g,
                                                             const MatchingDecomposition& d,
                                                             const EdgeSubset& t, int i) {
  ExtraChildren it(g, d, t, i);
  std::vector<EdgeSubset> out;
  while (auto c = it.next()) out.push_back(std::move(*c));
  return out;
}

}  // namespace medenum

#endif  // MEDENUM_SKIP_CHILDREN_HPP_
