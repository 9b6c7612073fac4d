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

#ifndef MEDENUM_SLIDE_HPP_
#define MEDENUM_SLIDE_HPP_

// Selection children that pick an H-pattern edge are reached through the
// slide relation instead of the selection product. Given such a child C,
// take its smallest H-pattern z_l v_l v_h z_h with v_l z_l in C, and let
// u z_h be the edge of C at z_h. The slide parent is
//
//   C - {u z_h} + {v_h z_h} - {v_l v_h}
//
// which is again in tr(E_i). Slide children are found by inverting this: drop
// one edge r = v_h z_h of the parent, add one edge at each end of r, and keep
// the candidates whose slide parent is the parent.

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "medenum/decomposition.hpp"
#include "medenum/edge_subset.hpp"
#include "medenum/graph.hpp"
#include "medenum/skip_children.hpp"
#include "medenum/transversal.hpp"

namespace medenum {

/// s precedes s2 when the smallest edge id in which they differ belongs to s.
inline bool lex_less(const EdgeSubset& s, const EdgeSubset& s2) {
  if (s == s2) throw std::invalid_argument("lex_less needs two different sets");
  const EdgeSubset delta = (s - s2) | (s2 - s);
  return s.contains(*delta.min());
}

/// Same, with edges compared by rank.
inline bool rank_less(const MatchingDecomposition& d, const EdgeSubset& s, const EdgeSubset& s2) {
  if (s == s2) throw std::invalid_argument("rank_less needs two different sets");
  std::optional<EdgeId> best;
  for (EdgeId e : (s - s2) | (s2 - s))
    if (!best || d.rank(e) < d.rank(*best)) best = e;
  return s.contains(*best);
}

/// Ordering of H-patterns by the sorted ids of their three edges.
inline bool lex_less(const HPattern& a, const HPattern& b) {
  auto key = [](const HPattern& h) {
    std::array<EdgeId, 3> k{h.edge_zl_vl, h.edge_vl_vj, h.edge_zj_vj};
    std::sort(k.begin(), k.end());
    return k;
  };
  return key(a) < key(b);
}

/// Same ordering with edges compared by rank in the decomposition order.
inline bool rank_less(const MatchingDecomposition& d, const HPattern& a, const HPattern& b) {
  auto key = [&](const HPattern& h) {
    std::array<std::size_t, 3> k{d.rank(h.edge_zl_vl), d.rank(h.edge_vl_vj), d.rank(h.edge_zj_vj)};
    std::sort(k.begin(), k.end());
    return k;
  };
  return key(a) < key(b);
}

/// How a member of tr(E_i) descends from tr(E_{i-1}) when it is a selection
/// child.
struct SelectionOrigin {
  EdgeSubset parent;
  EdgeSubset support;
  std::optional<EdgeId> anchor;
  Side covered_side;
};

inline std::optional<SelectionOrigin> selection_origin(const Graph& g,
                                                       const MatchingDecomposition& d, int i,
                                                       const EdgeSubset& c, SkipAncestry anc) {
  if (!is_selection_class(g, d, i, c, anc.support)) return std::nullopt;
  const MatchedEdge& b = d.matched(i);
  SelectionOrigin o{std::move(anc.parent), std::move(anc.support), std::nullopt,
                    g.touches(c, b.x) ? Side::x : Side::y};
  const EdgeSubset extra = o.support - o.parent;
  if (!extra.empty()) o.anchor = extra.min();
  return o;
}

inline std::optional<SelectionOrigin> selection_origin(const Graph& g,
                                                       const MatchingDecomposition& d, int i,
                                                       const EdgeSubset& c) {
  return selection_origin(g, d, i, c, skip_ancestry(g, d, i, c));
}

/// The analysis a selection child was produced under.
inline BorderAnalysis origin_analysis(const Graph& g, const MatchingDecomposition& d, int i,
                                      const SelectionOrigin& o,
                                      AnalysisDepth depth = AnalysisDepth::patterns_only) {
  return detail::analyze_member(g, d, o.parent, i, o.anchor, o.covered_side, depth);
}

namespace detail {

// Smallest H-pattern among those with a border edge in c, oriented so that
// its v_l z_l edge is the one in c. nullopt when c uses no H-pattern edge.
inline std::optional<HPattern> min_pattern_in(const MatchingDecomposition& d,
                                              const BorderAnalysis& a, const EdgeSubset& c) {
  std::optional<HPattern> best;
  for (const HPattern& h : a.h_patterns) {
    const bool l = c.contains(h.edge_zl_vl);
    const bool j = c.contains(h.edge_zj_vj);
    if (!l && !j) continue;
    if (l && j)
      throw std::logic_error("minimal transversal contains both border edges of an H-pattern");
    HPattern o = l ? h : HPattern{h.z_j, h.v_j, h.z_l, h.v_l, h.edge_zj_vj, h.edge_zl_vl,
                                  h.edge_vl_vj};
    if (!best || rank_less(d, o, *best)) best = o;
  }
  return best;
}

}  // namespace detail

/// The smallest H-pattern used by the selection child c, with z_l v_l in c.
inline HPattern minimum_H_pattern(const Graph& g, const MatchingDecomposition& d,
                                  const EdgeSubset& c, int i) {
  if (!is_minimal_transversal(LevelContext::for_level(g, d, i), c))
    throw std::domain_error("not a minimal transversal of E_i");
  const auto origin = selection_origin(g, d, i, c);
  if (!origin) throw std::domain_error("not a selection child");
  const BorderAnalysis a = origin_analysis(g, d, i, *origin);
  const auto h = detail::min_pattern_in(d, a, c);
  if (!h) throw std::domain_error("selection child uses no H-pattern edge");
  return *h;
}

/// True when c is a selection child that uses an H-pattern edge.
inline bool is_h_child(const Graph& g, const MatchingDecomposition& d, const EdgeSubset& c,
                       int i) {
  const auto origin = selection_origin(g, d, i, c);
  if (!origin) return false;
  const BorderAnalysis a = origin_analysis(g, d, i, *origin);
  return detail::min_pattern_in(d, a, c).has_value();
}

namespace detail {

// c must be in tr(E_i); anc is its skip ancestry.
inline std::optional<EdgeSubset> slide_parent_or_none(const Graph& g,
                                                      const MatchingDecomposition& d,
                                                      const EdgeSubset& c, int i,
                                                      SkipAncestry anc) {
  const auto origin = selection_origin(g, d, i, c, std::move(anc));
  if (!origin) return std::nullopt;
  const BorderAnalysis a = origin_analysis(g, d, i, *origin);
  const auto h = min_pattern_in(d, a, c);
  if (!h) return std::nullopt;
  // z_h is free, so exactly one edge of c (u z_h) sits on it.
  std::optional<EdgeId> uzh;
  for (EdgeId e : g.incidence(h->z_j))
    if (c.contains(e)) {
      if (uzh) throw std::logic_error("two selected edges at one free vertex");
      uzh = e;
    }
  if (!uzh) throw std::logic_error("free vertex left unselected");
  EdgeSubset p = c;
  p.erase(*uzh);
  p.erase(h->edge_vl_vj);
  p.insert(h->edge_zj_vj);
  return p;
}

}  // namespace detail

/// The slide parent of an H-child c of level i.
inline EdgeSubset slide_parent(const Graph& g, const MatchingDecomposition& d,
                               const EdgeSubset& c, int i) {
  if (!is_minimal_transversal(LevelContext::for_level(g, d, i), c))
    throw std::domain_error("not a minimal transversal of E_i");
  auto p = detail::slide_parent_or_none(g, d, c, i, skip_ancestry(g, d, i, c));
  if (!p) throw std::domain_error("not an H-child");
  return std::move(*p);
}

/// Slide children of p in tr(E_i). Candidates p - r + {a1, a2}, with a1, a2
/// at the two ends of r, are tried in order of (r, a1, a2). Since r joins a
/// member to a free vertex of the child, only r with an end adjacent to b_i
/// is tried.
class SlideChildren {
 public:
  SlideChildren(const Graph& g, const MatchingDecomposition& d, EdgeSubset p, int i)
      : g_(&g), d_(&d), p_(std::move(p)), level_(i) {
    for (EdgeId r : p_) {
      const Edge& re = g.edge(r);
      if (!near_b(re.u) && !near_b(re.v)) continue;
      removable_.push_back(r);
    }
  }

  std::optional<EdgeSubset> next() {
    while (r_ < removable_.size()) {
      const EdgeId r = removable_[r_];
      const Edge& re = g_->edge(r);
      const auto inc_u = g_->incidence(re.u);
      const auto inc_v = g_->incidence(re.v);
      while (a_ < inc_u.size()) {
        const EdgeId a1 = inc_u[a_];
        if (a1 == r || p_.contains(a1)) {
          ++a_;
          c_ = 0;
          continue;
        }
        while (c_ < inc_v.size()) {
          const EdgeId a2 = inc_v[c_++];
          if (a2 == r || p_.contains(a2)) continue;
          EdgeSubset cand = p_;
          cand.erase(r);
          cand.insert(a1);
          cand.insert(a2);
          auto anc = try_skip_ancestry(*g_, *d_, level_, cand);
          if (!anc) continue;
          const auto back = detail::slide_parent_or_none(*g_, *d_, cand, level_, std::move(*anc));
          if (back && *back == p_) return cand;
        }
        ++a_;
        c_ = 0;
      }
      ++r_;
      a_ = 0;
      c_ = 0;
    }
    return std::nullopt;
  }

  const EdgeSubset& parent() const { return p_; }

 private:
  bool near_b(VertexId z) const {
    const MatchedEdge& b = d_->matched(level_);
    return g_->adjacent(z, b.x) || g_->adjacent(z, b.y);
  }

  const Graph* g_;
  const MatchingDecomposition* d_;
  EdgeSubset p_;
  int level_;
  std::vector<EdgeId> removable_;
  std::size_t r_ = 0;
  std::size_t a_ = 0;
  std::size_t c_ = 0;
};

inline std::vector<EdgeSubset> slide_children(const Graph& g, const MatchingDecomposition& d,
                                              const EdgeSubset& p, int i) {
  SlideChildren it(g, d, p, i);
  std::vector<EdgeSubset> out;
  while (auto c = it.next()) out.push_back(std::move(*c));
  return out;
}

}  // namespace medenum

#endif  // MEDENUM_SLIDE_HPP_
