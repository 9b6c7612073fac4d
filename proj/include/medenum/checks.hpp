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

#ifndef MEDENUM_CHECKS_HPP_
#define MEDENUM_CHECKS_HPP_

// Differential checks of the enumerator against the oracle. These hold every
// intermediate family in memory and are meant for small graphs only.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "medenum/enumerator.hpp"
#include "medenum/oracle.hpp"
#include "medenum/skip_children.hpp"
#include "medenum/slide.hpp"

namespace medenum::checks {

enum class DiffKind { missing, extra, duplicate };

inline const char* to_string(DiffKind k) {
  switch (k) {
    case DiffKind::missing: return "missing";
    case DiffKind::extra: return "extra";
    case DiffKind::duplicate: return "duplicate";
  }
  return "?";
}

struct Difference {
  DiffKind kind;
  EdgeSubset set;
};

/// First discrepancy between a produced family and the expected one, or
/// nullopt when they are equal as sets and `got` has no repeats.
inline std::optional<Difference> compare_families(std::vector<EdgeSubset> got,
                                                  std::vector<EdgeSubset> want) {
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  if (auto it = std::adjacent_find(got.begin(), got.end()); it != got.end())
    return Difference{DiffKind::duplicate, *it};
  std::vector<EdgeSubset> diff;
  std::set_difference(want.begin(), want.end(), got.begin(), got.end(), std::back_inserter(diff));
  if (!diff.empty()) return Difference{DiffKind::missing, diff.front()};
  std::set_difference(got.begin(), got.end(), want.begin(), want.end(), std::back_inserter(diff));
  if (!diff.empty()) return Difference{DiffKind::extra, diff.front()};
  return std::nullopt;
}

struct LevelIssue {
  int level = 0;
  std::string what;
  EdgeSubset witness;
};

struct LevelReport {
  std::size_t parents = 0;
  std::size_t children = 0;
  std::size_t h_children = 0;
  std::vector<LevelIssue> issues;

  bool ok() const { return issues.empty(); }
};

/// For every level i: every member of tr(E_{i-1}) has a child, the child
/// streams of all of them together produce tr(E_i) exactly once, and every
/// H-child has a slide parent in tr(E_i) one edge smaller.
inline LevelReport level_check(const Graph& g) {
  LevelReport rep;
  if (g.edge_count() == 0) return rep;
  const auto d = MatchingDecomposition::build(g);
  for (int i = 1; i <= d.levels(); ++i) {
    const auto parents = oracle::brute_force_tr(g, d, d.level_boundary(i - 1));
    const auto want = oracle::brute_force_tr(g, d, d.level_boundary(i));
    std::vector<EdgeSubset> got;
    for (const auto& t : parents) {
      auto ch = enumerate_children(g, d, t, i);
      if (ch.empty()) rep.issues.push_back({i, "childless parent", t});
      ++rep.parents;
      for (auto& c : ch) got.push_back(std::move(c));
    }
    rep.children += got.size();
    if (auto diff = compare_families(std::move(got), want))
      rep.issues.push_back({i, std::string("partition: ") + to_string(diff->kind) + " child",
                            diff->set});
    const LevelContext ctx = LevelContext::for_level(g, d, i);
    for (const auto& c : want) {
      if (!is_h_child(g, d, c, i)) continue;
      ++rep.h_children;
      const EdgeSubset p = slide_parent(g, d, c, i);
      if (p.size() + 1 != c.size())
        rep.issues.push_back({i, "slide parent is not one edge smaller", c});
      else if (!is_minimal_transversal(ctx, p))
        rep.issues.push_back({i, "slide parent is not a minimal transversal", c});
    }
  }
  return rep;
}

struct AnchoredReport {
  std::size_t instances = 0;
  std::size_t selections = 0;
  std::vector<LevelIssue> issues;

  bool ok() const { return issues.empty(); }
};

/// On every (T, i) where T already meets exactly one end of b_i, the raw
/// selection product (no verification) equals the oracle's selection
/// children of T that use no H-pattern edge.
inline AnchoredReport anchored_selection_check(const Graph& g) {
  AnchoredReport rep;
  if (g.edge_count() == 0) return rep;
  const auto d = MatchingDecomposition::build(g);
  for (int i = 1; i <= d.levels(); ++i) {
    const MatchedEdge& b = d.matched(i);
    const auto parents = oracle::brute_force_tr(g, d, d.level_boundary(i - 1));
    const auto level_tr = oracle::brute_force_tr(g, d, d.level_boundary(i));
    for (const auto& t : parents) {
      const bool tx = g.touches(t, b.x);
      const bool ty = g.touches(t, b.y);
      if (tx == ty) continue;
      ++rep.instances;
      std::vector<EdgeSubset> want;
      for (const auto& c : level_tr) {
        const SkipAncestry anc = skip_ancestry(g, d, i, c);
        if (!(anc.parent == t)) continue;
        if (!is_selection_class(g, d, i, c, anc.support)) continue;
        if (!is_h_child(g, d, c, i)) want.push_back(c);
      }
      const BorderAnalysis a = analyze(g, d, t, i, std::nullopt, tx ? Side::x : Side::y);
      std::vector<EdgeSubset> got;
      if (!a.blocks_extension() && !a.free_vertices.empty()) {
        for (const Selection& z : enumerate_selections(a)) {
          EdgeSubset c = a.support;
          for (const auto& [v, e] : z) c.insert(e);
          got.push_back(std::move(c));
        }
      }
      rep.selections += got.size();
      if (auto diff = compare_families(std::move(got), std::move(want)))
        rep.issues.push_back({i, std::string("selection product: ") + to_string(diff->kind),
                              diff->set});
    }
  }
  return rep;
}

struct ImtOutcome {
  bool selection_exists = false;
  bool x_set_empty = false;
  std::size_t free_vertices = 0;
};

/// Analyses a reduction instance at its level with xw as the anchor covering
/// x, and searches every selection of border edges for one that completes T
/// to a member of tr(E_i).
inline ImtOutcome imt_outcome(const oracle::ImtInstance& inst) {
  const Graph& g = inst.graph;
  const auto d = MatchingDecomposition::build(g);
  EdgeSubset parent = inst.base_transversal;
  parent.erase(inst.anchor);
  const BorderAnalysis a = analyze(g, d, parent, inst.level, inst.anchor, Side::x);
  std::vector<std::vector<EdgeId>> options;
  for (VertexId z : a.free_vertices) {
    std::vector<EdgeId> at;
    for (EdgeId e : g.incidence(z))
      if (a.border_edges.contains(e)) at.push_back(e);
    options.push_back(std::move(at));
  }
  ImtOutcome out;
  out.x_set_empty = a.x_set.empty();
  out.free_vertices = a.free_vertices.size();
  out.selection_exists =
      oracle::find_valid_selection(g, d, inst.level, inst.base_transversal, options).has_value();
  return out;
}

}  // namespace medenum::checks

#endif  // MEDENUM_CHECKS_HPP_
