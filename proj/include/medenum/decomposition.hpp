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

#ifndef MEDENUM_DECOMPOSITION_HPP_
#define MEDENUM_DECOMPOSITION_HPP_

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "medenum/edge_subset.hpp"
#include "medenum/graph.hpp"

namespace medenum {

/// One matching edge b_i = x_i y_i, with x_i the endpoint of smaller id.
struct MatchedEdge {
  EdgeId edge;
  VertexId x;
  VertexId y;
};

/// Level structure induced by a maximal matching b_1..b_k.
///
/// A vertex matched by b_i has level i, an unmatched vertex level 0, and an
/// edge has the larger level of its endpoints. V_i and E_i are then the
/// vertices and edges of level at most i, and B_i the edges of level exactly
/// i. The edge order lists E_1 first and then each B_i as b_i, the remaining
/// x_i edges, the remaining y_i edges, ties broken by edge id. Prefixes of
/// this order of length |E_i| are therefore exactly E_i.
class MatchingDecomposition {
 public:
  static MatchingDecomposition build(const Graph& g) {
    if (g.edge_count() == 0)
      throw std::domain_error("decomposition requires at least one edge");
    MatchingDecomposition d;
    d.vertex_level_.assign(g.vertex_count(), 0);
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      const Edge& ed = g.edge(static_cast<EdgeId>(e));
      if (d.vertex_level_[ed.u] == 0 && d.vertex_level_[ed.v] == 0) {
        d.matching_.push_back({static_cast<EdgeId>(e), ed.u, ed.v});
        const int level = static_cast<int>(d.matching_.size());
        d.vertex_level_[ed.u] = level;
        d.vertex_level_[ed.v] = level;
      }
    }

    const int k = d.levels();
    d.edge_level_.resize(g.edge_count());
    std::vector<std::vector<EdgeId>> x_side(k + 1), y_side(k + 1);
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      const Edge& ed = g.edge(static_cast<EdgeId>(e));
      const int level = std::max(d.vertex_level_[ed.u], d.vertex_level_[ed.v]);
      d.edge_level_[e] = level;
      const MatchedEdge& b = d.matched(level);
      if (b.edge == static_cast<EdgeId>(e)) continue;
      if (ed.has(b.x)) x_side[level].push_back(static_cast<EdgeId>(e));
      else y_side[level].push_back(static_cast<EdgeId>(e));
    }

    d.rank_.assign(g.edge_count(), 0);
    d.boundary_.assign(static_cast<std::size_t>(k) + 1, 0);
    for (int i = 1; i <= k; ++i) {
      d.order_.push_back(d.matched(i).edge);
      d.order_.insert(d.order_.end(), x_side[i].begin(), x_side[i].end());
      d.order_.insert(d.order_.end(), y_side[i].begin(), y_side[i].end());
      d.boundary_[i] = d.order_.size();
    }
    for (std::size_t r = 0; r < d.order_.size(); ++r)
      d.rank_[static_cast<std::size_t>(d.order_[r])] = r;
    return d;
  }

  /// k, the number of matching edges.
  int levels() const { return static_cast<int>(matching_.size()); }

  /// b_i for 1 <= i <= k.
  const MatchedEdge& matched(int i) const {
    if (i < 1 || i > levels())
      throw std::out_of_range("level " + std::to_string(i) + " out of range");
    return matching_[static_cast<std::size_t>(i) - 1];
  }
  const std::vector<MatchedEdge>& matching() const { return matching_; }

  int level_of_edge(EdgeId e) const { return edge_level_.at(static_cast<std::size_t>(e)); }
  int level_of_vertex(VertexId v) const { return vertex_level_.at(static_cast<std::size_t>(v)); }

  /// v in V_i.
  bool in_level_vertices(VertexId v, int i) const { return level_of_vertex(v) <= i; }

  std::size_t rank(EdgeId e) const { return rank_.at(static_cast<std::size_t>(e)); }
  EdgeId edge_at_rank(std::size_t r) const { return order_.at(r); }
  std::span<const EdgeId> order() const { return order_; }
  std::size_t edge_count() const { return order_.size(); }

  /// |E_i| for 0 <= i <= k.
  std::size_t level_boundary(int i) const {
    if (i < 0 || i > levels())
      throw std::out_of_range("level " + std::to_string(i) + " out of range");
    return boundary_[static_cast<std::size_t>(i)];
  }

  /// The j edges of smallest rank.
  EdgeSubset prefix_edges(std::size_t j) const {
    if (j > order_.size())
      throw std::out_of_range("prefix length " + std::to_string(j) + " exceeds |E|");
    EdgeSubset s(order_.size());
    for (std::size_t r = 0; r < j; ++r) s.insert(order_[r]);
    return s;
  }

 private:
  std::vector<MatchedEdge> matching_;
  std::vector<int> vertex_level_;
  std::vector<int> edge_level_;
  std::vector<EdgeId> order_;
  std::vector<std::size_t> rank_;
  std::vector<std::size_t> boundary_;
};

inline MatchingDecomposition build_decomposition(const Graph& g) {
  return MatchingDecomposition::build(g);
}

inline EdgeSubset prefix_edges(const MatchingDecomposition& d, std::size_t j) {
  return d.prefix_edges(j);
}

}  // namespace medenum

#endif  // MEDENUM_DECOMPOSITION_HPP_
