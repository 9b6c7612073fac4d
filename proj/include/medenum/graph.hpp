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

#ifndef MEDENUM_GRAPH_HPP_
#define MEDENUM_GRAPH_HPP_

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "medenum/edge_subset.hpp"

namespace medenum {

struct Edge {
  VertexId u;
  VertexId v;

  bool has(VertexId w) const { return u == w || v == w; }
  VertexId other(VertexId w) const { return w == u ? v : u; }
};

/// Simple undirected graph. Edge ids are dense and follow construction
/// order; every edge is stored with u < v. Immutable once built.
class Graph {
 public:
  Graph() = default;

  Graph(std::size_t vertex_count, std::vector<Edge> edges)
      : vertex_count_(vertex_count), edges_(std::move(edges)),
        incidence_(vertex_count) {
    std::set<std::pair<VertexId, VertexId>> seen;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      Edge& e = edges_[i];
      if (e.u < 0 || e.v < 0 || static_cast<std::size_t>(e.u) >= vertex_count ||
          static_cast<std::size_t>(e.v) >= vertex_count)
        throw std::invalid_argument("edge " + std::to_string(i) +
                                    " has an endpoint out of range");
      if (e.u == e.v)
        throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
      if (e.u > e.v) std::swap(e.u, e.v);
      if (!seen.emplace(e.u, e.v).second)
        throw std::invalid_argument("parallel edge " + std::to_string(e.u) + "-" +
                                    std::to_string(e.v));
      incidence_[e.u].push_back(static_cast<EdgeId>(i));
      incidence_[e.v].push_back(static_cast<EdgeId>(i));
    }
    neighborhoods_.reserve(edges_.size());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      EdgeSubset n(edges_.size());
      for (EdgeId f : incidence_[edges_[i].u]) n.insert(f);
      for (EdgeId f : incidence_[edges_[i].v]) n.insert(f);
      neighborhoods_.push_back(std::move(n));
    }
  }

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }

  const Edge& edge(EdgeId e) const {
    check_edge(e);
    return edges_[static_cast<std::size_t>(e)];
  }
  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const EdgeId> incidence(VertexId v) const {
    check_vertex(v);
    return incidence_[static_cast<std::size_t>(v)];
  }

  std::size_t degree(VertexId v) const { return incidence(v).size(); }

  std::optional<EdgeId> find_edge(VertexId a, VertexId b) const {
    check_vertex(a);
    check_vertex(b);
    const auto& shorter = incidence_[a].size() <= incidence_[b].size()
                              ? incidence_[a] : incidence_[b];
    for (EdgeId e : shorter) {
      const Edge& ed = edges_[static_cast<std::size_t>(e)];
      if ((ed.u == a && ed.v == b) || (ed.u == b && ed.v == a)) return e;
    }
    return std::nullopt;
  }

  bool adjacent(VertexId a, VertexId b) const { return find_edge(a, b).has_value(); }

  /// N[e]: the edges sharing an endpoint with e, e included.
  const EdgeSubset& closed_edge_neighborhood(EdgeId e) const {
    check_edge(e);
    return neighborhoods_[static_cast<std::size_t>(e)];
  }

  EdgeSubset incident_edges(VertexId v) const {
    return EdgeSubset::from_range(edges_.size(), incidence(v));
  }

  bool touches(const EdgeSubset& t, VertexId v) const {
    for (EdgeId e : incidence(v))
      if (t.contains(e)) return true;
    return false;
  }

  bool is_edge_dominating(const EdgeSubset& t) const {
    for (const auto& n : neighborhoods_)
      if (!n.intersects(t)) return false;
    return true;
  }

  EdgeSubset empty_subset() const { return EdgeSubset(edges_.size()); }

 private:
  void check_edge(EdgeId e) const {
    if (e < 0 || static_cast<std::size_t>(e) >= edges_.size())
      throw std::out_of_range("invalid edge id " + std::to_string(e));
  }
  void check_vertex(VertexId v) const {
    if (v < 0 || static_cast<std::size_t>(v) >= vertex_count_)
      throw std::out_of_range("invalid vertex id " + std::to_string(v));
  }

  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
  std::vector<EdgeSubset> neighborhoods_;
};

inline EdgeSubset closed_edge_neighborhood(const Graph& g, EdgeId e) {
  return g.closed_edge_neighborhood(e);
}

inline EdgeSubset incident_edges(const Graph& g, VertexId v) {
  return g.incident_edges(v);
}

inline bool is_edge_dominating(const Graph& g, const EdgeSubset& t) {
  return g.is_edge_dominating(t);
}

}  // namespace medenum

#endif  // MEDENUM_GRAPH_HPP_
