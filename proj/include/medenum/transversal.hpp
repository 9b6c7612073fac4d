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

#ifndef MEDENUM_TRANSVERSAL_HPP_
#define MEDENUM_TRANSVERSAL_HPP_

// Transversals of prefixes of the edge-neighborhood hypergraph.
//
// The hyperedge sequence is F_1, ..., F_m with F_t = N[e] for the edge e of
// rank t-1. A prefix of length j is the first j hyperedges; a minimal
// transversal of it is an edge set (members anywhere in E) that meets every
// F_1..F_j and whose every member owns at least one of them privately.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "medenum/decomposition.hpp"
#include "medenum/edge_subset.hpp"
#include "medenum/graph.hpp"
#include "medenum/work_meter.hpp"

namespace medenum {

struct LevelContext {
  const Graph& graph;
  const MatchingDecomposition& decomp;
  std::size_t j;

  static LevelContext for_level(const Graph& g, const MatchingDecomposition& d, int i) {
    return {g, d, d.level_boundary(i)};
  }

  bool in_prefix(EdgeId f) const { return decomp.rank(f) < j; }
};

/// Ownership of the prefix hyperedges by the members of an edge set: which
/// hyperedges are missed, and which are met by exactly one member. Building
/// a profile is one work step.
class PrivateProfile {
 public:
  PrivateProfile(const LevelContext& ctx, const EdgeSubset& t)
      : owner_(ctx.graph.edge_count(), kNone),
        count_(ctx.graph.edge_count(), 0) {
    if (ctx.j > ctx.decomp.edge_count())
      throw std::out_of_range("prefix length " + std::to_string(ctx.j) + " exceeds |E|");
    work_meter.tick();
    for (std::size_t r = 0; r < ctx.j; ++r) {
      const EdgeId f = ctx.decomp.edge_at_rank(r);
      const EdgeSubset& nf = ctx.graph.closed_edge_neighborhood(f);
      const std::size_t hits = nf.intersection_size(t);
      if (hits == 0) {
        ++missed_;
        owner_[f] = kMissed;
      } else if (hits == 1) {
        const EdgeId v = *nf.first_common(t);
        owner_[f] = v;
        ++count_[v];
      }
    }
    for (EdgeId v : t)
      if (count_[v] == 0) ++redundant_;
  }

  bool dominates() const { return missed_ == 0; }
  bool irredundant() const { return redundant_ == 0; }
  bool is_minimal() const { return dominates() && irredundant(); }

  std::size_t private_count(EdgeId member) const { return count_.at(member); }

  /// The member owning prefix hyperedge N[f] privately, if any.
  std::optional<EdgeId> owner(EdgeId f) const {
    const EdgeId o = owner_.at(f);
    if (o < 0) return std::nullopt;
    return o;
  }

  bool missed(EdgeId f) const { return owner_.at(f) == kMissed; }

  /// P(member, t) restricted to the prefix, as hyperedge names (edges).
  EdgeSubset privates(EdgeId member) const {
    EdgeSubset s(owner_.size());
    for (std::size_t f = 0; f < owner_.size(); ++f)
      if (owner_[f] == member) s.insert(static_cast<EdgeId>(f));
    return s;
  }

  template <class F>
  void for_each_private(EdgeId member, F&& fn) const {
    for (std::size_t f = 0; f < owner_.size(); ++f)
      if (owner_[f] == member) fn(static_cast<EdgeId>(f));
  }

 private:
  static constexpr EdgeId kNone = -1;
  static constexpr EdgeId kMissed = -2;

  std::vector<EdgeId> owner_;
  std::vector<std::uint32_t> count_;
  std::size_t missed_ = 0;
  std::size_t redundant_ = 0;
};

inline EdgeSubset private_neighbors(const LevelContext& ctx, EdgeId e, const EdgeSubset& t) {
  if (!t.contains(e))
    throw std::invalid_argument("edge " + std::to_string(e) + " is not a member of the set");
  return PrivateProfile(ctx, t).privates(e);
}

inline bool is_minimal_transversal(const LevelContext& ctx, const EdgeSubset& t) {
  return PrivateProfile(ctx, t).is_minimal();
}

namespace detail {

// One step of Berge's parent map for t in tr(F_j), using its profile at j.
inline EdgeSubset berge_step(const LevelContext& ctx, const PrivateProfile& p,
                             EdgeSubset t) {
  if (!p.is_minimal())
    throw std::logic_error("berge step applied to a non-minimal transversal");
  const EdgeId last = ctx.decomp.edge_at_rank(ctx.j - 1);
  if (auto v = p.owner(last); v && p.private_count(*v) == 1) t.erase(*v);
  return t;
}

}  // namespace detail

/// Q'(t, j): t itself when t is already minimal for the (j-1)-prefix,
/// otherwise t minus the unique member whose only private hyperedge is F_j.
inline EdgeSubset berge_parent(const LevelContext& ctx, const EdgeSubset& t) {
  if (ctx.j == 0) throw std::domain_error("berge parent needs a prefix of length >= 1");
  PrivateProfile p(ctx, t);
  if (!p.is_minimal())
    throw std::domain_error("berge parent needs a minimal transversal of the prefix");
  return detail::berge_step(ctx, p, t);
}

/// Q'_{to}(t, from): the Berge ancestor of t in tr(F_to). t must be in
/// tr(F_from). When `support` is given it receives the ancestor at prefix
/// length to + 1.
inline EdgeSubset berge_ancestor(const Graph& g, const MatchingDecomposition& d,
                                 std::size_t from, std::size_t to, EdgeSubset t,
                                 EdgeSubset* support = nullptr) {
  if (support && from == to + 1) *support = t;
  for (std::size_t j = from; j > to; --j) {
    LevelContext ctx{g, d, j};
    PrivateProfile p(ctx, t);
    if (j == from && !p.is_minimal())
      throw std::domain_error("ancestor chain needs a minimal transversal at its start");
    t = detail::berge_step(ctx, p, std::move(t));
    if (support && j == to + 2) *support = t;
  }
  return t;
}

/// Q(t, i): the ancestor of t in tr(E_{i-1}).
inline EdgeSubset skip_parent(const Graph& g, const MatchingDecomposition& d, int i,
                              const EdgeSubset& t) {
  if (i < 1 || i > d.levels())
    throw std::domain_error("skip parent level " + std::to_string(i) + " out of range");
  return berge_ancestor(g, d, d.level_boundary(i), d.level_boundary(i - 1), t);
}

/// Both ends of the chain from tr(E_i) down to tr(E_{i-1}): the skip parent
/// and the ancestor one step above it, at the prefix ending with N[b_i].
struct SkipAncestry {
  EdgeSubset parent;
  EdgeSubset support;
};

inline SkipAncestry skip_ancestry(const Graph& g, const MatchingDecomposition& d, int i,
                                  const EdgeSubset& t) {
  const std::size_t from = d.level_boundary(i);
  const std::size_t to = d.level_boundary(i - 1);
  SkipAncestry out{EdgeSubset(g.edge_count()), EdgeSubset(g.edge_count())};
  out.parent = berge_ancestor(g, d, from, to, t, &out.support);
  return out;
}

/// skip_ancestry for candidates: nullopt when t is not in tr(E_i). The
/// minimality test shares its profile with the first step of the chain.
inline std::optional<SkipAncestry> try_skip_ancestry(const Graph& g,
                                                     const MatchingDecomposition& d, int i,
                                                     const EdgeSubset& t) {
  const std::size_t from = d.level_boundary(i);
  const std::size_t to = d.level_boundary(i - 1);
  const LevelContext top{g, d, from};
  const PrivateProfile p(top, t);
  if (!p.is_minimal()) return std::nullopt;
  SkipAncestry out{detail::berge_step(top, p, t), EdgeSubset(g.edge_count())};
  if (from == to + 1) {
    out.support = t;
    return out;
  }
  out.parent = berge_ancestor(g, d, from - 1, to, std::move(out.parent), &out.support);
  return out;
}

}  // namespace medenum

#endif  // MEDENUM_TRANSVERSAL_HPP_
