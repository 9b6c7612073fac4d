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

#ifndef MEDENUM_ENUMERATOR_HPP_
#define MEDENUM_ENUMERATOR_HPP_

// Depth-first traversal over the levels. A member T of tr(E_{i-1}) has as
// children the non-extra and non-H selection skip-children of T, each
// followed by its slide subtree; at level k the children are the solutions.
// Every stream is lazy and the stack holds one stream per level, so memory
// stays polynomial no matter how many solutions there are.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "medenum/decomposition.hpp"
#include "medenum/edge_subset.hpp"
#include "medenum/graph.hpp"
#include "medenum/skip_children.hpp"
#include "medenum/slide.hpp"
#include "medenum/transversal.hpp"
#include "medenum/work_meter.hpp"

namespace medenum {

/// The children of T at level i together with their slide subtrees.
///
/// Slide subtrees are walked with alternating output: a node at even depth
/// is returned when it is entered, one at odd depth when it is left. Between
/// two returns the walk then moves at most two tree edges.
class ChildStream {
 public:
  ChildStream(const Graph& g, const MatchingDecomposition& d, EdgeSubset t, int i)
      : g_(&g), d_(&d), t_(std::move(t)), level_(i), nonextra_(g, d, t_, i) {}

  ChildStream(const ChildStream&) = delete;
  ChildStream& operator=(const ChildStream&) = delete;

  std::optional<EdgeSubset> next() {
    while (true) {
      if (!slide_.empty()) {
        Frame& top = *slide_.back();
        if (auto c = top.children.next()) {
          const int depth = top.depth + 1;
          if (depth % 2 == 0) {
            push(*c, depth);
            return c;
          }
          push(std::move(*c), depth);
          continue;
        }
        std::unique_ptr<Frame> done = std::move(slide_.back());
        slide_.pop_back();
        if (done->depth % 2 == 1) return done->children.parent();
        continue;
      }
      auto root = next_root();
      if (!root) return std::nullopt;
      push(*root, 0);
      return root;
    }
  }

  const EdgeSubset& parent() const { return t_; }
  int level() const { return level_; }
  std::size_t slide_depth() const { return slide_.size(); }

 private:
  struct Frame {
    SlideChildren children;
    int depth;
  };

  void push(EdgeSubset node, int depth) {
    slide_.push_back(std::make_unique<Frame>(
        Frame{SlideChildren(*g_, *d_, std::move(node), level_), depth}));
  }

  std::optional<EdgeSubset> next_root() {
    if (!extra_) {
      if (auto c = nonextra_.next()) return c;
      extra_.emplace(*g_, *d_, t_, level_);
    }
    return extra_->next();
  }

  const Graph* g_;
  const MatchingDecomposition* d_;
  EdgeSubset t_;
  int level_;
  NonExtraChildren nonextra_;
  std::optional<ExtraChildren> extra_;
  std::vector<std::unique_ptr<Frame>> slide_;
};

struct EnumEvent {
  EdgeSubset solution;
  std::uint64_t ordinal = 0;
  std::uint64_t delay_steps = 0;
};

struct EnumStats {
  std::uint64_t solutions = 0;
  std::uint64_t max_delay_steps = 0;
  std::uint64_t total_steps = 0;
  std::uint64_t peak_live_sets = 0;
  std::size_t recursion_depth_max = 0;
};

struct EnumOptions {
  /// Record every visited member of tr(E_{i-1}), i < k+1, whose stream is
  /// empty. Such a member would contradict the irredundancy of the tree.
  bool check_children_nonempty = false;
  /// Test hook: silently discard the n-th child produced (0-based) over
  /// the whole run.
  std::optional<std::uint64_t> drop_child;
};

struct ChildlessNode {
  EdgeSubset parent;
  int level;
};

/// Pull-based enumeration of all minimal edge dominating sets of g. The
/// graph must outlive the enumerator.
class Enumerator {
 public:
  explicit Enumerator(const Graph& g, EnumOptions options = {})
      : g_(&g), options_(std::move(options)) {
    const std::int64_t before = live_sets.live;
    live_sets.reset_peak();
    if (g.edge_count() > 0) d_.emplace(MatchingDecomposition::build(g));
    if (d_) push(g.empty_subset(), 1);
    note_peak(before);
    held_ = live_sets.live - before;
  }

  Enumerator(Graph&&, EnumOptions = {}) = delete;  // the graph must outlive us
  Enumerator(const Enumerator&) = delete;
  Enumerator& operator=(const Enumerator&) = delete;

  // Sets held by the caller do not change while next() runs, so the
  // enumerator's own sets are the ones it held on entry plus the growth of
  // the thread's live count since then.
  std::optional<EnumEvent> next() {
    const std::uint64_t start = work_meter.steps;
    const std::int64_t entry = live_sets.live;
    live_sets.reset_peak();
    auto out = advance();
    pending_ += work_meter.steps - start;
    stats_.total_steps += work_meter.steps - start;
    stats_.max_delay_steps = std::max(stats_.max_delay_steps, pending_);
    note_peak(entry);
    // The returned solution leaves with the caller.
    held_ += live_sets.live - entry - (out ? 1 : 0);
    if (!out) return std::nullopt;
    EnumEvent ev{std::move(*out), stats_.solutions++, pending_};
    pending_ = 0;
    return ev;
  }

  const EnumStats& stats() const { return stats_; }
  const std::vector<ChildlessNode>& childless() const { return childless_; }
  const MatchingDecomposition* decomposition() const { return d_ ? &*d_ : nullptr; }

 private:
  struct Level {
    std::unique_ptr<ChildStream> stream;
    std::uint64_t produced = 0;
  };

  void push(EdgeSubset t, int i) {
    stack_.push_back({std::make_unique<ChildStream>(*g_, *d_, std::move(t), i), 0});
  }

  std::optional<EdgeSubset> advance() {
    if (!d_) {
      if (empty_done_) return std::nullopt;
      empty_done_ = true;
      return g_->empty_subset();
    }
    while (!stack_.empty()) {
      Level& top = stack_.back();
      auto c = top.stream->next();
      track_depth();
      if (!c) {
        if (options_.check_children_nonempty && top.produced == 0)
          childless_.push_back({top.stream->parent(), top.stream->level()});
        stack_.pop_back();
        continue;
      }
      ++top.produced;
      if (options_.drop_child && children_seen_++ == *options_.drop_child) continue;
      const int level = static_cast<int>(stack_.size());
      if (level == d_->levels()) return c;
      push(std::move(*c), level + 1);
    }
    return std::nullopt;
  }

  void note_peak(std::int64_t entry) {
    stats_.peak_live_sets = std::max<std::uint64_t>(
        stats_.peak_live_sets, static_cast<std::uint64_t>(live_sets.peak - entry + held_));
  }

  void track_depth() {
    std::size_t depth = stack_.size();
    for (const Level& l : stack_) depth += l.stream->slide_depth();
    stats_.recursion_depth_max = std::max(stats_.recursion_depth_max, depth);
  }

  const Graph* g_;
  EnumOptions options_;
  std::optional<MatchingDecomposition> d_;
  std::vector<Level> stack_;
  EnumStats stats_;
  std::vector<ChildlessNode> childless_;
  std::uint64_t pending_ = 0;
  std::uint64_t children_seen_ = 0;
  std::int64_t held_ = 0;
  bool empty_done_ = false;
};

/// The stream of children of t at level i, collected.
inline std::vector<EdgeSubset> enumerate_children(const Graph& g, const MatchingDecomposition& d,
                                                  const EdgeSubset& t, int i) {
  if (!is_minimal_transversal(LevelContext::for_level(g, d, i - 1), t))
    throw std::domain_error("children requested for a non-member of tr(E_{i-1})");
  ChildStream s(g, d, t, i);
  std::vector<EdgeSubset> out;
  while (auto c = s.next()) out.push_back(std::move(*c));
  return out;
}

/// tr(E_1), as the children of the empty set.
inline std::vector<EdgeSubset> enumerate_base(const Graph& g, const MatchingDecomposition& d) {
  return enumerate_children(g, d, g.empty_subset(), 1);
}

/// Every minimal edge dominating set, in traversal order.
inline std::vector<EdgeSubset> enumerate_all(const Graph& g, EnumStats* stats = nullptr) {
  Enumerator en(g);
  std::vector<EdgeSubset> out;
  while (auto ev = en.next()) out.push_back(std::move(ev->solution));
  if (stats) *stats = en.stats();
  return out;
}

}  // namespace medenum

#endif  // MEDENUM_ENUMERATOR_HPP_
