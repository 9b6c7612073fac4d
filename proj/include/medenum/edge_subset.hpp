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

#ifndef MEDENUM_EDGE_SUBSET_HPP_
#define MEDENUM_EDGE_SUBSET_HPP_

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace medenum {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

/// Per-thread count of EdgeSubset objects currently alive. The enumerator
/// reads it to report its live-set high-water mark.
struct LiveSetCounter {
  std::int64_t live = 0;
  std::int64_t peak = 0;

  void acquire() {
    ++live;
    if (live > peak) peak = live;
  }
  void release() { --live; }
  void reset_peak() { peak = live; }
};

inline thread_local LiveSetCounter live_sets;

/// A set of edge ids drawn from the fixed universe {0, ..., universe-1}.
/// Membership is O(1); iteration visits members in increasing edge id.
class EdgeSubset {
 public:
  EdgeSubset() { live_sets.acquire(); }

  explicit EdgeSubset(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {
    live_sets.acquire();
  }

  EdgeSubset(std::size_t universe, std::initializer_list<EdgeId> members)
      : EdgeSubset(universe) {
    for (EdgeId e : members) insert(e);
  }

  template <class Range>
  static EdgeSubset from_range(std::size_t universe, const Range& members) {
    EdgeSubset s(universe);
    for (auto e : members) s.insert(static_cast<EdgeId>(e));
    return s;
  }

  EdgeSubset(const EdgeSubset& other)
      : universe_(other.universe_), words_(other.words_) {
    live_sets.acquire();
  }
  EdgeSubset(EdgeSubset&& other) noexcept
      : universe_(other.universe_), words_(std::move(other.words_)) {
    other.words_.assign((other.universe_ + 63) / 64, 0);
    live_sets.acquire();
  }
  EdgeSubset& operator=(const EdgeSubset& other) = default;
  EdgeSubset& operator=(EdgeSubset&& other) noexcept {
    universe_ = other.universe_;
    words_.swap(other.words_);
    return *this;
  }
  ~EdgeSubset() { live_sets.release(); }

  std::size_t universe() const { return universe_; }

  bool contains(EdgeId e) const {
    return e >= 0 && static_cast<std::size_t>(e) < universe_ &&
           ((words_[static_cast<std::size_t>(e) >> 6] >> (e & 63)) & 1u);
  }

  void insert(EdgeId e) {
    check(e);
    words_[static_cast<std::size_t>(e) >> 6] |= std::uint64_t{1} << (e & 63);
  }

  void erase(EdgeId e) {
    check(e);
    words_[static_cast<std::size_t>(e) >> 6] &= ~(std::uint64_t{1} << (e & 63));
  }

  EdgeSubset with(EdgeId e) const {
    EdgeSubset out(*this);
    out.insert(e);
    return out;
  }

  EdgeSubset without(EdgeId e) const {
    EdgeSubset out(*this);
    out.erase(e);
    return out;
  }

  std::size_t size() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  bool empty() const {
    return std::all_of(words_.begin(), words_.end(),
                       [](std::uint64_t w) { return w == 0; });
  }

  void clear() { std::fill(words_.begin(), words_.end(), 0); }

  bool intersects(const EdgeSubset& other) const {
    const std::size_t n = std::min(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < n; ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }

  std::size_t intersection_size(const EdgeSubset& other) const {
    const std::size_t n = std::min(words_.size(), other.words_.size());
    std::size_t c = 0;
    for (std::size_t i = 0; i < n; ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    return c;
  }

  /// Smallest member of the intersection, if any.
  std::optional<EdgeId> first_common(const EdgeSubset& other) const {
    const std::size_t n = std::min(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (auto w = words_[i] & other.words_[i])
        return static_cast<EdgeId>(i * 64 + std::countr_zero(w));
    }
    return std::nullopt;
  }

  bool is_subset_of(const EdgeSubset& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      const std::uint64_t o = i < other.words_.size() ? other.words_[i] : 0;
      if (words_[i] & ~o) return false;
    }
    return true;
  }

  std::optional<EdgeId> min() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return static_cast<EdgeId>(i * 64 + std::countr_zero(words_[i]));
    return std::nullopt;
  }

  EdgeSubset& operator|=(const EdgeSubset& other) {
    same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }
  EdgeSubset& operator&=(const EdgeSubset& other) {
    same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }
  EdgeSubset& operator-=(const EdgeSubset& other) {
    same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
  }

  friend EdgeSubset operator|(EdgeSubset a, const EdgeSubset& b) { return a |= b; }
  friend EdgeSubset operator&(EdgeSubset a, const EdgeSubset& b) { return a &= b; }
  friend EdgeSubset operator-(EdgeSubset a, const EdgeSubset& b) { return a -= b; }

  friend bool operator==(const EdgeSubset& a, const EdgeSubset& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

  /// Total order on subsets of one universe: compares the increasing
  /// member sequences lexicographically. Used for canonical sorting only.
  friend bool operator<(const EdgeSubset& a, const EdgeSubset& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }

  std::uint64_t hash() const {
    std::uint64_t h = 0xcbf29ce484222325ull ^ universe_;
    for (auto w : words_) {
      h ^= w;
      h *= 0x100000001b3ull;
      h ^= h >> 29;
    }
    return h;
  }

  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = EdgeId;
    using difference_type = std::ptrdiff_t;
    using pointer = const EdgeId*;
    using reference = EdgeId;

    const_iterator() = default;
    const_iterator(const EdgeSubset* set, std::size_t word, std::uint64_t bits)
        : set_(set), word_(word), bits_(bits) {
      settle();
    }

    EdgeId operator*() const {
      return static_cast<EdgeId>(word_ * 64 + std::countr_zero(bits_));
    }
    const_iterator& operator++() {
      bits_ &= bits_ - 1;
      settle();
      return *this;
    }
    const_iterator operator++(int) {
      auto tmp = *this;
      ++*this;
      return tmp;
    }
    friend bool operator==(const const_iterator& a, const const_iterator& b) {
      return a.word_ == b.word_ && a.bits_ == b.bits_;
    }

   private:
    void settle() {
      while (bits_ == 0 && set_ && word_ + 1 < set_->words_.size()) {
        ++word_;
        bits_ = set_->words_[word_];
      }
      if (bits_ == 0 && set_) word_ = set_->words_.size();
    }

    const EdgeSubset* set_ = nullptr;
    std::size_t word_ = 0;
    std::uint64_t bits_ = 0;
  };

  const_iterator begin() const {
    if (words_.empty()) return end();
    return const_iterator(this, 0, words_[0]);
  }
  const_iterator end() const { return const_iterator(this, words_.size(), 0); }

  std::vector<EdgeId> to_vector() const { return {begin(), end()}; }

 private:
  void check(EdgeId e) const {
    if (e < 0 || static_cast<std::size_t>(e) >= universe_)
      throw std::out_of_range("edge id " + std::to_string(e) +
                              " outside universe of size " +
                              std::to_string(universe_));
  }
  void same_universe(const EdgeSubset& other) const {
    if (other.universe_ != universe_)
      throw std::invalid_argument("edge subsets over different universes");
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

inline std::ostream& operator<<(std::ostream& os, const EdgeSubset& s) {
  os << '{';
  bool first = true;
  for (EdgeId e : s) {
    if (!first) os << ',';
    os << e;
    first = false;
  }
  return os << '}';
}

struct EdgeSubsetHash {
  std::size_t operator()(const EdgeSubset& s) const {
    return static_cast<std::size_t>(s.hash());
  }
};

}  // namespace medenum

#endif  // MEDENUM_EDGE_SUBSET_HPP_
