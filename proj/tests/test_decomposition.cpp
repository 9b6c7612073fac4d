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

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "medenum/decomposition.hpp"
#include "medenum/oracle.hpp"

namespace medenum {
namespace {

using testing::Fixture;

std::vector<EdgeId> rank_order(const MatchingDecomposition& d) {
  std::vector<EdgeId> out;
  for (std::size_t r = 0; r < d.edge_count(); ++r) out.push_back(d.edge_at_rank(r));
  return out;
}

TEST(Decomposition, P4) {
  const Fixture f = testing::p4();
  const auto d = build_decomposition(f.g());
  ASSERT_EQ(d.levels(), 2);
  EXPECT_EQ(d.matched(1).edge, f.e("a-b"));
  EXPECT_EQ(d.matched(2).edge, f.e("c-d"));
  EXPECT_EQ(d.level_of_edge(f.e("a-b")), 1);
  EXPECT_EQ(d.level_of_edge(f.e("c-d")), 2);
  EXPECT_EQ(d.level_of_edge(f.e("b-c")), 2);
  EXPECT_EQ(rank_order(d), (std::vector<EdgeId>{f.e("a-b"), f.e("c-d"), f.e("b-c")}));
  EXPECT_EQ(d.level_boundary(0), 0u);
  EXPECT_EQ(d.level_boundary(1), 1u);
  EXPECT_EQ(d.level_boundary(2), 3u);
}

TEST(Decomposition, K3) {
  const Fixture f = testing::k3();
  const auto d = build_decomposition(f.g());
  ASSERT_EQ(d.levels(), 1);
  EXPECT_EQ(d.matched(1).x, f.v("a"));
  EXPECT_EQ(d.matched(1).y, f.v("b"));
  EXPECT_EQ(rank_order(d), (std::vector<EdgeId>{f.e("a-b"), f.e("c-a"), f.e("b-c")}));
}

TEST(Decomposition, SingleEdge) {
  const Fixture f = testing::single_edge();
  const auto d = build_decomposition(f.g());
  EXPECT_EQ(d.levels(), 1);
  EXPECT_EQ(d.level_of_edge(0), 1);
}

TEST(Decomposition, EmptyGraphIsRejected) {
  EXPECT_THROW(build_decomposition(Graph(3, {})), std::domain_error);
}

TEST(Decomposition, PrefixEdges) {
  const Fixture f = testing::p4();
  const auto d = build_decomposition(f.g());
  EXPECT_EQ(prefix_edges(d, 1), f.set({"a-b"}));
  EXPECT_EQ(prefix_edges(d, 3), f.set({"a-b", "b-c", "c-d"}));
  EXPECT_TRUE(prefix_edges(d, 0).empty());
  EXPECT_THROW(prefix_edges(d, 4), std::out_of_range);
}

// Every structural invariant of the decomposition, on many random graphs.
TEST(Decomposition, InvariantsOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const std::size_t n = 2 + seed % 9;
    const std::size_t m = 1 + seed % (n * (n - 1) / 2);
    const Graph g = oracle::random_graph(n, m, seed);
    const auto d = build_decomposition(g);
    const int k = d.levels();

    // A maximal matching.
    for (int i = 1; i <= k; ++i)
      for (int j = i + 1; j <= k; ++j) {
        const Edge& a = g.edge(d.matched(i).edge);
        const Edge& b = g.edge(d.matched(j).edge);
        EXPECT_FALSE(a.has(b.u) || a.has(b.v));
      }
    for (const Edge& e : g.edges()) {
      bool meets = false;
      for (int i = 1; i <= k; ++i) {
        const Edge& b = g.edge(d.matched(i).edge);
        meets = meets || b.has(e.u) || b.has(e.v);
      }
      EXPECT_TRUE(meets);
    }

    // Ranks are a bijection, blocks come in level order, and each block
    // lists b_i, then its x side, then its y side.
    std::vector<bool> seen(g.edge_count(), false);
    for (std::size_t r = 0; r < g.edge_count(); ++r) {
      const EdgeId e = d.edge_at_rank(r);
      EXPECT_EQ(d.rank(e), r);
      EXPECT_FALSE(seen[e]);
      seen[e] = true;
      if (r > 0) {
        EXPECT_LE(d.level_of_edge(d.edge_at_rank(r - 1)), d.level_of_edge(e));
      }
    }
    for (int i = 1; i <= k; ++i) {
      const MatchedEdge& b = d.matched(i);
      EXPECT_LT(b.x, b.y);
      EXPECT_EQ(d.rank(b.edge), d.level_boundary(i - 1));
      for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const auto id = static_cast<EdgeId>(e);
        if (d.level_of_edge(id) != i || id == b.edge) continue;
        const Edge& ed = g.edge(id);
        EXPECT_TRUE(ed.has(b.x) || ed.has(b.y));
        if (!ed.has(b.x)) continue;
        for (std::size_t f = 0; f < g.edge_count(); ++f) {
          const auto fid = static_cast<EdgeId>(f);
          if (d.level_of_edge(fid) == i && fid != b.edge && !g.edge(fid).has(b.x)) {
            EXPECT_LT(d.rank(id), d.rank(fid));
          }
        }
      }
      // The first |E_i| ranks are exactly E_i.
      const EdgeSubset pre = d.prefix_edges(d.level_boundary(i));
      for (std::size_t e = 0; e < g.edge_count(); ++e)
        EXPECT_EQ(pre.contains(static_cast<EdgeId>(e)), d.level_of_edge(static_cast<EdgeId>(e)) <= i);
    }
    // E_1 is adjacent to b_1.
    const Edge& b1 = g.edge(d.matched(1).edge);
    for (std::size_t e = 0; e < g.edge_count(); ++e)
      if (d.level_of_edge(static_cast<EdgeId>(e)) == 1) {
        const Edge& ed = g.edge(static_cast<EdgeId>(e));
        EXPECT_TRUE(b1.has(ed.u) || b1.has(ed.v));
      }
  }
}

}  // namespace
}  // namespace medenum
