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

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "medenum/checks.hpp"
#include "medenum/oracle.hpp"
#include "medenum/skip_children.hpp"
#include "medenum/slide.hpp"

namespace medenum {
namespace {

using testing::Fixture;

std::vector<EdgeSubset> sorted(std::vector<EdgeSubset> v) {
  std::sort(v.begin(), v.end());
  return v;
}

TEST(Analyze, P4FreeVertexWithoutBorderEdges) {
  const Fixture f = testing::p4();
  const auto d = build_decomposition(f.g());
  const BorderAnalysis a = analyze(f.g(), d, f.set({"a-b"}), 2, std::nullopt);
  ASSERT_EQ(a.free_vertices, std::vector<VertexId>{f.v("c")});
  EXPECT_TRUE(a.border_edges.empty());
  EXPECT_TRUE(a.uncovered_free);
  EXPECT_TRUE(a.blocks_extension());
}

TEST(Analyze, HPatternFixture) {
  const Fixture f = testing::fix_h();
  const auto d = build_decomposition(f.g());
  ASSERT_EQ(d.levels(), 4);
  ASSERT_EQ(d.matched(4).edge, f.e("x-y"));
  const EdgeSubset t = f.set({"vl-vj", "u-q"});
  const BorderAnalysis a = analyze(f.g(), d, t, 4, f.e("x-w"));
  EXPECT_EQ(a.support, f.set({"vl-vj", "u-q", "x-w"}));
  EXPECT_EQ(a.free_vertices, (std::vector<VertexId>{f.v("zl"), f.v("zj")}));
  EXPECT_EQ(a.border_edges, f.set({"zl-vl", "zj-vj", "u-zj"}));
  ASSERT_EQ(a.h_patterns.size(), 1u);
  const HPattern& h = a.h_patterns[0];
  EXPECT_EQ(h.edge_vl_vj, f.e("vl-vj"));
  EXPECT_EQ(std::set<EdgeId>({h.edge_zl_vl, h.edge_zj_vj}),
            std::set<EdgeId>({f.e("zl-vl"), f.e("zj-vj")}));
  EXPECT_EQ(a.h_set, f.set({"zl-vl", "zj-vj"}));
  EXPECT_TRUE(a.x_set.empty());
  EXPECT_TRUE(a.preceding_set.empty());
  // zl has no option left once its H edge is excluded.
  EXPECT_TRUE(a.uncovered_free);
  EXPECT_FALSE(a.redundant_found);
  EXPECT_FALSE(a.fail_found);
}

TEST(Analyze, EmptyBaseHasNoRedundantOrFailEdges) {
  const Fixture f = testing::fix_sel();
  const auto d = build_decomposition(f.g());
  const BorderAnalysis a = analyze(f.g(), d, f.set({}), 1, f.e("x-w"));
  EXPECT_FALSE(a.redundant_found);
  EXPECT_FALSE(a.fail_found);
}

TEST(Analyze, RejectsBadInput) {
  const Fixture f = testing::fix_h();
  const auto d = build_decomposition(f.g());
  const EdgeSubset t = f.set({"vl-vj", "u-q"});
  EXPECT_THROW(analyze(f.g(), d, t, 4, f.e("x-y")), std::domain_error);   // b_i itself
  EXPECT_THROW(analyze(f.g(), d, t, 4, f.e("vl-vj")), std::domain_error); // not at b_i
  EXPECT_THROW(analyze(f.g(), d, f.set({"u-q"}), 4, f.e("x-w")), std::domain_error);
  EXPECT_THROW(analyze(f.g(), d, t, 5, f.e("x-w")), std::domain_error);
}

// Border-analysis invariants on random graphs.
TEST(Analyze, StructuralInvariants) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const std::size_t n = 5 + seed % 4;
    const Graph g = oracle::random_graph(n, std::min<std::size_t>(n * (n - 1) / 2, 6 + seed % 8), seed);
    const auto d = build_decomposition(g);
    for (int i = 1; i <= d.levels(); ++i) {
      const MatchedEdge& b = d.matched(i);
      for (const auto& t : oracle::brute_force_tr(g, d, d.level_boundary(i - 1))) {
        for (EdgeId f : g.incidence(b.x)) {
          if (f == b.edge) continue;
          const BorderAnalysis a = analyze(g, d, t, i, f);
          std::set<VertexId> free(a.free_vertices.begin(), a.free_vertices.end());
          for (EdgeId e : a.border_edges) {
            const Edge& ed = g.edge(e);
            EXPECT_EQ(free.count(ed.u) + free.count(ed.v), 1u);
            EXPECT_NE(d.level_of_edge(e), i);
          }
          // H-patterns may also use cross edges from the covered endpoint.
          EdgeSubset options = a.border_edges;
          for (EdgeId e : a.cross_edges) {
            EXPECT_TRUE(g.edge(e).has(a.covered));
            options.insert(e);
          }
          EXPECT_TRUE(a.h_set.is_subset_of(options));
          ASSERT_EQ(a.allowed_by_free.size(), a.free_vertices.size());
          for (std::size_t k = 0; k < a.free_vertices.size(); ++k)
            for (EdgeId e : a.allowed_by_free[k]) {
              EXPECT_TRUE(g.edge(e).has(a.free_vertices[k]));
              EXPECT_FALSE(a.x_set.contains(e) || a.preceding_set.contains(e) || a.h_set.contains(e));
            }
        }
      }
    }
  }
}

TEST(Selections, EmptyWhenNoFreeVertex) {
  BorderAnalysis a;
  const auto sels = enumerate_selections(a);
  ASSERT_EQ(sels.size(), 1u);
  EXPECT_TRUE(sels[0].empty());
}

TEST(Selections, OneFreeVertexTwoEdges) {
  BorderAnalysis a;
  a.free_vertices = {4};
  a.allowed_by_free = {{1, 3}};
  const auto sels = enumerate_selections(a);
  ASSERT_EQ(sels.size(), 2u);
  EXPECT_EQ(sels[0], (Selection{{4, 1}}));
  EXPECT_EQ(sels[1], (Selection{{4, 3}}));
}

TEST(Selections, ProductOfTwoAndThree) {
  const Fixture f = testing::fix_sel();
  const auto d = build_decomposition(f.g());
  const BorderAnalysis a = analyze(f.g(), d, f.set({}), 1, f.e("x-w"));
  ASSERT_EQ(a.free_vertices, (std::vector<VertexId>{f.v("z1"), f.v("z2")}));
  EXPECT_EQ(a.allowed_by_free[0].size(), 2u);
  EXPECT_EQ(a.allowed_by_free[1].size(), 3u);
  const auto sels = enumerate_selections(a);
  EXPECT_EQ(sels.size(), 6u);
  EXPECT_EQ(std::set<Selection>(sels.begin(), sels.end()).size(), 6u);
  EXPECT_TRUE(std::is_sorted(sels.begin(), sels.end()));
}

TEST(Selections, BlockedAnalysisIsRejected) {
  BorderAnalysis a;
  a.uncovered_free = true;
  EXPECT_THROW(enumerate_selections(a), std::domain_error);
}

TEST(NonExtra, P4) {
  const Fixture f = testing::p4();
  const auto d = build_decomposition(f.g());
  EXPECT_EQ(enumerate_nonextra_children(f.g(), d, f.set({"a-b"}), 2),
            std::vector<EdgeSubset>{f.set({"a-b", "c-d"})});
  EXPECT_EQ(enumerate_nonextra_children(f.g(), d, f.set({"b-c"}), 2),
            std::vector<EdgeSubset>{f.set({"b-c"})});
}

TEST(NonExtra, K3Root) {
  const Fixture f = testing::k3();
  const auto d = build_decomposition(f.g());
  EXPECT_EQ(sorted(enumerate_nonextra_children(f.g(), d, f.set({}), 1)),
            sorted({f.set({"a-b"}), f.set({"b-c"}), f.set({"c-a"})}));
}

TEST(Extra, P4HasNone) {
  const Fixture f = testing::p4();
  const auto d = build_decomposition(f.g());
  EXPECT_TRUE(enumerate_extra_nonH_children(f.g(), d, f.set({"a-b"}), 2).empty());
}

TEST(Extra, SingleSelection) {
  const Fixture f = testing::fix_extra();
  const auto d = build_decomposition(f.g());
  ASSERT_EQ(d.matched(3).edge, f.e("x-y"));
  const EdgeSubset t = f.set({"x-w", "v-p"});
  EXPECT_EQ(enumerate_extra_nonH_children(f.g(), d, t, 3),
            std::vector<EdgeSubset>{f.set({"x-w", "v-p", "v-z"})});
  // Oracle: that is the only selection child of T.
  std::vector<EdgeSubset> sel;
  for (const auto& c : oracle::brute_force_children(f.g(), d, t, 3))
    if (is_selection_class(f.g(), d, 3, c, skip_ancestry(f.g(), d, 3, c).support)) sel.push_back(c);
  EXPECT_EQ(sel, std::vector<EdgeSubset>{f.set({"x-w", "v-p", "v-z"})});
}

TEST(Extra, HPatternFixtureHasNoNonHChild) {
  const Fixture f = testing::fix_h();
  const auto d = build_decomposition(f.g());
  EXPECT_TRUE(enumerate_extra_nonH_children(f.g(), d, f.set({"vl-vj", "u-q"}), 4).empty());
}

// Every selection child seen by the oracle picks exactly one new edge at
// each free vertex of its own analysis.
TEST(Extra, SelectionChildrenPickOneEdgePerFreeVertex) {
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 5 + seed % 4;
    const Graph g = oracle::random_graph(n, std::min<std::size_t>(n * (n - 1) / 2, 6 + seed % 9), seed);
    const auto d = build_decomposition(g);
    for (int i = 1; i <= d.levels(); ++i)
      for (const auto& c : oracle::brute_force_tr(g, d, d.level_boundary(i))) {
        const auto origin = selection_origin(g, d, i, c);
        if (!origin) continue;
        const BorderAnalysis a = origin_analysis(g, d, i, *origin, AnalysisDepth::full);
        const EdgeSubset z = c - origin->support;
        for (VertexId v : a.free_vertices) {
          std::size_t hits = 0;
          for (EdgeId e : g.incidence(v)) hits += z.contains(e);
          EXPECT_EQ(hits, 1u);
        }
        std::size_t at_free = 0;
        for (EdgeId e : z)
          for (VertexId v : a.free_vertices) at_free += g.edge(e).has(v);
        EXPECT_EQ(at_free, z.size());
        ++checked;
      }
  }
  EXPECT_GT(checked, 100u);
}

// Anchored instances: the unverified selection product is exactly the set
// of selection children using no H-pattern edge.
TEST(Extra, AnchoredProductMatchesOracle) {
  std::size_t instances = 0;
  for (std::uint64_t mask = 0; mask < 1024; mask += 3) {
    const auto rep = checks::anchored_selection_check(oracle::subgraph_of_complete(5, mask));
    for (const auto& issue : rep.issues) ADD_FAILURE() << "mask " << mask << ": " << issue.what;
    instances += rep.instances;
  }
  EXPECT_GT(instances, 100u);
}

TEST(Children, WorkPerChildIsPolynomial) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Graph g = oracle::random_graph(8, 10 + seed % 10, seed);
    const auto d = build_decomposition(g);
    const std::uint64_t m = g.edge_count();
    for (int i = 1; i <= d.levels(); ++i)
      for (const auto& t : oracle::brute_force_tr(g, d, d.level_boundary(i - 1))) {
        ChildStream s(g, d, t, i);
        std::uint64_t last = work_meter.steps;
        while (s.next()) {
          EXPECT_LE(work_meter.steps - last, m * m * m);
          last = work_meter.steps;
        }
        EXPECT_LE(work_meter.steps - last, m * m * m);
      }
  }
}

}  // namespace
}  // namespace medenum
