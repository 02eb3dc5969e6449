// Copyright 2026 The Authors.
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

#include "qcmatroid/families.h"

#include <gtest/gtest.h>

#include <bit>
#include <map>
#include <set>

#include "oracles.h"
#include "qcmatroid/verify.h"

namespace qcmatroid {
namespace {

using oracles::Table;

GraphicMatroid triangle() { return GraphicMatroid(3, {{0, 1}, {1, 2}, {0, 2}}); }

bool indep(const Matroid& m, ElementList q) { return m.is_independent(q); }

TEST(Partition, Examples) {
  PartitionMatroid m({{0, 1, 2}, {3, 4, 5}}, {1, 1});
  EXPECT_TRUE(indep(m, {0, 3}));
  EXPECT_FALSE(indep(m, {0, 1}));
  EXPECT_TRUE(indep(m, {}));
}

TEST(Partition, ZeroCapacityPartHoldsLoops) {
  PartitionMatroid m({{0}, {1, 2}}, {0, 2});
  EXPECT_FALSE(indep(m, {0}));
  EXPECT_TRUE(indep(m, {1, 2}));
  EXPECT_EQ(m.subset_rank(ElementList{0, 1, 2}), 2u);
}

TEST(Partition, RejectsBadShapes) {
  EXPECT_THROW(PartitionMatroid({{0, 1}, {1}}, {1, 1}), ParameterError);
  EXPECT_THROW(PartitionMatroid({{0, 2}}, {1}), ParameterError);
  EXPECT_THROW(PartitionMatroid({{0}}, {1, 1}), ParameterError);
}

TEST(Graphic, Examples) {
  const GraphicMatroid t = triangle();
  EXPECT_TRUE(indep(t, {0, 1}));
  EXPECT_FALSE(indep(t, {0, 1, 2}));
  GraphicMatroid loop(5, {{4, 4}});
  EXPECT_FALSE(indep(loop, {0}));
}

TEST(Graphic, ParallelEdgesFormATwoCircuit) {
  GraphicMatroid m(2, {{0, 1}, {1, 0}});
  EXPECT_TRUE(indep(m, {0}));
  EXPECT_FALSE(indep(m, {0, 1}));
}

TEST(Graphic, RejectsOutOfRangeVertex) {
  EXPECT_THROW(GraphicMatroid(2, {{0, 2}}), ParameterError);
}

TEST(Bicircular, Examples) {
  BicircularMatroid t(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_TRUE(indep(t, {0, 1, 2}));
  // Two triangles sharing edge (1,2).
  BicircularMatroid two(4, {{0, 1}, {1, 2}, {0, 2}, {1, 3}, {2, 3}});
  EXPECT_FALSE(indep(two, {0, 1, 2, 3, 4}));
  EXPECT_TRUE(indep(two, {}));
}

TEST(Bicircular, LoopIsIndependentAloneButNotTwice) {
  BicircularMatroid m(1, {{0, 0}, {0, 0}});
  EXPECT_TRUE(indep(m, {0}));
  EXPECT_FALSE(indep(m, {0, 1}));
}

TEST(Transversal, Examples) {
  ConvexTransversalMatroid m(2, {{1, 2}, {1, 1}, {2, 2}});
  EXPECT_FALSE(indep(m, {0, 1, 2}));
  EXPECT_TRUE(indep(m, {1, 2}));
  ConvexTransversalMatroid same(1, {{1, 1}, {1, 1}});
  EXPECT_FALSE(indep(same, {0, 1}));
}

TEST(Transversal, RejectsBadIntervals) {
  EXPECT_THROW(ConvexTransversalMatroid(3, {{0, 1}}), ParameterError);
  EXPECT_THROW(ConvexTransversalMatroid(3, {{2, 1}}), ParameterError);
  EXPECT_THROW(ConvexTransversalMatroid(3, {{1, 4}}), ParameterError);
}

TEST(Uniform, FreeAndUniform) {
  EXPECT_EQ(make_free(4)->family(), "free");
  EXPECT_EQ(make_uniform(4, 2)->family(), "uniform");
  EXPECT_TRUE(indep(*make_uniform(4, 2), {0, 3}));
  EXPECT_FALSE(indep(*make_uniform(4, 2), {0, 1, 3}));
  EXPECT_THROW(make_uniform(3, 4), ParameterError);
}

// Every subset verdict of `m` against its definitional table, plus rank.
void expect_matches_definition(const Matroid& m, const std::string& name) {
  const Table table = oracles::definitional_table(m);
  for (SubsetMask mask = 0; mask < table.size(); ++mask) {
    const ElementList q = mask_to_elements(mask);
    ASSERT_EQ(m.is_independent(q), table[mask])
        << name << " Q=" << format_set(q);
    // subset_rank(Q) is the size of the largest table member inside Q.
    std::size_t best = 0;
    for (SubsetMask sub = mask;; sub = (sub - 1) & mask) {
      if (table[sub]) best = std::max<std::size_t>(best, std::popcount(sub));
      if (sub == 0) break;
    }
    ASSERT_EQ(m.subset_rank(q), best) << name << " rank Q=" << format_set(q);
  }
}

TEST(Families, AgreeWithDefinitionsOnAllSubsets) {
  Rng rng(5);
  for (const std::string& kind : oracles::instance_kinds()) {
    for (int i = 0; i < 60; ++i) {
      std::string name;
      const std::size_t n = uniform_below(rng, 11);
      MatroidPtr m = oracles::random_of_kind(kind, n, rng, &name);
      expect_matches_definition(*m, name);
      if (HasFatalFailure()) return;
    }
  }
}

TEST(Transversal, GreedyMatchesHallOnManyInstances) {
  Rng rng(99);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = uniform_below(rng, 11);
    const std::size_t p = 1 + uniform_below(rng, 12);
    std::vector<Interval> ivs;
    for (std::size_t x = 0; x < n; ++x) {
      std::size_t a = 1 + uniform_below(rng, p), b = 1 + uniform_below(rng, p);
      if (a > b) std::swap(a, b);
      ivs.push_back({a, b});
    }
    ConvexTransversalMatroid m(p, ivs);
    const Table table = oracles::hall_table(p, ivs);
    for (SubsetMask mask = 0; mask < table.size(); ++mask) {
      ASSERT_EQ(m.is_independent(mask_to_elements(mask)), table[mask]);
    }
  }
}

// Components of the subgraph on `q` by plain DFS.
std::size_t touched_minus_components(const std::vector<Edge>& edges,
                                     const ElementList& q) {
  std::map<std::size_t, std::vector<std::size_t>> adj;
  for (ElementId e : q) {
    adj[edges[e].first].push_back(edges[e].second);
    adj[edges[e].second].push_back(edges[e].first);
  }
  std::set<std::size_t> seen;
  std::size_t components = 0;
  for (const auto& [v, _] : adj) {
    if (seen.count(v)) continue;
    ++components;
    std::vector<std::size_t> stack{v};
    seen.insert(v);
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t w : adj[u]) {
        if (seen.insert(w).second) stack.push_back(w);
      }
    }
  }
  return adj.size() - components;
}

TEST(Graphic, RankLawOnRandomGraphs) {
  Rng rng(3);
  for (int i = 0; i < 300; ++i) {
    const std::size_t v = 1 + uniform_below(rng, 15);
    const std::size_t e = uniform_below(rng, 40);
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < e; ++k) {
      edges.emplace_back(uniform_below(rng, v), uniform_below(rng, v));
    }
    GraphicMatroid m(v, edges);
    ElementList q;
    for (ElementId k = 0; k < e; ++k) {
      if (uniform_below(rng, 3)) q.push_back(k);
    }
    const std::size_t expected = touched_minus_components(edges, q);
    EXPECT_EQ(m.subset_rank(q), expected);
    // A greedy maximal independent subset of q has the same size.
    ElementList kept;
    for (ElementId k : q) {
      kept.push_back(k);
      if (!m.is_independent(kept)) kept.pop_back();
    }
    EXPECT_EQ(kept.size(), expected);
  }
}

TEST(Bicircular, DominatesGraphic) {
  Rng rng(8);
  for (int i = 0; i < 500; ++i) {
    const std::size_t v = 1 + uniform_below(rng, 8);
    const std::size_t e = uniform_below(rng, 14);
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < e; ++k) {
      edges.emplace_back(uniform_below(rng, v), uniform_below(rng, v));
    }
    GraphicMatroid g(v, edges);
    BicircularMatroid b(v, edges);
    for (SubsetMask mask = 0; mask < (SubsetMask{1} << e); ++mask) {
      const ElementList q = mask_to_elements(mask);
      if (g.is_independent(q)) ASSERT_TRUE(b.is_independent(q));
    }
  }
}

TEST(Families, PassAxiomChecks) {
  Rng rng(21);
  for (const std::string& kind : oracles::instance_kinds()) {
    for (int i = 0; i < 40; ++i) {
      std::string name;
      const std::size_t n = 1 + uniform_below(rng, 12);
      MatroidPtr m = oracles::random_of_kind(kind, n, rng, &name);
      const auto violation = check_matroid_axioms(*m);
      ASSERT_FALSE(violation.has_value()) << name << ": " << violation->describe();
    }
  }
}

}  // namespace
}  // namespace qcmatroid
