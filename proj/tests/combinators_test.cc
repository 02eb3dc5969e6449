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

#include "qcmatroid/combinators.h"

#include <gtest/gtest.h>

#include <bit>

#include "oracles.h"
#include "qcmatroid/verify.h"

namespace qcmatroid {
namespace {

bool indep(const Matroid& m, ElementList q) { return m.is_independent(q); }

TEST(Truncate, Examples) {
  MatroidPtr t = truncate(make_free(5), 3);
  EXPECT_TRUE(indep(*t, {1, 2, 3}));
  EXPECT_FALSE(indep(*t, {1, 2, 3, 4}));
  MatroidPtr zero = truncate(make_free(5), 0);
  EXPECT_TRUE(indep(*zero, {}));
  EXPECT_FALSE(indep(*zero, {0}));
  EXPECT_THROW(truncate(make_free(5), 6), ParameterError);
}

// Records every query size it sees.
class ProbeMatroid final : public Matroid {
 public:
  explicit ProbeMatroid(std::size_t n) : n_(n) {}
  std::size_t ground_size() const override { return n_; }
  bool is_independent(std::span<const ElementId> q) const override {
    largest_ = std::max(largest_, q.size());
    return true;
  }
  std::string family() const override { return "probe"; }
  mutable std::size_t largest_ = 0;

 private:
  std::size_t n_;
};

TEST(Truncate, BaseNeverSeesOversizedQueries) {
  auto probe = std::make_shared<ProbeMatroid>(10);
  MatroidPtr t = truncate(probe, 4);
  for (SubsetMask mask = 0; mask < (1U << 10); ++mask) {
    t->is_independent(mask_to_elements(mask));
  }
  EXPECT_EQ(probe->largest_, 4u);
}

TEST(LRelax, Examples) {
  auto base = std::make_shared<PartitionMatroid>(
      std::vector<ElementList>{{0, 1}, {2, 3}}, std::vector<std::size_t>{1, 1});
  MatroidPtr r = l_relax(base, 1);
  EXPECT_TRUE(indep(*r, {0, 1, 2}));
  EXPECT_FALSE(indep(*r, {0, 1, 2, 3}));
  MatroidPtr same = l_relax(base, 0);
  for (SubsetMask mask = 0; mask < 16; ++mask) {
    const ElementList q = mask_to_elements(mask);
    EXPECT_EQ(same->is_independent(q), base->is_independent(q));
  }
}

TEST(LRelax, NeedsRankCapableBase) {
  EXPECT_THROW(l_relax(std::make_shared<ProbeMatroid>(3), 1), UnsupportedError);
}

// Partition matroids on <= 10 elements, parts of size <= 4, l <= 3.
PartitionMatroid small_partition(Rng& rng, std::size_t n) {
  std::vector<ElementList> parts;
  std::vector<std::size_t> caps;
  ElementId next = 0;
  while (next < n) {
    const std::size_t size =
        std::min<std::size_t>(n - next, 1 + uniform_below(rng, 4));
    ElementList part;
    for (std::size_t i = 0; i < size; ++i) part.push_back(next++);
    caps.push_back(uniform_below(rng, size + 1));
    parts.push_back(part);
  }
  return PartitionMatroid(parts, caps);
}

TEST(LRelax, RelaxedPartitionMatroidsAreMatroids) {
  Rng rng(17);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + uniform_below(rng, 10);
    auto base = std::make_shared<PartitionMatroid>(small_partition(rng, n));
    const std::size_t l = uniform_below(rng, 4);
    MatroidPtr r = l_relax(base, l);
    const auto violation = check_matroid_axioms(*r);
    ASSERT_FALSE(violation) << violation->describe();
    // Rank form agrees with the existential definition.
    const oracles::Table table =
        oracles::relax_table(oracles::definitional_table(*base), l);
    for (SubsetMask mask = 0; mask < table.size(); ++mask) {
      ASSERT_EQ(r->is_independent(mask_to_elements(mask)), table[mask]);
    }
  }
}

TEST(FreeUniformUnion, Examples) {
  MatroidPtr u = free_uniform_union(6, {1, 2}, 2);
  EXPECT_FALSE(indep(*u, {3, 4, 5}));
  for (SubsetMask mask = 0; mask < 64; ++mask) {
    if (std::popcount(mask) <= 2) {
      EXPECT_TRUE(u->is_independent(mask_to_elements(mask)));
    }
  }
  EXPECT_EQ(bf_rank(*u), 4u);
  EXPECT_THROW(free_uniform_union(6, {6}, 2), ParameterError);
}

TEST(OrderElements, Examples) {
  const ElementList all{0, 1, 2};
  EXPECT_EQ(order_elements(TieBrokenWeights({5, 3, 1}), all), (ElementList{0, 1, 2}));
  EXPECT_EQ(order_elements(TieBrokenWeights({1, 1}), ElementList{0, 1}),
            (ElementList{1, 0}));
  EXPECT_TRUE(order_elements(TieBrokenWeights({}), ElementList{}).empty());
}

TEST(OrderElements, StrictTotalOrder) {
  Rng rng(4);
  std::vector<double> w(50);
  for (double& x : w) x = static_cast<double>(uniform_below(rng, 5));
  TieBrokenWeights weights(w);
  for (ElementId a = 0; a < 50; ++a) {
    EXPECT_FALSE(weights.heavier(a, a));
    for (ElementId b = 0; b < 50; ++b) {
      if (a != b) EXPECT_NE(weights.heavier(a, b), weights.heavier(b, a));
    }
  }
}

TEST(PartitionHardRank, RankIsMPlusSlack) {
  // m = 2, alpha = 2: parts of size 3, l = 1.
  auto base = std::make_shared<PartitionMatroid>(
      std::vector<ElementList>{{0, 1, 2}, {3, 4, 5}}, std::vector<std::size_t>{1, 1});
  EXPECT_EQ(bf_rank(*l_relax(base, 1)), 3u);
}

}  // namespace
}  // namespace qcmatroid
