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

#include "qcmatroid/verify.h"

#include <gtest/gtest.h>

#include <bit>

#include "oracles.h"
#include "qcmatroid/combinators.h"
#include "qcmatroid/families.h"
#include "qcmatroid/hard_instances.h"

namespace qcmatroid {
namespace {

GraphicMatroid triangle() { return GraphicMatroid(3, {{0, 1}, {1, 2}, {0, 2}}); }

SubsetMask m(std::initializer_list<ElementId> ids) {
  return elements_to_mask(ElementList(ids));
}

TEST(BfRank, Examples) {
  EXPECT_EQ(bf_rank(triangle()), 2u);
  EXPECT_EQ(bf_rank(*make_uniform(4, 2)), 2u);
  const HardInstance h = make_rank_instance({2, 1, false}, {0, 5});
  EXPECT_EQ(bf_rank(*h.matroid), 4u);
  EXPECT_THROW(bf_rank(*make_free(21)), SizeLimitError);
}

TEST(BfPartitionSize, Examples) {
  EXPECT_EQ(bf_partition_size(*make_free(6)), 1u);
  PartitionMatroid pm({{0, 1, 2}, {3, 4, 5}}, {1, 1});
  EXPECT_EQ(bf_partition_size(pm), 3u);
  const HardInstance qt =
      make_partition_instance({2, 2, true}, {{0, 2, 4}, {1, 3, 5}});
  EXPECT_EQ(bf_partition_size(*qt.matroid), 3u);
  GraphicMatroid loop(1, {{0, 0}});
  EXPECT_THROW(bf_partition_size(loop), InfeasibleError);
  EXPECT_THROW(bf_partition_size(*make_free(15)), SizeLimitError);
}

TEST(Axioms, FamiliesPass) {
  EXPECT_FALSE(check_matroid_axioms(triangle()));
  EXPECT_FALSE(check_matroid_axioms(*make_uniform(8, 3)));
}

TEST(Axioms, DownwardClosureCounterexample) {
  const SubsetFamilyOracle family(3, {0, m({1}), m({1, 2})});
  const auto v = check_matroid_axioms(family);
  ASSERT_TRUE(v);
  EXPECT_EQ(v->kind, AxiomViolation::Kind::kDownwardClosure);
  EXPECT_EQ(v->j, (ElementList{2}));
}

TEST(Axioms, ExchangeCounterexample) {
  const SubsetFamilyOracle family(4, {0, m({1}), m({2}), m({3}), m({1, 2})});
  const auto v = check_matroid_axioms(family);
  ASSERT_TRUE(v);
  EXPECT_EQ(v->kind, AxiomViolation::Kind::kExchange);
  EXPECT_EQ(v->i, (ElementList{3}));
  EXPECT_EQ(v->j, (ElementList{1, 2}));
  EXPECT_NE(v->describe().find("exchange"), std::string::npos);
}

TEST(Axioms, EmptySetMustBeIndependent) {
  const SubsetFamilyOracle family(2, {m({0})});
  const auto v = check_matroid_axioms(family);
  ASSERT_TRUE(v);
  EXPECT_EQ(v->kind, AxiomViolation::Kind::kEmptySetDependent);
}

TEST(Axioms, RandomFamiliesAgreeWithADirectCheck) {
  // Random downward-closed families on 5 elements; compare with the
  // textbook all-pairs exchange test.
  Rng rng(13);
  for (int t = 0; t < 300; ++t) {
    std::vector<bool> in(32, false);
    in[0] = true;
    for (SubsetMask s = 1; s < 32; ++s) {
      bool subsets_in = true;
      for (ElementId e = 0; e < 5; ++e) {
        if (s >> e & 1U) subsets_in = subsets_in && in[s & ~(1U << e)];
      }
      in[s] = subsets_in && uniform_below(rng, 4) != 0;
    }
    std::vector<SubsetMask> members;
    for (SubsetMask s = 0; s < 32; ++s) {
      if (in[s]) members.push_back(s);
    }
    bool exchange = true;
    for (SubsetMask i : members) {
      for (SubsetMask j : members) {
        if (std::popcount(i) >= std::popcount(j)) continue;
        bool ok = false;
        for (ElementId e = 0; e < 5; ++e) {
          if ((j >> e & 1U) && !(i >> e & 1U) && in[i | (1U << e)]) ok = true;
        }
        exchange = exchange && ok;
      }
    }
    EXPECT_EQ(check_matroid_axioms(SubsetFamilyOracle(5, members)).has_value(),
              !exchange);
  }
}

TEST(BfCircumference, Examples) {
  EXPECT_EQ(bf_circumference(triangle()), 3u);
  EXPECT_EQ(bf_circumference(*make_free(5)), 0u);
  EXPECT_EQ(bf_circumference(GraphicMatroid(2, {{0, 1}, {0, 1}})), 2u);
  EXPECT_EQ(bf_circumference(*make_uniform(6, 2)), 3u);
}

TEST(BfMaxWeightBasis, Examples) {
  EXPECT_EQ(bf_max_weight_basis(triangle(), TieBrokenWeights({5, 3, 1})),
            (ElementList{0, 1}));
  EXPECT_EQ(bf_max_weight_basis(*make_free(3), TieBrokenWeights({1, 1, 1})),
            (ElementList{0, 1, 2}));
  EXPECT_EQ(bf_max_weight_basis(*make_uniform(3, 1), TieBrokenWeights({2, 9, 4})),
            (ElementList{1}));
  // Equal weights: the higher id wins.
  EXPECT_EQ(bf_max_weight_basis(*make_uniform(3, 1), TieBrokenWeights({4, 4, 4})),
            (ElementList{2}));
}

TEST(BfRank, AgreesWithTables) {
  Rng rng(15);
  for (int i = 0; i < 300; ++i) {
    std::string name;
    MatroidPtr mat = oracles::random_instance(uniform_below(rng, 13), rng, &name);
    EXPECT_EQ(bf_rank(*mat), oracles::table_rank(oracles::definitional_table(*mat)))
        << name;
  }
}

}  // namespace
}  // namespace qcmatroid
