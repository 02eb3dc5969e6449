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

#include "qcmatroid/oracle.h"

#include <gtest/gtest.h>

#include <sstream>

#include "oracles.h"
#include "qcmatroid/families.h"
#include "qcmatroid/random.h"

namespace qcmatroid {
namespace {

ElementList first_k(std::size_t k) {
  ElementList q(k);
  for (std::size_t i = 0; i < k; ++i) q[i] = static_cast<ElementId>(i);
  return q;
}

TEST(MeteredOracle, LinearChargeIsQuerySize) {
  MeteredOracle oracle(make_free(10), CostModel::linear());
  EXPECT_TRUE(oracle.query(first_k(5)));
  EXPECT_EQ(oracle.ledger().exact_total, 5);
  EXPECT_EQ(oracle.ledger().query_count, 1);
}

TEST(MeteredOracle, EmptyQueryIsFreeUnderLinear) {
  MeteredOracle oracle(make_uniform(4, 0), CostModel::linear());
  EXPECT_TRUE(oracle.query({}));
  EXPECT_EQ(oracle.ledger().exact_total, 0);
  EXPECT_EQ(oracle.ledger().query_count, 1);
}

TEST(MeteredOracle, UnitModelChargesOne) {
  MeteredOracle oracle(make_uniform(10, 3), CostModel::unit());
  EXPECT_FALSE(oracle.query(first_k(7)));
  EXPECT_EQ(oracle.ledger().exact_total, 1);
}

TEST(MeteredOracle, SnapshotExamples) {
  MeteredOracle fresh(make_free(5), CostModel::linear());
  const CostLedger zero = fresh.ledger_snapshot();
  EXPECT_EQ(zero.exact_total, 0);
  EXPECT_EQ(zero.query_count, 0);
  EXPECT_EQ(zero.max_query_size, 0);

  MeteredOracle linear(make_free(5), CostModel::linear());
  linear.query(first_k(3));
  linear.query(first_k(4));
  const CostLedger a = linear.ledger_snapshot();
  EXPECT_EQ(a.total_cost_string(), "7");
  EXPECT_EQ(a.query_count, 2);
  EXPECT_EQ(a.max_query_size, 4);

  MeteredOracle square(make_free(5), make_cost_model("poly:2"));
  square.query(first_k(3));
  square.query(first_k(4));
  const CostLedger b = square.ledger_snapshot();
  EXPECT_EQ(b.total_cost_string(), "25");
  EXPECT_EQ(b.query_count, 2);
  EXPECT_EQ(b.max_query_size, 4);
  // Snapshot is a copy.
  square.query(first_k(1));
  EXPECT_EQ(b.query_count, 2);
}

TEST(MeteredOracle, MalformedQueriesChargeNothing) {
  MeteredOracle oracle(make_free(4), CostModel::linear());
  const ElementList out_of_range{1, 4};
  const ElementList unsorted{2, 1};
  const ElementList duplicate{1, 1};
  EXPECT_THROW(oracle.query(out_of_range), std::domain_error);
  EXPECT_THROW(oracle.query(unsorted), std::domain_error);
  EXPECT_THROW(oracle.query(duplicate), std::domain_error);
  EXPECT_EQ(oracle.ledger_snapshot(), CostLedger{});
}

TEST(MeteredOracle, RepeatedQueriesAreChargedAgain) {
  MeteredOracle oracle(make_free(4), CostModel::linear());
  oracle.query(first_k(3));
  oracle.query(first_k(3));
  EXPECT_EQ(oracle.ledger().exact_total, 6);
}

TEST(MeteredOracle, FractionalModelAccumulatesApproximately) {
  MeteredOracle oracle(make_free(16), make_cost_model("poly:0.5"));
  oracle.query(first_k(16));
  oracle.query(first_k(4));
  EXPECT_FALSE(oracle.ledger().exact);
  EXPECT_NEAR(static_cast<double>(oracle.ledger().total_cost()), 6.0, 1e-12);
}

TEST(MeteredOracle, TotalMatchesIndependentRecount) {
  Rng rng(11);
  for (const char* spec : {"unit", "linear", "poly:2", "poly:3"}) {
    MeteredOracle oracle(make_uniform(200, 50), make_cost_model(spec));
    unsigned __int128 expected = 0;
    std::size_t biggest = 0;
    for (int i = 0; i < 500; ++i) {
      const std::size_t k = uniform_below(rng, 201);
      oracle.query(first_k(k));
      unsigned __int128 f = 1;
      if (std::string(spec) == "linear") f = k;
      if (std::string(spec) == "poly:2") f = static_cast<unsigned __int128>(k) * k;
      if (std::string(spec) == "poly:3") {
        f = static_cast<unsigned __int128>(k) * k * k;
      }
      if (std::string(spec) != "unit" && k == 0) f = 0;
      expected += f;
      biggest = std::max(biggest, k);
    }
    EXPECT_TRUE(oracle.ledger().exact_total == expected) << spec;
    EXPECT_EQ(oracle.ledger().max_query_size, biggest);
    EXPECT_EQ(oracle.ledger().query_count, 500);
  }
}

// Random sorted subset of [n].
ElementList random_subset(std::size_t n, Rng& rng) {
  ElementList q;
  for (ElementId e = 0; e < n; ++e) {
    if (uniform_below(rng, 2)) q.push_back(e);
  }
  return q;
}

TEST(MeteredOracle, TransparentOverRandomInstances) {
  Rng rng(2024);
  for (const std::string& kind : oracles::instance_kinds()) {
    for (int i = 0; i < 1000; ++i) {
      std::string name;
      const std::size_t n = 1 + uniform_below(rng, 30);
      MatroidPtr m = oracles::random_of_kind(kind, n, rng, &name);
      MeteredOracle oracle(m, CostModel::linear());
      const ElementList q = random_subset(n, rng);
      ASSERT_EQ(oracle.query(q), m->is_independent(q)) << name;
    }
  }
}

TEST(MeteredOracle, DownwardClosureSpotCheck) {
  Rng rng(77);
  for (const std::string& kind : oracles::instance_kinds()) {
    int checked = 0;
    while (checked < 500) {
      std::string name;
      const std::size_t n = 1 + uniform_below(rng, 12);
      MatroidPtr m = oracles::random_of_kind(kind, n, rng, &name);
      MeteredOracle oracle(m, CostModel::linear());
      const ElementList q = random_subset(n, rng);
      if (!oracle.query(q)) continue;
      ElementList sub;
      for (ElementId e : q) {
        if (uniform_below(rng, 2)) sub.push_back(e);
      }
      ASSERT_TRUE(oracle.query(sub)) << name;
      ++checked;
    }
  }
}

TEST(MeteredOracle, UsefulQueryThreshold) {
  MeteredOracle oracle(make_free(10), CostModel::linear());
  oracle.set_useful_threshold(3);
  oracle.query(first_k(3));
  oracle.query(first_k(4));
  oracle.query(first_k(9));
  EXPECT_EQ(oracle.ledger().useful_query_count, 2);
}

TEST(MeteredOracle, TraceLines) {
  MeteredOracle oracle(make_uniform(5, 2), CostModel::linear());
  oracle.enable_trace(true);
  oracle.query(first_k(2));
  oracle.query(first_k(3));
  std::ostringstream out;
  write_trace(out, oracle.trace());
  EXPECT_EQ(out.str(), "2,independent\n3,dependent\n");
}

TEST(CappedOracle, LargeQueriesNeverReachTheBase) {
  MeteredOracle base(make_free(10), CostModel::linear());
  CappedOracle capped(base, 3);
  EXPECT_FALSE(capped.query(first_k(4)));
  EXPECT_EQ(base.ledger().query_count, 0);
  EXPECT_TRUE(capped.query(first_k(3)));
  EXPECT_EQ(base.ledger().query_count, 1);
  EXPECT_EQ(capped.max_forwarded_size(), 3);
  EXPECT_EQ(capped.forwarded_count(), 1);
}

}  // namespace
}  // namespace qcmatroid
