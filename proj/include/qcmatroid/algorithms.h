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

#ifndef QCMATROID_ALGORITHMS_H_
#define QCMATROID_ALGORITHMS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qcmatroid/combinators.h"
#include "qcmatroid/oracle.h"
#include "qcmatroid/types.h"

namespace qcmatroid {

struct BasisResult {
  ElementList basis;  // sorted
  std::size_t rank = 0;
  CostLedger ledger;
};

// One feasibility test of partition_size at a candidate count.
struct PartitionTest {
  std::size_t lambda = 0;
  std::size_t rank_cap = 0;  // ceil(n / lambda)
  bool feasible = false;
  std::size_t max_forwarded_size = 0;
  long double cost = 0;  // base-oracle cost charged during this test
  std::uint64_t queries = 0;  // base-oracle queries issued during this test
};

struct PartitionResult {
  std::size_t k = 0;
  std::vector<ElementList> parts;  // k disjoint independent sets covering E
  std::vector<PartitionTest> tests;
  CostLedger ledger;
};

struct BoundedCircParams {
  std::size_t circumference = 1;
  std::uint64_t seed = 0;
};

// Scans `order`, keeping e whenever kept ∪ {e} is independent. Issues exactly
// |order| queries, each of size |kept| + 1.
BasisResult greedy_basis(MeteredOracle& oracle,
                         std::span<const ElementId> order);

// greedy_basis over 0, 1, ..., n-1.
BasisResult greedy_basis(MeteredOracle& oracle);

// |greedy_basis(oracle)|.
std::size_t rank(MeteredOracle& oracle);

// Least j such that ordered[0..j) is dependent, or nullopt when the whole
// list is independent. Probes the full list first, then binary-searches
// prefixes: 1 + ceil(log2 L) queries at most.
std::optional<std::size_t> min_dependent_prefix(
    IndependenceOracle& oracle, std::span<const ElementId> ordered);

// Maximum-weight basis for matroids of circumference <= c by repeated random
// sampling with probability n^(-1/c) over ceil(n ln n) rounds, followed by a
// final cleanup pass. The answer is exact for any c; c only affects cost.
BasisResult max_weight_basis_bounded_circ(MeteredOracle& oracle,
                                          const TieBrokenWeights& weights,
                                          const BoundedCircParams& params);

// Tries to cover the ground set with `lambda` independent sets by matroid
// partitioning along shortest exchange-graph augmenting paths. Returns the
// classes (some may be empty) or nullopt when no such cover exists.
std::optional<std::vector<ElementList>> base_cover(IndependenceOracle& oracle,
                                                   std::size_t lambda);

// Minimum number of independent sets partitioning the ground set, by binary
// search over [1, n]. Each test caps queries at ceil(n / lambda).
// Throws InfeasibleError when the matroid has a loop.
PartitionResult partition_size(MeteredOracle& oracle);

}  // namespace qcmatroid

#endif  // QCMATROID_ALGORITHMS_H_
