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

#ifndef QCMATROID_GENERATORS_H_
#define QCMATROID_GENERATORS_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qcmatroid/families.h"
#include "qcmatroid/hard_instances.h"
#include "qcmatroid/random.h"

namespace qcmatroid {

// `edge_count` edges with uniformly random endpoints among `vertex_count`
// vertices. Parallel edges may occur; self-loops only when allowed.
std::vector<Edge> random_multigraph(std::size_t vertex_count,
                                    std::size_t edge_count, bool allow_loops,
                                    Rng& rng);

// pair_count disjoint 2-circuits: edges 2i and 2i+1 both join 2i and 2i+1.
std::vector<Edge> parallel_pairs(std::size_t pair_count);

// Random part sizes and capacities in [1, part size].
PartitionMatroid random_partition_matroid(std::size_t n, Rng& rng);

ConvexTransversalMatroid random_transversal(std::size_t n,
                                            std::size_t position_count,
                                            Rng& rng);

// Knobs for generate_family; unused fields are ignored by a given family.
struct FamilyParams {
  double epsilon = 0.5;
  std::size_t alpha = 3;
  std::optional<bool> truncated;  // nullopt: fair coin
};

struct GeneratedInstance {
  MatroidPtr matroid;
  std::optional<HardInstance> hard;
  std::size_t useful_threshold = 0;
};

// A random member of a named family with ground size close to n:
//   graphic-random, bicircular-random   n edges on max(2, n/2) vertices
//   parallel-pairs                      n/2 disjoint parallel pairs
//   partition-random, transversal-random, uniform (r = n/2), free
//   rank-hard       m = max(1, n/3), εm = max(1, floor(ε m)) (needs m >= 2)
//   partition-hard  m = largest multiple of α with (α+1)m <= n
// Throws ParameterError for unknown names or infeasible sizes.
GeneratedInstance generate_family(const std::string& family, std::size_t n,
                                  const FamilyParams& params, Rng& rng);

const std::vector<std::string>& bench_family_names();

}  // namespace qcmatroid

#endif  // QCMATROID_GENERATORS_H_
