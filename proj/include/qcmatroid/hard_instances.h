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

#ifndef QCMATROID_HARD_INSTANCES_H_
#define QCMATROID_HARD_INSTANCES_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <variant>
#include <vector>

#include "qcmatroid/oracle.h"
#include "qcmatroid/random.h"
#include "qcmatroid/types.h"

namespace qcmatroid {

// Rank family on [3m]: M = free(S) ∨ U_m(T), or M' = M truncated to
// 2m - εm. ε is carried as the integer εm.
struct RankHardParams {
  std::size_t m = 1;
  std::size_t eps_m = 0;
  bool truncated = false;

  std::size_t ground_size() const { return 3 * m; }
  std::size_t rank() const { return truncated ? 2 * m - eps_m : 2 * m; }
};

// Converts ε to εm; throws ParameterError unless εm is an integer in [1, m).
std::size_t epsilon_times_m(std::size_t m, double epsilon);

// Partition family on [(α+1)m]: Q = l-relaxation (l = m/α) of the
// capacity-1 partition matroid on m parts of size α+1, or Q' = Q truncated
// to m + m/α - 1.
struct PartitionHardParams {
  std::size_t m = 1;
  std::size_t alpha = 1;
  bool truncated = false;

  std::size_t ground_size() const { return (alpha + 1) * m; }
  std::size_t slack() const { return m / alpha; }
  std::size_t rank() const { return m + m / alpha - (truncated ? 1 : 0); }
};

struct HardInstance {
  std::variant<RankHardParams, PartitionHardParams> params;
  // Rank family: the secret set S, sorted.
  ElementList secret_set;
  // Partition family: m blocks, each sorted, blocks ordered by minimum.
  std::vector<ElementList> secret_partition;
  MatroidPtr matroid;

  bool is_rank_family() const {
    return std::holds_alternative<RankHardParams>(params);
  }
  // Queries at or below this size cannot distinguish the two siblings.
  std::size_t useful_threshold() const;
};

// Builds the rank-family matroid for a known secret.
HardInstance make_rank_instance(const RankHardParams& params,
                                ElementList secret);
HardInstance make_partition_instance(const PartitionHardParams& params,
                                     std::vector<ElementList> blocks);

// S uniform over m-subsets of [3m].
HardInstance sample_rank_instance(std::size_t m, std::size_t eps_m,
                                  bool truncated, Rng& rng);
// Uniform equal partition of [(α+1)m] into m blocks. α must divide m.
HardInstance sample_partition_instance(std::size_t m, std::size_t alpha,
                                       bool truncated, Rng& rng);

// |W| > 2m - εm and |W \ S| <= m. W and S sorted.
bool is_rank_witness(std::span<const ElementId> w,
                     std::span<const ElementId> secret, std::size_t m,
                     std::size_t eps_m);

// |W| = m + m/α and W meets every block.
bool is_partition_witness(std::span<const ElementId> w,
                          const std::vector<ElementList>& blocks,
                          std::size_t m, std::size_t alpha);

// (1 + 1/α)^(α - 1 - 1/α) · (1/α)^(1/α). Throws ParameterError for α < 1.
double gamma(double alpha);

// Number of m-subsets S of [3m] for which W is a witness, by enumeration.
// Requires 3m <= 18.
std::uint64_t count_rank_witness_sets(std::span<const ElementId> w,
                                      std::size_t m, std::size_t eps_m);
// C(|W|, |W| - m) · C(4m - |W|, 2m - |W|), the cap on the count above for a
// witness of size |W| (zero when no W of that size is a witness).
std::uint64_t rank_witness_count_bound(std::size_t w_size, std::size_t m);

// Number of equal partitions for which W is a witness, by enumeration.
// Requires (α+1)m <= 12.
std::uint64_t count_partition_witness_partitions(std::span<const ElementId> w,
                                                 std::size_t m,
                                                 std::size_t alpha);
// m! · C(m + m/α, m) · (αm)! / (α!)^m.
std::uint64_t partition_witness_count_bound(std::size_t m, std::size_t alpha);

// Calls `visit` on every partition of [block_count * block_size] into
// unordered blocks of equal size (blocks sorted, ordered by minimum).
void for_each_equal_partition(
    std::size_t block_count, std::size_t block_size,
    const std::function<void(const std::vector<ElementList>&)>& visit);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace qcmatroid

#endif  // QCMATROID_HARD_INSTANCES_H_
