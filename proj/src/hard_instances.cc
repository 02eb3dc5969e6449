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

#include "qcmatroid/hard_instances.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qcmatroid/combinators.h"
#include "qcmatroid/families.h"

namespace qcmatroid {

namespace {

constexpr std::size_t kMaxRankEnumeration = 18;
constexpr std::size_t kMaxPartitionEnumeration = 12;

void check_partition_params(std::size_t m, std::size_t alpha) {
  if (m < 1 || alpha < 1) throw ParameterError("m and alpha must be >= 1");
  if (m % alpha != 0) {
    throw ParameterError("alpha=" + std::to_string(alpha) +
                         " must divide m=" + std::to_string(m));
  }
}

void check_eps_m(std::size_t m, std::size_t eps_m) {
  if (m < 1) throw ParameterError("m must be >= 1");
  if (eps_m < 1 || eps_m >= m) {
    throw ParameterError("eps*m must be an integer in [1, m); got " +
                         std::to_string(eps_m) + " with m=" +
                         std::to_string(m));
  }
}

void canonicalize(std::vector<ElementList>& blocks) {
  for (auto& block : blocks) std::sort(block.begin(), block.end());
  std::sort(blocks.begin(), blocks.end(),
            [](const ElementList& a, const ElementList& b) {
              return a.front() < b.front();
            });
}

}  // namespace

std::size_t epsilon_times_m(std::size_t m, double epsilon) {
  const double value = epsilon * static_cast<double>(m);
  const double rounded = std::round(value);
  if (!(epsilon > 0 && epsilon < 1) || std::abs(value - rounded) > 1e-9) {
    throw ParameterError("epsilon*m must be an integer with 0 < epsilon < 1 "
                         "(epsilon=" + std::to_string(epsilon) +
                         ", m=" + std::to_string(m) + ")");
  }
  const auto eps_m = static_cast<std::size_t>(rounded);
  check_eps_m(m, eps_m);
  return eps_m;
}

std::size_t HardInstance::useful_threshold() const {
  if (const auto* rank = std::get_if<RankHardParams>(&params)) return rank->m;
  return std::get<PartitionHardParams>(params).slack();
}

HardInstance make_rank_instance(const RankHardParams& params,
                                ElementList secret) {
  check_eps_m(params.m, params.eps_m);
  secret = sorted_set(secret);
  if (secret.size() != params.m) {
    throw ParameterError("rank_hard: |S| must equal m");
  }
  HardInstance inst;
  inst.params = params;
  inst.matroid = free_uniform_union(params.ground_size(), secret, params.m);
  if (params.truncated) inst.matroid = truncate(inst.matroid, params.rank());
  inst.secret_set = std::move(secret);
  return inst;
}

HardInstance make_partition_instance(const PartitionHardParams& params,
                                     std::vector<ElementList> blocks) {
  check_partition_params(params.m, params.alpha);
  if (blocks.size() != params.m) {
    throw ParameterError("partition_hard: need exactly m parts");
  }
  for (const auto& block : blocks) {
    if (block.size() != params.alpha + 1) {
      throw ParameterError("partition_hard: every part needs alpha+1 elements");
    }
  }
  canonicalize(blocks);
  auto base = std::make_shared<PartitionMatroid>(
      blocks, std::vector<std::size_t>(params.m, 1));
  HardInstance inst;
  inst.params = params;
  inst.matroid = l_relax(base, params.slack());
  if (params.truncated) inst.matroid = truncate(inst.matroid, params.rank());
  inst.secret_partition = std::move(blocks);
  return inst;
}

HardInstance sample_rank_instance(std::size_t m, std::size_t eps_m,
                                  bool truncated, Rng& rng) {
  check_eps_m(m, eps_m);
  ElementList pool(3 * m);
  std::iota(pool.begin(), pool.end(), ElementId{0});
  // Partial Fisher-Yates: the first m slots become a uniform m-subset.
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t j = i + uniform_below(rng, pool.size() - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(m);
  return make_rank_instance({m, eps_m, truncated}, std::move(pool));
}

HardInstance sample_partition_instance(std::size_t m, std::size_t alpha,
                                       bool truncated, Rng& rng) {
  check_partition_params(m, alpha);
  const std::size_t n = (alpha + 1) * m;
  ElementList pool(n);
  std::iota(pool.begin(), pool.end(), ElementId{0});
  shuffle(std::span<ElementId>(pool), rng);
  std::vector<ElementList> blocks(m);
  for (std::size_t b = 0; b < m; ++b) {
    blocks[b].assign(pool.begin() + static_cast<std::ptrdiff_t>(b * (alpha + 1)),
                     pool.begin() + static_cast<std::ptrdiff_t>((b + 1) * (alpha + 1)));
  }
  return make_partition_instance({m, alpha, truncated}, std::move(blocks));
}

bool is_rank_witness(std::span<const ElementId> w,
                     std::span<const ElementId> secret, std::size_t m,
                     std::size_t eps_m) {
  if (w.size() + eps_m <= 2 * m) return false;
  std::size_t outside = 0;
  for (ElementId e : w) {
    if (!std::binary_search(secret.begin(), secret.end(), e)) ++outside;
  }
  return outside <= m;
}

bool is_partition_witness(std::span<const ElementId> w,
                          const std::vector<ElementList>& blocks,
                          std::size_t m, std::size_t alpha) {
  if (w.size() != m + m / alpha) return false;
  for (const ElementList& block : blocks) {
    const bool hit = std::any_of(block.begin(), block.end(), [&](ElementId e) {
      return std::binary_search(w.begin(), w.end(), e);
    });
    if (!hit) return false;
  }
  return true;
}

double gamma(double alpha) {
  if (!(alpha >= 1)) throw ParameterError("gamma: alpha must be >= 1");
  const double inv = 1.0 / alpha;
  return std::pow(1.0 + inv, alpha - 1.0 - inv) * std::pow(inv, inv);
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
  }
  return static_cast<std::uint64_t>(result);
}

std::uint64_t count_rank_witness_sets(std::span<const ElementId> w,
                                      std::size_t m, std::size_t eps_m) {
  const std::size_t n = 3 * m;
  if (n > kMaxRankEnumeration) {
    throw SizeLimitError("rank witness enumeration needs 3m <= 18");
  }
  check_eps_m(m, eps_m);
  const ElementList sorted_w = sorted_set(w);
  std::uint64_t count = 0;
  // Walk all m-subsets of [n] as bitmasks in increasing order (Gosper).
  std::uint32_t s = (std::uint32_t{1} << m) - 1;
  const std::uint32_t limit = std::uint32_t{1} << n;
  ElementList secret;
  while (s < limit) {
    secret.clear();
    for (std::size_t e = 0; e < n; ++e) {
      if (s >> e & 1U) secret.push_back(static_cast<ElementId>(e));
    }
    if (is_rank_witness(sorted_w, secret, m, eps_m)) ++count;
    const std::uint32_t c = s & (~s + 1);
    const std::uint32_t r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
  return count;
}

std::uint64_t rank_witness_count_bound(std::size_t w_size, std::size_t m) {
  // |W| = 2m - δm; witnesses have m <= |W| <= 2m.
  if (w_size < m || w_size > 2 * m) return 0;
  return binomial(w_size, w_size - m) *
         binomial(4 * m - w_size, 2 * m - w_size);
}

void for_each_equal_partition(
    std::size_t block_count, std::size_t block_size,
    const std::function<void(const std::vector<ElementList>&)>& visit) {
  const std::size_t n = block_count * block_size;
  std::vector<ElementList> blocks;
  std::vector<bool> used(n, false);
  // Each new block starts at the least unused element, which makes the
  // enumeration canonical (blocks ordered by minimum, no repeats).
  std::function<void(std::size_t)> extend_block;
  std::function<void()> open_block = [&]() {
    if (blocks.size() == block_count) {
      visit(blocks);
      return;
    }
    std::size_t first = 0;
    while (used[first]) ++first;
    used[first] = true;
    blocks.push_back({static_cast<ElementId>(first)});
    extend_block(first + 1);
    blocks.pop_back();
    used[first] = false;
  };
  extend_block = [&](std::size_t from) {
    if (blocks.back().size() == block_size) {
      open_block();
      return;
    }
    for (std::size_t e = from; e < n; ++e) {
      if (used[e]) continue;
      used[e] = true;
      blocks.back().push_back(static_cast<ElementId>(e));
      extend_block(e + 1);
      blocks.back().pop_back();
      used[e] = false;
    }
  };
  if (block_count == 0) {
    visit(blocks);
    return;
  }
  open_block();
}

std::uint64_t count_partition_witness_partitions(std::span<const ElementId> w,
                                                 std::size_t m,
                                                 std::size_t alpha) {
  check_partition_params(m, alpha);
  if ((alpha + 1) * m > kMaxPartitionEnumeration) {
    throw SizeLimitError("partition witness enumeration needs (alpha+1)m <= 12");
  }
  const ElementList sorted_w = sorted_set(w);
  if (sorted_w.size() != m + m / alpha) return 0;
  std::uint64_t count = 0;
  for_each_equal_partition(m, alpha + 1,
                           [&](const std::vector<ElementList>& blocks) {
                             if (is_partition_witness(sorted_w, blocks, m, alpha)) {
                               ++count;
                             }
                           });
  return count;
}

std::uint64_t partition_witness_count_bound(std::size_t m, std::size_t alpha) {
  check_partition_params(m, alpha);
  std::uint64_t bound = 1;
  for (std::size_t i = 2; i <= m; ++i) bound *= i;
  bound *= binomial(m + m / alpha, m);
  // multinomial(αm; α, ..., α) as a product of binomials.
  for (std::size_t rest = alpha * m; rest > 0; rest -= alpha) {
    bound *= binomial(rest, alpha);
  }
  return bound;
}

}  // namespace qcmatroid
