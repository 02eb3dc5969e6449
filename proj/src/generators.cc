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

#include "qcmatroid/generators.h"

#include <algorithm>
#include <cmath>

#include "qcmatroid/combinators.h"

namespace qcmatroid {

std::vector<Edge> random_multigraph(std::size_t vertex_count,
                                    std::size_t edge_count, bool allow_loops,
                                    Rng& rng) {
  if (vertex_count == 0 && edge_count > 0) {
    throw ParameterError("edges need at least one vertex");
  }
  if (!allow_loops && vertex_count < 2 && edge_count > 0) {
    throw ParameterError("loop-free edges need at least two vertices");
  }
  std::vector<Edge> edges;
  edges.reserve(edge_count);
  while (edges.size() < edge_count) {
    const std::size_t u = uniform_below(rng, vertex_count);
    const std::size_t v = uniform_below(rng, vertex_count);
    if (u == v && !allow_loops) continue;
    edges.emplace_back(u, v);
  }
  return edges;
}

std::vector<Edge> parallel_pairs(std::size_t pair_count) {
  std::vector<Edge> edges;
  edges.reserve(2 * pair_count);
  for (std::size_t i = 0; i < pair_count; ++i) {
    edges.emplace_back(2 * i, 2 * i + 1);
    edges.emplace_back(2 * i, 2 * i + 1);
  }
  return edges;
}

PartitionMatroid random_partition_matroid(std::size_t n, Rng& rng) {
  std::vector<std::size_t> part_of(n);
  std::vector<std::size_t> sizes;
  std::size_t e = 0;
  while (e < n) {
    const std::size_t size =
        std::min<std::size_t>(n - e, 1 + uniform_below(rng, 4));
    for (std::size_t i = 0; i < size; ++i) part_of[e++] = sizes.size();
    sizes.push_back(size);
  }
  // Scatter part labels across ids.
  shuffle(std::span<std::size_t>(part_of), rng);
  std::vector<std::size_t> capacities;
  for (std::size_t size : sizes) {
    capacities.push_back(1 + uniform_below(rng, size));
  }
  return PartitionMatroid::from_assignment(std::move(part_of),
                                           std::move(capacities));
}

ConvexTransversalMatroid random_transversal(std::size_t n,
                                            std::size_t position_count,
                                            Rng& rng) {
  if (position_count == 0) throw ParameterError("need at least one position");
  std::vector<Interval> intervals;
  intervals.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t a = 1 + uniform_below(rng, position_count);
    std::size_t b = 1 + uniform_below(rng, position_count);
    if (a > b) std::swap(a, b);
    intervals.push_back({a, b});
  }
  return ConvexTransversalMatroid(position_count, std::move(intervals));
}

const std::vector<std::string>& bench_family_names() {
  static const std::vector<std::string> kNames = {
      "graphic-random", "bicircular-random", "parallel-pairs",
      "partition-random", "transversal-random", "uniform",
      "free", "rank-hard", "partition-hard"};
  return kNames;
}

GeneratedInstance generate_family(const std::string& family, std::size_t n,
                                  const FamilyParams& params, Rng& rng) {
  GeneratedInstance out;
  auto coin = [&]() {
    return params.truncated ? *params.truncated : (rng() >> 63) != 0;
  };
  if (family == "graphic-random" || family == "bicircular-random") {
    const std::size_t vertices = std::max<std::size_t>(2, n / 2);
    auto edges = random_multigraph(vertices, n, /*allow_loops=*/false, rng);
    if (family == "graphic-random") {
      out.matroid = std::make_shared<GraphicMatroid>(vertices, std::move(edges));
    } else {
      out.matroid =
          std::make_shared<BicircularMatroid>(vertices, std::move(edges));
    }
  } else if (family == "parallel-pairs") {
    const std::size_t pairs = n / 2;
    out.matroid =
        std::make_shared<GraphicMatroid>(2 * pairs, parallel_pairs(pairs));
  } else if (family == "partition-random") {
    out.matroid = std::make_shared<PartitionMatroid>(
        random_partition_matroid(n, rng));
  } else if (family == "transversal-random") {
    out.matroid = std::make_shared<ConvexTransversalMatroid>(
        random_transversal(n, std::max<std::size_t>(1, n / 2), rng));
  } else if (family == "uniform") {
    out.matroid = make_uniform(n, n / 2);
  } else if (family == "free") {
    out.matroid = make_free(n);
  } else if (family == "rank-hard") {
    const std::size_t m = std::max<std::size_t>(1, n / 3);
    const auto eps_m = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::floor(params.epsilon * m)));
    out.hard = sample_rank_instance(m, eps_m, coin(), rng);
  } else if (family == "partition-hard") {
    const std::size_t alpha = params.alpha;
    if (alpha == 0) throw ParameterError("alpha must be >= 1");
    const std::size_t m = n / (alpha + 1) / alpha * alpha;
    if (m == 0) {
      throw ParameterError("n too small for partition-hard with alpha=" +
                           std::to_string(alpha));
    }
    out.hard = sample_partition_instance(m, alpha, coin(), rng);
  } else {
    throw ParameterError("unknown family '" + family + "'");
  }
  if (out.hard) {
    out.matroid = out.hard->matroid;
    out.useful_threshold = out.hard->useful_threshold();
  }
  return out;
}

}  // namespace qcmatroid
