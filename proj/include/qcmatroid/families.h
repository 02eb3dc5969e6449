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

#ifndef QCMATROID_FAMILIES_H_
#define QCMATROID_FAMILIES_H_

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qcmatroid/oracle.h"
#include "qcmatroid/types.h"

namespace qcmatroid {

// I is independent iff |I ∩ E_j| <= c_j for every part j. A capacity-0 part
// makes each of its elements a loop.
class PartitionMatroid final : public Matroid {
 public:
  // `parts` must partition {0, ..., n-1} where n is the total element count.
  PartitionMatroid(std::vector<ElementList> parts,
                   std::vector<std::size_t> capacities);

  // Convenience: element e lies in part part_of[e].
  static PartitionMatroid from_assignment(std::vector<std::size_t> part_of,
                                          std::vector<std::size_t> capacities);

  std::size_t ground_size() const override { return part_of_.size(); }
  bool is_independent(std::span<const ElementId> q) const override;
  std::optional<std::size_t> subset_rank(
      std::span<const ElementId> q) const override;
  bool has_subset_rank() const override { return true; }
  std::string family() const override { return "partition"; }

  std::size_t part_count() const { return capacities_.size(); }
  std::size_t part_of(ElementId e) const { return part_of_[e]; }
  const std::vector<std::size_t>& capacities() const { return capacities_; }
  std::vector<ElementList> parts() const;

 private:
  PartitionMatroid() = default;

  std::vector<std::size_t> part_of_;
  std::vector<std::size_t> capacities_;
};

using Edge = std::pair<std::size_t, std::size_t>;

// Ground set = edges of a multigraph (self-loops and parallel edges allowed).
// Independent sets are forests.
class GraphicMatroid final : public Matroid {
 public:
  GraphicMatroid(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t ground_size() const override { return edges_.size(); }
  bool is_independent(std::span<const ElementId> q) const override;
  // Vertices touched minus components of the queried subgraph.
  std::optional<std::size_t> subset_rank(
      std::span<const ElementId> q) const override;
  bool has_subset_rank() const override { return true; }
  std::string family() const override { return "graphic"; }

  std::size_t vertex_count() const { return vertex_count_; }
  const std::vector<Edge>& edges() const { return edges_; }

 private:
  std::size_t vertex_count_;
  std::vector<Edge> edges_;
};

// Independent iff every component of the queried subgraph has at most as
// many edges as vertices (at most one cycle each).
class BicircularMatroid final : public Matroid {
 public:
  BicircularMatroid(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t ground_size() const override { return edges_.size(); }
  bool is_independent(std::span<const ElementId> q) const override;
  // Sum over components of min(edges, vertices).
  std::optional<std::size_t> subset_rank(
      std::span<const ElementId> q) const override;
  bool has_subset_rank() const override { return true; }
  std::string family() const override { return "bicircular"; }

  std::size_t vertex_count() const { return vertex_count_; }
  const std::vector<Edge>& edges() const { return edges_; }

 private:
  std::size_t vertex_count_;
  std::vector<Edge> edges_;
};

// Closed 1-based interval of positions.
struct Interval {
  std::size_t lo;
  std::size_t hi;
};

// Transversal matroid of a convex bipartite graph: element x may be matched
// to any position in [lo_x, hi_x] ⊆ [1, position_count]. Simple
// job-scheduling is the case lo_x = 1.
class ConvexTransversalMatroid final : public Matroid {
 public:
  ConvexTransversalMatroid(std::size_t position_count,
                           std::vector<Interval> intervals);

  std::size_t ground_size() const override { return intervals_.size(); }
  bool is_independent(std::span<const ElementId> q) const override;
  // Size of the greedy (maximum) matching of q.
  std::optional<std::size_t> subset_rank(
      std::span<const ElementId> q) const override;
  bool has_subset_rank() const override { return true; }
  std::string family() const override { return "transversal"; }

  std::size_t position_count() const { return position_count_; }
  const std::vector<Interval>& intervals() const { return intervals_; }

 private:
  // Matches q greedily by increasing hi (ties: decreasing lo), each to the
  // smallest free position >= lo. Returns the matched count; stops at the
  // first failure when `stop_on_failure`.
  std::size_t greedy_match(std::span<const ElementId> q,
                           bool stop_on_failure) const;

  std::size_t position_count_;
  std::vector<Interval> intervals_;
};

// U_{r,n}: I independent iff |I| <= r. The free matroid is r = n.
class UniformMatroid final : public Matroid {
 public:
  UniformMatroid(std::size_t n, std::size_t rank);

  std::size_t ground_size() const override { return n_; }
  bool is_independent(std::span<const ElementId> q) const override {
    return q.size() <= rank_;
  }
  std::optional<std::size_t> subset_rank(
      std::span<const ElementId> q) const override {
    return std::min(q.size(), rank_);
  }
  bool has_subset_rank() const override { return true; }
  std::string family() const override {
    return rank_ == n_ ? "free" : "uniform";
  }

  std::size_t rank() const { return rank_; }

 private:
  std::size_t n_;
  std::size_t rank_;
};

MatroidPtr make_free(std::size_t n);
MatroidPtr make_uniform(std::size_t n, std::size_t rank);

}  // namespace qcmatroid

#endif  // QCMATROID_FAMILIES_H_
