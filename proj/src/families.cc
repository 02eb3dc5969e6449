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

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>

namespace qcmatroid {

namespace {

// Union-find over only the vertices a query touches, so the work is
// proportional to the query rather than to the whole graph.
class LocalUnionFind {
 public:
  explicit LocalUnionFind(std::size_t expected_edges) {
    index_.reserve(2 * expected_edges);
    parent_.reserve(2 * expected_edges);
  }

  std::uint32_t vertex(std::size_t v) {
    auto [it, inserted] =
        index_.try_emplace(v, static_cast<std::uint32_t>(parent_.size()));
    if (inserted) {
      parent_.push_back(it->second);
      vertices_.push_back(1);
      edges_.push_back(0);
    }
    return it->second;
  }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Adds edge (u, v); returns the root of the resulting component.
  std::uint32_t add_edge(std::uint32_t u, std::uint32_t v) {
    u = find(u);
    v = find(v);
    if (u != v) {
      if (vertices_[u] < vertices_[v]) std::swap(u, v);
      parent_[v] = u;
      vertices_[u] += vertices_[v];
      edges_[u] += edges_[v];
    }
    ++edges_[u];
    return u;
  }

  std::size_t vertices(std::uint32_t root) const { return vertices_[root]; }
  std::size_t edges(std::uint32_t root) const { return edges_[root]; }
  std::size_t size() const { return parent_.size(); }

 private:
  std::unordered_map<std::size_t, std::uint32_t> index_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::size_t> vertices_;
  std::vector<std::size_t> edges_;
};

void check_edges(std::size_t vertex_count, const std::vector<Edge>& edges) {
  for (const auto& [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count) {
      throw ParameterError("edge endpoint outside vertex range");
    }
  }
}

}  // namespace

// Partition matroid.

PartitionMatroid::PartitionMatroid(std::vector<ElementList> parts,
                                   std::vector<std::size_t> capacities)
    : capacities_(std::move(capacities)) {
  if (parts.size() != capacities_.size()) {
    throw ParameterError("partition needs one capacity per part");
  }
  std::size_t n = 0;
  for (const auto& part : parts) n += part.size();
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  part_of_.assign(n, kUnassigned);
  for (std::size_t j = 0; j < parts.size(); ++j) {
    for (ElementId e : parts[j]) {
      if (e >= n) {
        throw ParameterError("partition element " + std::to_string(e) +
                             " outside 0.." + std::to_string(n - 1));
      }
      if (part_of_[e] != kUnassigned) {
        throw ParameterError("element " + std::to_string(e) +
                             " appears in more than one part");
      }
      part_of_[e] = j;
    }
  }
}

PartitionMatroid PartitionMatroid::from_assignment(
    std::vector<std::size_t> part_of, std::vector<std::size_t> capacities) {
  for (std::size_t j : part_of) {
    if (j >= capacities.size()) throw ParameterError("part index out of range");
  }
  PartitionMatroid m;
  m.part_of_ = std::move(part_of);
  m.capacities_ = std::move(capacities);
  return m;
}

bool PartitionMatroid::is_independent(std::span<const ElementId> q) const {
  std::unordered_map<std::size_t, std::size_t> used;
  used.reserve(q.size());
  for (ElementId e : q) {
    const std::size_t j = part_of_[e];
    if (++used[j] > capacities_[j]) return false;
  }
  return true;
}

std::optional<std::size_t> PartitionMatroid::subset_rank(
    std::span<const ElementId> q) const {
  std::unordered_map<std::size_t, std::size_t> used;
  used.reserve(q.size());
  for (ElementId e : q) ++used[part_of_[e]];
  std::size_t rank = 0;
  for (const auto& [j, count] : used) rank += std::min(count, capacities_[j]);
  return rank;
}

std::vector<ElementList> PartitionMatroid::parts() const {
  std::vector<ElementList> out(capacities_.size());
  for (std::size_t e = 0; e < part_of_.size(); ++e) {
    out[part_of_[e]].push_back(static_cast<ElementId>(e));
  }
  return out;
}

// Graphic matroid.

GraphicMatroid::GraphicMatroid(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  check_edges(vertex_count_, edges_);
}

bool GraphicMatroid::is_independent(std::span<const ElementId> q) const {
  LocalUnionFind uf(q.size());
  for (ElementId e : q) {
    const auto [u, v] = edges_[e];
    if (u == v) return false;
    const std::uint32_t a = uf.vertex(u);
    const std::uint32_t b = uf.vertex(v);
    if (uf.find(a) == uf.find(b)) return false;
    uf.add_edge(a, b);
  }
  return true;
}

std::optional<std::size_t> GraphicMatroid::subset_rank(
    std::span<const ElementId> q) const {
  LocalUnionFind uf(q.size());
  std::size_t rank = 0;
  for (ElementId e : q) {
    const auto [u, v] = edges_[e];
    const std::uint32_t a = uf.vertex(u);
    const std::uint32_t b = uf.vertex(v);
    if (uf.find(a) != uf.find(b)) {
      uf.add_edge(a, b);
      ++rank;
    }
  }
  return rank;
}

// Bicircular matroid.

BicircularMatroid::BicircularMatroid(std::size_t vertex_count,
                                     std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  check_edges(vertex_count_, edges_);
}

bool BicircularMatroid::is_independent(std::span<const ElementId> q) const {
  LocalUnionFind uf(q.size());
  for (ElementId e : q) {
    const auto [u, v] = edges_[e];
    const std::uint32_t root = uf.add_edge(uf.vertex(u), uf.vertex(v));
    if (uf.edges(root) > uf.vertices(root)) return false;
  }
  return true;
}

std::optional<std::size_t> BicircularMatroid::subset_rank(
    std::span<const ElementId> q) const {
  LocalUnionFind uf(q.size());
  for (ElementId e : q) {
    const auto [u, v] = edges_[e];
    uf.add_edge(uf.vertex(u), uf.vertex(v));
  }
  std::size_t rank = 0;
  for (std::uint32_t x = 0; x < uf.size(); ++x) {
    if (uf.find(x) == x) rank += std::min(uf.edges(x), uf.vertices(x));
  }
  return rank;
}

// Convex transversal matroid.

ConvexTransversalMatroid::ConvexTransversalMatroid(
    std::size_t position_count, std::vector<Interval> intervals)
    : position_count_(position_count), intervals_(std::move(intervals)) {
  for (const Interval& iv : intervals_) {
    if (iv.lo < 1 || iv.lo > iv.hi || iv.hi > position_count_) {
      throw ParameterError("interval [" + std::to_string(iv.lo) + ", " +
                           std::to_string(iv.hi) + "] not within [1, " +
                           std::to_string(position_count_) + "]");
    }
  }
}

std::size_t ConvexTransversalMatroid::greedy_match(
    std::span<const ElementId> q, bool stop_on_failure) const {
  ElementList order(q.begin(), q.end());
  std::sort(order.begin(), order.end(), [this](ElementId x, ElementId y) {
    const Interval& a = intervals_[x];
    const Interval& b = intervals_[y];
    if (a.hi != b.hi) return a.hi < b.hi;
    return a.lo > b.lo;
  });
  // Maximal runs of free positions, keyed by first position -> last.
  std::map<std::size_t, std::size_t> free_runs;
  if (position_count_ > 0) free_runs.emplace(1, position_count_);
  std::size_t matched = 0;
  for (ElementId x : order) {
    const Interval& iv = intervals_[x];
    auto run = free_runs.upper_bound(iv.lo);
    std::size_t pos = 0;
    if (run != free_runs.begin() && std::prev(run)->second >= iv.lo) {
      run = std::prev(run);
      pos = iv.lo;
    } else if (run != free_runs.end()) {
      pos = run->first;
    }
    if (pos == 0 || pos > iv.hi) {
      if (stop_on_failure) return matched;
      continue;
    }
    const std::size_t first = run->first;
    const std::size_t last = run->second;
    free_runs.erase(run);
    if (first < pos) free_runs.emplace(first, pos - 1);
    if (pos < last) free_runs.emplace(pos + 1, last);
    ++matched;
  }
  return matched;
}

bool ConvexTransversalMatroid::is_independent(
    std::span<const ElementId> q) const {
  return greedy_match(q, /*stop_on_failure=*/true) == q.size();
}

std::optional<std::size_t> ConvexTransversalMatroid::subset_rank(
    std::span<const ElementId> q) const {
  return greedy_match(q, /*stop_on_failure=*/false);
}

// Uniform / free.

UniformMatroid::UniformMatroid(std::size_t n, std::size_t rank)
    : n_(n), rank_(rank) {
  if (rank > n) throw ParameterError("uniform rank exceeds ground size");
}

MatroidPtr make_free(std::size_t n) {
  return std::make_shared<UniformMatroid>(n, n);
}

MatroidPtr make_uniform(std::size_t n, std::size_t rank) {
  return std::make_shared<UniformMatroid>(n, rank);
}

}  // namespace qcmatroid
