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

#include "qcmatroid/algorithms.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

#include "qcmatroid/random.h"

namespace qcmatroid {

namespace {

// Sorted copy of ordered[0..len).
ElementList sorted_prefix(std::span<const ElementId> ordered, std::size_t len) {
  ElementList q(ordered.begin(), ordered.begin() + len);
  std::sort(q.begin(), q.end());
  return q;
}

void insert_sorted(ElementList& set, ElementId e) {
  set.insert(std::lower_bound(set.begin(), set.end(), e), e);
}

void erase_sorted(ElementList& set, ElementId e) {
  set.erase(std::lower_bound(set.begin(), set.end(), e));
}

ElementList with_element(const ElementList& set, ElementId e) {
  ElementList q;
  q.reserve(set.size() + 1);
  auto pos = std::lower_bound(set.begin(), set.end(), e);
  q.insert(q.end(), set.begin(), pos);
  q.push_back(e);
  q.insert(q.end(), pos, set.end());
  return q;
}

// Each element of `pool` independently with probability p, order preserved.
// Gaps between picks are geometric, so the cost is proportional to the
// sample rather than to the pool.
ElementList bernoulli_sample(std::span<const ElementId> pool, double p,
                             Rng& rng) {
  ElementList out;
  if (p >= 1.0) return ElementList(pool.begin(), pool.end());
  if (p <= 0.0) return out;
  const double log_q = std::log1p(-p);
  std::size_t i = 0;
  while (true) {
    const double u = 1.0 - uniform_unit(rng);  // (0, 1]
    const double gap = std::floor(std::log(u) / log_q);
    if (gap >= static_cast<double>(pool.size() - i)) break;
    i += static_cast<std::size_t>(gap);
    out.push_back(pool[i]);
    ++i;
    if (i >= pool.size()) break;
  }
  return out;
}

// Removes the lightest element of the least dependent prefix of `ordered`
// (heaviest first) until the whole list is independent. Each removed element
// is reported to `on_remove`.
template <typename OnRemove>
void prune_until_independent(MeteredOracle& oracle, ElementList& ordered,
                             OnRemove on_remove) {
  while (!oracle.query(sorted_prefix(ordered, ordered.size()))) {
    const auto j = min_dependent_prefix(oracle, ordered);
    if (!j) break;  // only reachable with a nondeterministic oracle
    const ElementId drop = ordered[*j - 1];
    ordered.erase(ordered.begin() + static_cast<std::ptrdiff_t>(*j - 1));
    on_remove(drop);
  }
}

}  // namespace

BasisResult greedy_basis(MeteredOracle& oracle,
                         std::span<const ElementId> order) {
  BasisResult result;
  for (ElementId e : order) {
    ElementList candidate = with_element(result.basis, e);
    if (oracle.query(candidate)) result.basis = std::move(candidate);
  }
  result.rank = result.basis.size();
  result.ledger = oracle.ledger_snapshot();
  return result;
}

BasisResult greedy_basis(MeteredOracle& oracle) {
  ElementList order(oracle.ground_size());
  std::iota(order.begin(), order.end(), ElementId{0});
  return greedy_basis(oracle, order);
}

std::size_t rank(MeteredOracle& oracle) { return greedy_basis(oracle).rank; }

std::optional<std::size_t> min_dependent_prefix(
    IndependenceOracle& oracle, std::span<const ElementId> ordered) {
  if (ordered.empty()) return std::nullopt;
  if (oracle.query(sorted_prefix(ordered, ordered.size()))) return std::nullopt;
  // prefix(lo - 1) independent, prefix(hi) dependent.
  std::size_t lo = 1;
  std::size_t hi = ordered.size();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (oracle.query(sorted_prefix(ordered, mid))) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return hi;
}

BasisResult max_weight_basis_bounded_circ(MeteredOracle& oracle,
                                          const TieBrokenWeights& weights,
                                          const BoundedCircParams& params) {
  const std::size_t n = oracle.ground_size();
  if (params.circumference < 1) {
    throw ParameterError("circumference bound must be >= 1");
  }
  if (weights.size() != n) {
    throw ParameterError("need one weight per element");
  }
  Rng rng(params.seed);

  ElementList all(n);
  std::iota(all.begin(), all.end(), ElementId{0});
  // B, heaviest first. Removals are marked and compacted after each round.
  ElementList remaining = order_elements(weights, all);
  std::vector<bool> removed(n, false);

  const double nd = static_cast<double>(n);
  const double p =
      n <= 1 ? 1.0 : std::pow(nd, -1.0 / static_cast<double>(params.circumference));
  const std::size_t rounds =
      n <= 1 ? 0 : static_cast<std::size_t>(std::ceil(nd * std::log(nd)));

  for (std::size_t t = 0; t < rounds; ++t) {
    ElementList sample = bernoulli_sample(remaining, p, rng);
    bool any_removed = false;
    prune_until_independent(oracle, sample, [&](ElementId e) {
      removed[e] = true;
      any_removed = true;
    });
    if (any_removed) {
      std::erase_if(remaining, [&](ElementId e) { return removed[e]; });
    }
  }
  prune_until_independent(oracle, remaining, [](ElementId) {});

  BasisResult result;
  result.basis = std::move(remaining);
  std::sort(result.basis.begin(), result.basis.end());
  result.rank = result.basis.size();
  result.ledger = oracle.ledger_snapshot();
  return result;
}

namespace {

// Incremental matroid partitioning. Classes are kept sorted; owner_[e] is the
// class holding e, or kNone.
class CoverBuilder {
 public:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  CoverBuilder(IndependenceOracle& oracle, std::size_t lambda)
      : oracle_(oracle),
        classes_(lambda),
        owner_(oracle.ground_size(), kNone),
        parent_(oracle.ground_size(), kNone),
        visited_(oracle.ground_size(), false) {}

  // Inserts x, rerouting along a shortest augmenting path if needed. False
  // when no path exists, i.e. the elements so far admit no λ-cover.
  bool insert(ElementId x) {
    std::fill(visited_.begin(), visited_.end(), false);
    std::deque<ElementId> queue{x};
    visited_[x] = true;
    parent_[x] = kNone;
    while (!queue.empty()) {
      const ElementId u = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < classes_.size(); ++i) {
        if (i != owner_[u] && oracle_.query(with_element(classes_[i], u))) {
          apply_path(u, i);
          return true;
        }
      }
      for (std::size_t i = 0; i < classes_.size(); ++i) {
        if (i != owner_[u]) discover_exchanges(u, i, queue);
      }
    }
    return false;
  }

  std::vector<ElementList> take_classes() { return std::move(classes_); }

 private:
  // Queues every unvisited y in class i with class_i - y + u independent.
  // Class_i + u is dependent here, so its unique circuit C decides the
  // answer: class_i - U + u is independent iff U meets C. Each neighbour is
  // found by binary search over the unvisited members.
  void discover_exchanges(ElementId u, std::size_t i,
                          std::deque<ElementId>& queue) {
    const ElementList& cls = classes_[i];
    ElementList unvisited;
    for (ElementId y : cls) {
      if (!visited_[y]) unvisited.push_back(y);
    }
    std::size_t start = 0;
    while (start < unvisited.size()) {
      const std::span<const ElementId> pool(unvisited.data() + start,
                                            unvisited.size() - start);
      if (!oracle_.query(without_prefix(cls, pool, pool.size(), u))) return;
      // Least prefix of `pool` whose removal breaks the circuit.
      std::size_t lo = 1;
      std::size_t hi = pool.size();
      while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (oracle_.query(without_prefix(cls, pool, mid, u))) {
          hi = mid;
        } else {
          lo = mid + 1;
        }
      }
      const ElementId y = pool[hi - 1];
      visited_[y] = true;
      parent_[y] = u;
      queue.push_back(y);
      // pool[0..hi-1) misses the circuit, so none of it neighbours u.
      start += hi;
    }
  }

  // cls minus the first `len` entries of `pool`, plus u; sorted.
  static ElementList without_prefix(const ElementList& cls,
                                    std::span<const ElementId> pool,
                                    std::size_t len, ElementId u) {
    ElementList drop(pool.begin(), pool.begin() + len);
    std::sort(drop.begin(), drop.end());
    ElementList q;
    q.reserve(cls.size() + 1);
    std::set_difference(cls.begin(), cls.end(), drop.begin(), drop.end(),
                        std::back_inserter(q));
    insert_sorted(q, u);
    return q;
  }

  // u joins class `sink`; each predecessor takes the slot its successor
  // vacated.
  void apply_path(ElementId u, std::size_t sink) {
    ElementId cur = u;
    std::size_t target = sink;
    while (true) {
      const std::size_t old = owner_[cur];
      if (old != kNone) erase_sorted(classes_[old], cur);
      insert_sorted(classes_[target], cur);
      owner_[cur] = target;
      const std::size_t prev = parent_[cur];
      if (prev == kNone) break;
      cur = static_cast<ElementId>(prev);
      target = old;
    }
  }

  IndependenceOracle& oracle_;
  std::vector<ElementList> classes_;
  std::vector<std::size_t> owner_;
  std::vector<std::size_t> parent_;
  std::vector<bool> visited_;
};

}  // namespace

std::optional<std::vector<ElementList>> base_cover(IndependenceOracle& oracle,
                                                   std::size_t lambda) {
  if (lambda < 1) throw ParameterError("base_cover: lambda must be >= 1");
  CoverBuilder builder(oracle, lambda);
  const std::size_t n = oracle.ground_size();
  for (std::size_t x = 0; x < n; ++x) {
    if (!builder.insert(static_cast<ElementId>(x))) return std::nullopt;
  }
  return builder.take_classes();
}

PartitionResult partition_size(MeteredOracle& oracle) {
  PartitionResult result;
  const std::size_t n = oracle.ground_size();
  if (n == 0) {
    result.ledger = oracle.ledger_snapshot();
    return result;
  }

  auto run_test = [&](std::size_t lambda) {
    PartitionTest test;
    test.lambda = lambda;
    test.rank_cap = (n + lambda - 1) / lambda;
    const long double before = oracle.ledger().total_cost();
    const std::uint64_t queries_before = oracle.ledger().query_count;
    CappedOracle capped(oracle, test.rank_cap);
    auto cover = base_cover(capped, lambda);
    test.feasible = cover.has_value();
    test.max_forwarded_size = capped.max_forwarded_size();
    test.cost = oracle.ledger().total_cost() - before;
    test.queries = oracle.ledger().query_count - queries_before;
    result.tests.push_back(test);
    return cover;
  };

  std::size_t lo = 1;
  std::size_t hi = n;
  std::optional<std::vector<ElementList>> best;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (auto cover = run_test(mid)) {
      hi = mid;
      best = std::move(cover);
    } else {
      lo = mid + 1;
    }
  }
  if (!best) {
    best = run_test(hi);
    if (!best) {
      throw InfeasibleError(
          "matroid has a loop; no number of independent sets covers it");
    }
  }
  result.k = hi;
  result.parts = std::move(*best);
  result.ledger = oracle.ledger_snapshot();
  return result;
}

}  // namespace qcmatroid
