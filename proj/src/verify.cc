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

#include <algorithm>
#include <bit>
#include <limits>
#include <sstream>
#include <string>

namespace qcmatroid {

namespace {

constexpr std::size_t kMaxAxiomGround = 14;
constexpr std::size_t kMaxPartitionGround = 14;
constexpr std::size_t kMaxCircumferenceGround = 16;
constexpr std::size_t kMaxEnumerationGround = 20;

void require_ground(std::size_t n, std::size_t limit, const char* what) {
  if (n > limit) {
    throw SizeLimitError(std::string(what) + " supports at most " +
                         std::to_string(limit) + " elements, got " +
                         std::to_string(n));
  }
}

// Depth-first walk over independent sets in increasing-id order. `visit`
// sees each independent set once; `prune(size, next)` may cut a branch.
template <typename Visit, typename Prune>
void walk_independent(const Matroid& matroid, ElementList& current,
                      std::size_t next, Visit& visit, Prune& prune) {
  visit(current);
  const std::size_t n = matroid.ground_size();
  for (std::size_t e = next; e < n; ++e) {
    if (prune(current.size(), e)) return;
    current.push_back(static_cast<ElementId>(e));
    if (matroid.is_independent(current)) {
      walk_independent(matroid, current, e + 1, visit, prune);
    }
    current.pop_back();
  }
}

}  // namespace

ElementList mask_to_elements(SubsetMask mask) {
  ElementList out;
  while (mask != 0) {
    out.push_back(static_cast<ElementId>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

SubsetMask elements_to_mask(std::span<const ElementId> elems) {
  SubsetMask mask = 0;
  for (ElementId e : elems) mask |= SubsetMask{1} << e;
  return mask;
}

SubsetFamilyOracle::SubsetFamilyOracle(const Matroid& matroid)
    : n_(matroid.ground_size()) {
  require_ground(n_, kMaxGround, "SubsetFamilyOracle");
  table_.resize(std::size_t{1} << n_);
  for (SubsetMask mask = 0; mask < table_.size(); ++mask) {
    table_[mask] = matroid.is_independent(mask_to_elements(mask));
  }
}

SubsetFamilyOracle::SubsetFamilyOracle(std::size_t n,
                                       const std::vector<SubsetMask>& members)
    : n_(n) {
  require_ground(n_, kMaxGround, "SubsetFamilyOracle");
  table_.assign(std::size_t{1} << n_, false);
  for (SubsetMask mask : members) {
    if (mask >= table_.size()) throw ParameterError("member outside ground set");
    table_[mask] = true;
  }
}

std::string AxiomViolation::describe() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::kEmptySetDependent:
      out << "empty set is not independent";
      break;
    case Kind::kDownwardClosure:
      out << "downward closure fails: " << format_set(i)
          << " is independent but its subset " << format_set(j) << " is not";
      break;
    case Kind::kExchange:
      out << "exchange fails: I=" << format_set(i) << " J=" << format_set(j)
          << " and no element of J\\I extends I";
      break;
  }
  return out.str();
}

std::optional<AxiomViolation> check_matroid_axioms(
    const SubsetFamilyOracle& family) {
  const std::size_t n = family.ground_size();
  require_ground(n, kMaxAxiomGround, "check_matroid_axioms");
  const SubsetMask full = static_cast<SubsetMask>((std::size_t{1} << n) - 1);

  if (!family.independent(0)) {
    return AxiomViolation{AxiomViolation::Kind::kEmptySetDependent, {}, {}};
  }
  for (SubsetMask mask = 1; mask <= full; ++mask) {
    if (!family.independent(mask)) continue;
    for (SubsetMask rest = mask; rest != 0; rest &= rest - 1) {
      const SubsetMask sub = mask & ~(rest & (~rest + 1));
      if (!family.independent(sub)) {
        return AxiomViolation{AxiomViolation::Kind::kDownwardClosure,
                              mask_to_elements(mask), mask_to_elements(sub)};
      }
    }
  }

  // With downward closure in place, exchange only needs |J| = |I| + 1.
  std::vector<std::vector<SubsetMask>> levels(n + 1);
  std::vector<SubsetMask> extendable(std::size_t{1} << n, 0);
  for (SubsetMask mask = 0; mask <= full; ++mask) {
    if (!family.independent(mask)) continue;
    levels[std::popcount(mask)].push_back(mask);
    for (std::size_t e = 0; e < n; ++e) {
      const SubsetMask bit = SubsetMask{1} << e;
      if (!(mask & bit) && family.independent(mask | bit)) {
        extendable[mask] |= bit;
      }
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (SubsetMask small : levels[k]) {
      for (SubsetMask big : levels[k + 1]) {
        if ((big & ~small & extendable[small]) == 0) {
          return AxiomViolation{AxiomViolation::Kind::kExchange,
                                mask_to_elements(small), mask_to_elements(big)};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<AxiomViolation> check_matroid_axioms(const Matroid& matroid) {
  require_ground(matroid.ground_size(), kMaxAxiomGround, "check_matroid_axioms");
  return check_matroid_axioms(SubsetFamilyOracle(matroid));
}

std::size_t bf_rank(const Matroid& matroid) {
  const std::size_t n = matroid.ground_size();
  require_ground(n, kMaxEnumerationGround, "bf_rank");
  std::size_t best = 0;
  auto visit = [&](const ElementList& set) {
    best = std::max(best, set.size());
  };
  // Stop once even taking every remaining element cannot beat `best`.
  auto prune = [&](std::size_t size, std::size_t next) {
    return best == n || size + (n - next) <= best;
  };
  ElementList current;
  walk_independent(matroid, current, 0, visit, prune);
  return best;
}

std::size_t bf_partition_size(const SubsetFamilyOracle& family) {
  const std::size_t n = family.ground_size();
  require_ground(n, kMaxPartitionGround, "bf_partition_size");
  for (std::size_t e = 0; e < n; ++e) {
    if (!family.independent(SubsetMask{1} << e)) {
      throw InfeasibleError("element " + std::to_string(e) + " is a loop");
    }
  }
  const std::size_t size = std::size_t{1} << n;
  constexpr std::uint8_t kInf = std::numeric_limits<std::uint8_t>::max();
  std::vector<std::uint8_t> best(size, kInf);
  best[0] = 0;
  for (SubsetMask mask = 1; mask < size; ++mask) {
    // The part holding the lowest element ranges over independent submasks.
    const SubsetMask low = mask & (~mask + 1);
    const SubsetMask rest = mask ^ low;
    std::uint8_t value = kInf;
    for (SubsetMask sub = rest;; sub = (sub - 1) & rest) {
      const SubsetMask part = sub | low;
      if (family.independent(part) && best[mask ^ part] != kInf) {
        value = std::min<std::uint8_t>(value, best[mask ^ part] + 1);
      }
      if (sub == 0) break;
    }
    best[mask] = value;
  }
  return best[size - 1];
}

std::size_t bf_partition_size(const Matroid& matroid) {
  require_ground(matroid.ground_size(), kMaxPartitionGround, "bf_partition_size");
  return bf_partition_size(SubsetFamilyOracle(matroid));
}

std::size_t bf_circumference(const Matroid& matroid) {
  const std::size_t n = matroid.ground_size();
  require_ground(n, kMaxCircumferenceGround, "bf_circumference");
  const SubsetFamilyOracle family(matroid);
  std::size_t longest = 0;
  for (SubsetMask mask = 1; mask < (std::size_t{1} << n); ++mask) {
    if (family.independent(mask)) continue;
    bool minimal = true;
    for (SubsetMask rest = mask; rest != 0 && minimal; rest &= rest - 1) {
      minimal = family.independent(mask & ~(rest & (~rest + 1)));
    }
    if (minimal) {
      longest = std::max<std::size_t>(longest, std::popcount(mask));
    }
  }
  return longest;
}

ElementList bf_max_weight_basis(const Matroid& matroid,
                                const TieBrokenWeights& weights) {
  const std::size_t n = matroid.ground_size();
  require_ground(n, kMaxEnumerationGround, "bf_max_weight_basis");
  if (weights.size() != n) throw ParameterError("need one weight per element");
  const std::size_t r = bf_rank(matroid);

  ElementList best;
  long double best_weight = 0;
  std::uint64_t best_ids = 0;
  bool have = false;
  auto visit = [&](const ElementList& set) {
    if (set.size() != r) return;
    long double total = 0;
    std::uint64_t ids = 0;
    for (ElementId e : set) {
      total += weights.weight(e);
      ids += e;
    }
    if (!have || total > best_weight ||
        (total == best_weight && ids > best_ids)) {
      best = set;
      best_weight = total;
      best_ids = ids;
      have = true;
    }
  };
  auto prune = [&](std::size_t size, std::size_t next) {
    return size + (n - next) < r;
  };
  ElementList current;
  walk_independent(matroid, current, 0, visit, prune);
  return best;
}

}  // namespace qcmatroid
