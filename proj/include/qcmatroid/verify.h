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

#ifndef QCMATROID_VERIFY_H_
#define QCMATROID_VERIFY_H_

// Exhaustive ground-truth routines for small ground sets. Subsets are bit
// masks over element ids (bit e set iff e is in the set).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qcmatroid/combinators.h"
#include "qcmatroid/oracle.h"
#include "qcmatroid/types.h"

namespace qcmatroid {

using SubsetMask = std::uint32_t;

ElementList mask_to_elements(SubsetMask mask);
SubsetMask elements_to_mask(std::span<const ElementId> elems);

// The independence verdict of every subset of a ground set of size n <= 20.
class SubsetFamilyOracle {
 public:
  static constexpr std::size_t kMaxGround = 20;

  // Materializes all 2^n verdicts of `matroid`.
  explicit SubsetFamilyOracle(const Matroid& matroid);
  // An explicit set family given by its member masks (may violate the
  // axioms; that is what check_matroid_axioms is for).
  SubsetFamilyOracle(std::size_t n, const std::vector<SubsetMask>& members);

  std::size_t ground_size() const { return n_; }
  bool independent(SubsetMask mask) const { return table_[mask]; }

 private:
  std::size_t n_;
  std::vector<bool> table_;
};

struct AxiomViolation {
  enum class Kind { kEmptySetDependent, kDownwardClosure, kExchange };
  Kind kind;
  // Downward closure: I independent, J ⊂ I dependent.
  // Exchange: I, J independent, |I| < |J|, no e in J \ I extends I.
  ElementList i;
  ElementList j;

  std::string describe() const;
};

// nullopt when non-emptiness, downward closure and exchange all hold.
// n <= 14.
std::optional<AxiomViolation> check_matroid_axioms(
    const SubsetFamilyOracle& family);
std::optional<AxiomViolation> check_matroid_axioms(const Matroid& matroid);

// Maximum independent-set size by enumerating independent sets only
// (supersets of dependent sets are never visited). n <= 20.
std::size_t bf_rank(const Matroid& matroid);

// Minimum number of independent sets covering the ground set, by subset DP.
// Throws InfeasibleError when some element is a loop. n <= 14.
std::size_t bf_partition_size(const Matroid& matroid);
std::size_t bf_partition_size(const SubsetFamilyOracle& family);

// Largest circuit size, 0 when every set is independent. n <= 16.
std::size_t bf_circumference(const Matroid& matroid);

// The basis maximizing total weight, ties resolved as in TieBrokenWeights
// (equivalently by the sum of ids). n <= 20.
ElementList bf_max_weight_basis(const Matroid& matroid,
                                const TieBrokenWeights& weights);

}  // namespace qcmatroid

#endif  // QCMATROID_VERIFY_H_
