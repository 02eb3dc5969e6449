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

#ifndef QCMATROID_COMBINATORS_H_
#define QCMATROID_COMBINATORS_H_

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qcmatroid/oracle.h"
#include "qcmatroid/types.h"

namespace qcmatroid {

// Independent sets of the base of size at most r. The size test runs first,
// so the base never sees a query larger than r.
class TruncatedMatroid final : public Matroid {
 public:
  TruncatedMatroid(MatroidPtr base, std::size_t rank_cap);

  std::size_t ground_size() const override { return base_->ground_size(); }
  bool is_independent(std::span<const ElementId> q) const override;
  std::optional<std::size_t> subset_rank(
      std::span<const ElementId> q) const override;
  bool has_subset_rank() const override { return base_->has_subset_rank(); }
  std::string family() const override { return "truncate"; }

  const MatroidPtr& base() const { return base_; }
  std::size_t rank_cap() const { return rank_cap_; }

 private:
  MatroidPtr base_;
  std::size_t rank_cap_;
};

// Q is independent iff some L ⊆ Q with |L| <= l leaves Q \ L independent in
// the base. Evaluated as rank_base(Q) >= |Q| - l, so the base must expose
// subset_rank().
class LRelaxedMatroid final : public Matroid {
 public:
  LRelaxedMatroid(MatroidPtr base, std::size_t slack);

  std::size_t ground_size() const override { return base_->ground_size(); }
  bool is_independent(std::span<const ElementId> q) const override;
  std::optional<std::size_t> subset_rank(
      std::span<const ElementId> q) const override;
  bool has_subset_rank() const override { return true; }
  std::string family() const override { return "l_relax"; }

  const MatroidPtr& base() const { return base_; }
  std::size_t slack() const { return slack_; }

 private:
  MatroidPtr base_;
  std::size_t slack_;
};

// Union of the free matroid on S with the rank-m uniform matroid on
// T = [n] \ S: Q is independent iff |Q \ S| <= m.
class FreeUniformUnion final : public Matroid {
 public:
  FreeUniformUnion(std::size_t n, ElementList secret, std::size_t m);

  std::size_t ground_size() const override { return in_secret_.size(); }
  bool is_independent(std::span<const ElementId> q) const override;
  std::optional<std::size_t> subset_rank(
      std::span<const ElementId> q) const override;
  bool has_subset_rank() const override { return true; }
  std::string family() const override { return "free_uniform_union"; }

  const ElementList& secret() const { return secret_; }
  std::size_t uniform_rank() const { return m_; }

 private:
  ElementList secret_;
  std::vector<bool> in_secret_;
  std::size_t m_;
};

MatroidPtr truncate(MatroidPtr base, std::size_t rank_cap);
MatroidPtr l_relax(MatroidPtr base, std::size_t slack);
MatroidPtr free_uniform_union(std::size_t n, ElementList secret,
                              std::size_t m);

// Strict total order on elements: heavier first, and on equal weight the
// larger id first. Equivalent to ranking by W * w_e + e for a large W.
class TieBrokenWeights {
 public:
  explicit TieBrokenWeights(std::vector<double> weights)
      : weights_(std::move(weights)) {}

  std::size_t size() const { return weights_.size(); }
  double weight(ElementId e) const { return weights_[e]; }
  const std::vector<double>& weights() const { return weights_; }

  // True iff a precedes b in decreasing order.
  bool heavier(ElementId a, ElementId b) const {
    if (weights_[a] != weights_[b]) return weights_[a] > weights_[b];
    return a > b;
  }

 private:
  std::vector<double> weights_;
};

// `elems` sorted heaviest first under the tie-broken order.
ElementList order_elements(const TieBrokenWeights& weights,
                           std::span<const ElementId> elems);

}  // namespace qcmatroid

#endif  // QCMATROID_COMBINATORS_H_
