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

#include "qcmatroid/combinators.h"

#include <algorithm>
#include <string>

namespace qcmatroid {

TruncatedMatroid::TruncatedMatroid(MatroidPtr base, std::size_t rank_cap)
    : base_(std::move(base)), rank_cap_(rank_cap) {
  if (!base_) throw ParameterError("truncate: missing base matroid");
  if (rank_cap_ > base_->ground_size()) {
    throw ParameterError("truncate: rank cap " + std::to_string(rank_cap_) +
                         " exceeds ground size " +
                         std::to_string(base_->ground_size()));
  }
}

bool TruncatedMatroid::is_independent(std::span<const ElementId> q) const {
  return q.size() <= rank_cap_ && base_->is_independent(q);
}

std::optional<std::size_t> TruncatedMatroid::subset_rank(
    std::span<const ElementId> q) const {
  const auto base_rank = base_->subset_rank(q);
  if (!base_rank) return std::nullopt;
  return std::min(*base_rank, rank_cap_);
}

LRelaxedMatroid::LRelaxedMatroid(MatroidPtr base, std::size_t slack)
    : base_(std::move(base)), slack_(slack) {
  if (!base_) throw ParameterError("l_relax: missing base matroid");
  if (!base_->has_subset_rank()) {
    throw UnsupportedError("l_relax: base family '" + base_->family() +
                           "' has no subset-rank procedure");
  }
}

bool LRelaxedMatroid::is_independent(std::span<const ElementId> q) const {
  if (q.size() <= slack_) return true;
  return *base_->subset_rank(q) + slack_ >= q.size();
}

std::optional<std::size_t> LRelaxedMatroid::subset_rank(
    std::span<const ElementId> q) const {
  return std::min(q.size(), *base_->subset_rank(q) + slack_);
}

FreeUniformUnion::FreeUniformUnion(std::size_t n, ElementList secret,
                                   std::size_t m)
    : secret_(std::move(secret)), in_secret_(n, false), m_(m) {
  std::sort(secret_.begin(), secret_.end());
  for (ElementId e : secret_) {
    if (e >= n) {
      throw ParameterError("free_uniform_union: S contains " +
                           std::to_string(e) + " outside 0.." +
                           std::to_string(n == 0 ? 0 : n - 1));
    }
    if (in_secret_[e]) throw ParameterError("free_uniform_union: repeated id");
    in_secret_[e] = true;
  }
}

bool FreeUniformUnion::is_independent(std::span<const ElementId> q) const {
  std::size_t outside = 0;
  for (ElementId e : q) {
    if (!in_secret_[e] && ++outside > m_) return false;
  }
  return true;
}

std::optional<std::size_t> FreeUniformUnion::subset_rank(
    std::span<const ElementId> q) const {
  std::size_t inside = 0;
  for (ElementId e : q) inside += in_secret_[e] ? 1 : 0;
  return inside + std::min(q.size() - inside, m_);
}

MatroidPtr truncate(MatroidPtr base, std::size_t rank_cap) {
  return std::make_shared<TruncatedMatroid>(std::move(base), rank_cap);
}

MatroidPtr l_relax(MatroidPtr base, std::size_t slack) {
  return std::make_shared<LRelaxedMatroid>(std::move(base), slack);
}

MatroidPtr free_uniform_union(std::size_t n, ElementList secret,
                              std::size_t m) {
  return std::make_shared<FreeUniformUnion>(n, std::move(secret), m);
}

ElementList order_elements(const TieBrokenWeights& weights,
                           std::span<const ElementId> elems) {
  ElementList out(elems.begin(), elems.end());
  std::sort(out.begin(), out.end(), [&weights](ElementId a, ElementId b) {
    return weights.heavier(a, b);
  });
  return out;
}

}  // namespace qcmatroid
