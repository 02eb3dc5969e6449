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

#ifndef QCMATROID_RANDOM_H_
#define QCMATROID_RANDOM_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace qcmatroid {

// All randomness flows through mt19937_64 plus the helpers below, which do
// not depend on the standard library's distribution implementations, so a
// seed replays identically across toolchains.
using Rng = std::mt19937_64;

// Seed of stream `index` in a run seeded with `master` (splitmix64 mixing).
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index);

inline Rng derive_rng(std::uint64_t master, std::uint64_t index) {
  return Rng(trial_seed(master, index));
}

// Uniform integer in [0, bound). bound must be positive.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

// Uniform double in [0, 1) with 53 random bits.
double uniform_unit(Rng& rng);

template <typename T>
void shuffle(std::span<T> items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::size_t j = uniform_below(rng, i);
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace qcmatroid

#endif  // QCMATROID_RANDOM_H_
