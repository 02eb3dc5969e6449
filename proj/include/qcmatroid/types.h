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

#ifndef QCMATROID_TYPES_H_
#define QCMATROID_TYPES_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcmatroid {

// Elements of a ground set are dense ids 0..n-1.
using ElementId = std::uint32_t;
using ElementList = std::vector<ElementId>;

// Invalid parameters for a construction (εm non-integral, α not dividing m,
// negative capacities, malformed descriptors...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A combinator was asked to wrap a matroid lacking a needed capability.
class UnsupportedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Exhaustive routines refuse ground sets above their enumeration ceiling.
class SizeLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// The matroid has a loop, so no number of independent sets covers it.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Returns a sorted copy of `elems`; throws ParameterError on duplicates.
ElementList sorted_set(std::span<const ElementId> elems);

// True iff `elems` is strictly increasing.
bool is_strictly_increasing(std::span<const ElementId> elems);

std::string format_set(std::span<const ElementId> elems);

}  // namespace qcmatroid

#endif  // QCMATROID_TYPES_H_
