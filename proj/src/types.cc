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

#include "qcmatroid/types.h"

#include <algorithm>
#include <sstream>

namespace qcmatroid {

ElementList sorted_set(std::span<const ElementId> elems) {
  ElementList out(elems.begin(), elems.end());
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw ParameterError("duplicate element in set");
  }
  return out;
}

bool is_strictly_increasing(std::span<const ElementId> elems) {
  for (std::size_t i = 1; i < elems.size(); ++i) {
    if (elems[i - 1] >= elems[i]) return false;
  }
  return true;
}

std::string format_set(std::span<const ElementId> elems) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i > 0) out << ' ';
    out << elems[i];
  }
  out << ']';
  return out.str();
}

}  // namespace qcmatroid
