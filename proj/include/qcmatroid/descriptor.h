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

#ifndef QCMATROID_DESCRIPTOR_H_
#define QCMATROID_DESCRIPTOR_H_

// JSON instance descriptors, one instance per file. The "family" field
// selects the layout:
//
//   partition           "parts": [[ids]...], "capacities": [c...]
//   graphic/bicircular  "vertices": V, "edges": [[u, v]...]
//   transversal         "positions": P, "intervals": [[a, b]...] (1-based)
//   uniform             "n", "r"
//   free                "n"
//   truncate            "r", "base": {...}
//   l_relax             "l", "base": {...}
//   free_uniform_union  "n", "m", "S": [ids]
//   rank_hard           "m", "eps_times_m", "truncated", "S": [ids]
//   partition_hard      "m", "alpha", "truncated", "parts": [[ids]...]

#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"
#include "qcmatroid/hard_instances.h"
#include "qcmatroid/oracle.h"

namespace qcmatroid {

struct LoadedInstance {
  MatroidPtr matroid;
  nlohmann::json descriptor;
  // Set for rank_hard / partition_hard descriptors.
  std::optional<HardInstance> hard;
};

// Throws ParameterError on malformed or inconsistent descriptors.
LoadedInstance instance_from_json(const nlohmann::json& descriptor);
LoadedInstance load_instance(const std::filesystem::path& path);

// Inverse of instance_from_json for every built-in family and combinator.
nlohmann::json to_json(const Matroid& matroid);
nlohmann::json to_json(const HardInstance& instance);

}  // namespace qcmatroid

#endif  // QCMATROID_DESCRIPTOR_H_
