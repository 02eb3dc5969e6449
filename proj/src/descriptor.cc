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

#include "qcmatroid/descriptor.h"

#include <fstream>
#include <sstream>
#include <string>

#include "qcmatroid/combinators.h"
#include "qcmatroid/families.h"

namespace qcmatroid {

namespace {

using nlohmann::json;

const json& field(const json& d, const char* name) {
  if (!d.is_object() || !d.contains(name)) {
    throw ParameterError(std::string("descriptor missing field '") + name + "'");
  }
  return d.at(name);
}

// Nonnegative integer field; rejects negatives and non-integers explicitly
// so that e.g. a capacity of -1 produces a readable message.
std::size_t count_value(const json& value, const std::string& what) {
  if (!value.is_number_integer()) {
    throw ParameterError(what + " must be an integer");
  }
  if (value.get<long long>() < 0) {
    throw ParameterError(what + " must be >= 0, got " + value.dump());
  }
  return value.get<std::size_t>();
}

std::size_t count_field(const json& d, const char* name) {
  return count_value(field(d, name), std::string("'") + name + "'");
}

ElementList id_list(const json& value, const std::string& what) {
  if (!value.is_array()) throw ParameterError(what + " must be an array");
  ElementList out;
  out.reserve(value.size());
  for (const json& v : value) {
    out.push_back(static_cast<ElementId>(count_value(v, what + " entry")));
  }
  return out;
}

std::vector<Edge> edge_list(const json& d) {
  const json& edges = field(d, "edges");
  if (!edges.is_array()) throw ParameterError("'edges' must be an array");
  std::vector<Edge> out;
  for (const json& e : edges) {
    if (!e.is_array() || e.size() != 2) {
      throw ParameterError("each edge must be a pair [u, v]");
    }
    out.emplace_back(count_value(e[0], "edge endpoint"),
                     count_value(e[1], "edge endpoint"));
  }
  return out;
}

bool truncated_flag(const json& d) {
  const json& t = field(d, "truncated");
  if (!t.is_boolean()) throw ParameterError("'truncated' must be a boolean");
  return t.get<bool>();
}

std::vector<ElementList> parts_field(const json& d) {
  const json& parts = field(d, "parts");
  if (!parts.is_array()) throw ParameterError("'parts' must be an array");
  std::vector<ElementList> out;
  for (const json& p : parts) out.push_back(id_list(p, "part"));
  return out;
}

json ids_to_json(std::span<const ElementId> ids) {
  return json(std::vector<ElementId>(ids.begin(), ids.end()));
}

}  // namespace

LoadedInstance instance_from_json(const json& d) {
  const json& family_field = field(d, "family");
  if (!family_field.is_string()) throw ParameterError("'family' must be a string");
  const std::string family = family_field.get<std::string>();
  LoadedInstance out;
  out.descriptor = d;

  if (family == "partition") {
    const json& caps = field(d, "capacities");
    if (!caps.is_array()) throw ParameterError("'capacities' must be an array");
    std::vector<std::size_t> capacities;
    for (const json& c : caps) capacities.push_back(count_value(c, "capacity"));
    out.matroid =
        std::make_shared<PartitionMatroid>(parts_field(d), std::move(capacities));
  } else if (family == "graphic") {
    out.matroid = std::make_shared<GraphicMatroid>(count_field(d, "vertices"),
                                                   edge_list(d));
  } else if (family == "bicircular") {
    out.matroid = std::make_shared<BicircularMatroid>(
        count_field(d, "vertices"), edge_list(d));
  } else if (family == "transversal") {
    const json& ivs = field(d, "intervals");
    if (!ivs.is_array()) throw ParameterError("'intervals' must be an array");
    std::vector<Interval> intervals;
    for (const json& iv : ivs) {
      if (!iv.is_array() || iv.size() != 2) {
        throw ParameterError("each interval must be a pair [a, b]");
      }
      intervals.push_back({count_value(iv[0], "interval start"),
                           count_value(iv[1], "interval end")});
    }
    out.matroid = std::make_shared<ConvexTransversalMatroid>(
        count_field(d, "positions"), std::move(intervals));
  } else if (family == "uniform") {
    out.matroid = make_uniform(count_field(d, "n"), count_field(d, "r"));
  } else if (family == "free") {
    out.matroid = make_free(count_field(d, "n"));
  } else if (family == "truncate") {
    out.matroid = truncate(instance_from_json(field(d, "base")).matroid,
                           count_field(d, "r"));
  } else if (family == "l_relax") {
    out.matroid = l_relax(instance_from_json(field(d, "base")).matroid,
                          count_field(d, "l"));
  } else if (family == "free_uniform_union") {
    out.matroid = free_uniform_union(count_field(d, "n"),
                                     id_list(field(d, "S"), "'S'"),
                                     count_field(d, "m"));
  } else if (family == "rank_hard") {
    RankHardParams params{count_field(d, "m"), count_field(d, "eps_times_m"),
                          truncated_flag(d)};
    out.hard = make_rank_instance(params, id_list(field(d, "S"), "'S'"));
    out.matroid = out.hard->matroid;
  } else if (family == "partition_hard") {
    PartitionHardParams params{count_field(d, "m"), count_field(d, "alpha"),
                               truncated_flag(d)};
    out.hard = make_partition_instance(params, parts_field(d));
    out.matroid = out.hard->matroid;
  } else {
    throw ParameterError("unknown family '" + family + "'");
  }
  return out;
}

LoadedInstance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot read instance file " + path.string());
  json d;
  try {
    in >> d;
  } catch (const json::exception& e) {
    throw ParameterError("instance file " + path.string() +
                         " is not valid JSON: " + e.what());
  }
  return instance_from_json(d);
}

json to_json(const Matroid& matroid) {
  if (const auto* p = dynamic_cast<const PartitionMatroid*>(&matroid)) {
    json parts = json::array();
    for (const auto& part : p->parts()) parts.push_back(ids_to_json(part));
    return {{"family", "partition"},
            {"parts", parts},
            {"capacities", p->capacities()}};
  }
  auto edges_json = [](const std::vector<Edge>& edges) {
    json out = json::array();
    for (const auto& [u, v] : edges) out.push_back({u, v});
    return out;
  };
  if (const auto* g = dynamic_cast<const GraphicMatroid*>(&matroid)) {
    return {{"family", "graphic"},
            {"vertices", g->vertex_count()},
            {"edges", edges_json(g->edges())}};
  }
  if (const auto* b = dynamic_cast<const BicircularMatroid*>(&matroid)) {
    return {{"family", "bicircular"},
            {"vertices", b->vertex_count()},
            {"edges", edges_json(b->edges())}};
  }
  if (const auto* t = dynamic_cast<const ConvexTransversalMatroid*>(&matroid)) {
    json ivs = json::array();
    for (const Interval& iv : t->intervals()) ivs.push_back({iv.lo, iv.hi});
    return {{"family", "transversal"},
            {"positions", t->position_count()},
            {"intervals", ivs}};
  }
  if (const auto* u = dynamic_cast<const UniformMatroid*>(&matroid)) {
    if (u->rank() == u->ground_size()) {
      return {{"family", "free"}, {"n", u->ground_size()}};
    }
    return {{"family", "uniform"}, {"n", u->ground_size()}, {"r", u->rank()}};
  }
  if (const auto* tr = dynamic_cast<const TruncatedMatroid*>(&matroid)) {
    return {{"family", "truncate"},
            {"r", tr->rank_cap()},
            {"base", to_json(*tr->base())}};
  }
  if (const auto* lr = dynamic_cast<const LRelaxedMatroid*>(&matroid)) {
    return {{"family", "l_relax"},
            {"l", lr->slack()},
            {"base", to_json(*lr->base())}};
  }
  if (const auto* fu = dynamic_cast<const FreeUniformUnion*>(&matroid)) {
    return {{"family", "free_uniform_union"},
            {"n", fu->ground_size()},
            {"m", fu->uniform_rank()},
            {"S", ids_to_json(fu->secret())}};
  }
  throw UnsupportedError("no descriptor for family '" + matroid.family() + "'");
}

json to_json(const HardInstance& instance) {
  if (const auto* rank = std::get_if<RankHardParams>(&instance.params)) {
    return {{"family", "rank_hard"},
            {"m", rank->m},
            {"eps_times_m", rank->eps_m},
            {"truncated", rank->truncated},
            {"S", ids_to_json(instance.secret_set)}};
  }
  const auto& part = std::get<PartitionHardParams>(instance.params);
  json parts = json::array();
  for (const auto& block : instance.secret_partition) {
    parts.push_back(ids_to_json(block));
  }
  return {{"family", "partition_hard"},
          {"m", part.m},
          {"alpha", part.alpha},
          {"truncated", part.truncated},
          {"parts", parts}};
}

}  // namespace qcmatroid
