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

// Python bindings. Instances travel as descriptor JSON text; the package
// __init__ converts to and from dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <numeric>
#include <sstream>

#include "qcmatroid/algorithms.h"
#include "qcmatroid/bench.h"
#include "qcmatroid/combinators.h"
#include "qcmatroid/descriptor.h"
#include "qcmatroid/generators.h"
#include "qcmatroid/hard_instances.h"
#include "qcmatroid/verify.h"

namespace py = pybind11;
using namespace qcmatroid;

namespace {

struct Instance {
  LoadedInstance loaded;

  static Instance parse(const std::string& text) {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw ParameterError(std::string("invalid JSON: ") + e.what());
    }
    return {instance_from_json(doc)};
  }
  std::string json() const { return loaded.descriptor.dump(); }
  std::size_t ground_size() const { return loaded.matroid->ground_size(); }
  std::string family() const { return loaded.matroid->family(); }
  bool is_independent(ElementList q) const {
    std::sort(q.begin(), q.end());
    return loaded.matroid->is_independent(q);
  }
};

MeteredOracle oracle_for(const Instance& inst, const std::string& cost_model) {
  MeteredOracle oracle(inst.loaded.matroid, make_cost_model(cost_model));
  if (inst.loaded.hard) oracle.set_useful_threshold(inst.loaded.hard->useful_threshold());
  return oracle;
}

py::dict ledger_dict(const CostLedger& l) {
  py::dict d;
  d["total_cost"] = l.total_cost_string();
  d["queries"] = l.query_count;
  d["max_query_size"] = l.max_query_size;
  d["useful_queries"] = l.useful_query_count;
  return d;
}

Instance generate(const std::string& family, std::size_t n, std::uint64_t seed,
                  double epsilon, std::size_t alpha, std::optional<bool> truncated) {
  Rng rng(seed);
  FamilyParams params;
  params.epsilon = epsilon;
  params.alpha = alpha;
  params.truncated = truncated;
  const GeneratedInstance g = generate_family(family, n, params, rng);
  return {instance_from_json(g.hard ? to_json(*g.hard) : to_json(*g.matroid))};
}

py::dict rank_of(const Instance& inst, const std::string& cost_model) {
  MeteredOracle oracle = oracle_for(inst, cost_model);
  const BasisResult r = greedy_basis(oracle);
  py::dict d = ledger_dict(r.ledger);
  d["rank"] = r.rank;
  return d;
}

py::dict basis_of(const Instance& inst, std::optional<std::vector<double>> weights,
                  const std::string& alg, std::size_t c, std::uint64_t seed,
                  const std::string& cost_model) {
  const std::size_t n = inst.ground_size();
  std::vector<double> w = weights.value_or(std::vector<double>(n, 0.0));
  if (w.size() != n) throw ParameterError("need one weight per element");
  const TieBrokenWeights tw(std::move(w));
  MeteredOracle oracle = oracle_for(inst, cost_model);
  BasisResult r;
  if (alg == "greedy") {
    ElementList all(n);
    std::iota(all.begin(), all.end(), ElementId{0});
    r = greedy_basis(oracle, order_elements(tw, all));
  } else if (alg == "bounded-circ") {
    r = max_weight_basis_bounded_circ(oracle, tw, {c, seed});
  } else {
    throw ParameterError("unknown alg '" + alg + "'");
  }
  py::dict d = ledger_dict(r.ledger);
  d["basis"] = r.basis;
  d["rank"] = r.rank;
  return d;
}

py::dict partition_of(const Instance& inst, const std::string& cost_model) {
  MeteredOracle oracle = oracle_for(inst, cost_model);
  const PartitionResult r = partition_size(oracle);
  py::dict d = ledger_dict(r.ledger);
  d["k"] = r.k;
  d["parts"] = r.parts;
  return d;
}

std::optional<std::string> axioms(const Instance& inst) {
  if (auto v = check_matroid_axioms(*inst.loaded.matroid)) return v->describe();
  return std::nullopt;
}

py::dict bench(const std::string& task, const std::string& family,
               std::vector<std::size_t> sizes, std::size_t trials, std::uint64_t seed,
               const std::string& cost_model, std::size_t c, std::size_t jobs) {
  BenchConfig config;
  config.task = task;
  config.family = family;
  config.sizes = std::move(sizes);
  config.trials = trials;
  config.seed = seed;
  config.cost_model = cost_model;
  config.circumference = c;
  config.jobs = jobs;
  BenchOutcome o;
  {
    py::gil_scoped_release release;
    o = run_bench(config);
  }
  std::string csv = csv_header() + "\n";
  for (const BenchRecord& r : o.records) csv += csv_row(r) + "\n";
  py::dict d;
  d["csv"] = csv;
  py::list summary;
  for (const SizeSummary& s : o.summary) {
    py::dict row;
    row["n"] = s.n;
    row["mean"] = s.mean;
    row["median"] = s.median;
    row["std_error"] = s.std_error;
    summary.append(row);
  }
  d["summary"] = summary;
  d["slope"] = o.fit ? py::cast(o.fit->slope) : py::none();
  return d;
}

py::tuple slope(const std::vector<std::pair<double, double>>& points) {
  const SlopeFit f = fit_loglog_slope(points);
  return py::make_tuple(f.slope, f.intercept, f.residual);
}

}  // namespace

PYBIND11_MODULE(_qcmatroid, m) {
  m.doc() = "matroid algorithms under a size-sensitive query cost";

  py::class_<Instance>(m, "Instance")
      .def_static("from_json", &Instance::parse, py::arg("text"))
      .def("to_json", &Instance::json)
      .def_property_readonly("ground_size", &Instance::ground_size)
      .def_property_readonly("family", &Instance::family)
      .def("is_independent", &Instance::is_independent, py::arg("elements"));

  m.def("generate", &generate, py::arg("family"), py::arg("n"), py::arg("seed") = 0,
        py::arg("epsilon") = 0.5, py::arg("alpha") = 3, py::arg("truncated") = py::none());
  m.def("rank", &rank_of, py::arg("instance"), py::arg("cost_model") = "linear");
  m.def("basis", &basis_of, py::arg("instance"), py::arg("weights") = py::none(),
        py::arg("alg") = "greedy", py::arg("c") = 2, py::arg("seed") = 0,
        py::arg("cost_model") = "linear");
  m.def("partition_size", &partition_of, py::arg("instance"),
        py::arg("cost_model") = "linear");
  m.def("check_axioms", &axioms, py::arg("instance"));
  m.def("bf_rank", [](const Instance& i) { return bf_rank(*i.loaded.matroid); });
  m.def("bf_partition_size",
        [](const Instance& i) { return bf_partition_size(*i.loaded.matroid); });
  m.def("gamma", [](double alpha) { return qcmatroid::gamma(alpha); }, py::arg("alpha"));
  m.def("bench", &bench, py::arg("task"), py::arg("family"), py::arg("sizes"),
        py::arg("trials") = 1, py::arg("seed") = 0, py::arg("cost_model") = "linear",
        py::arg("c") = 2, py::arg("jobs") = 1);
  m.def("fit_loglog_slope", &slope, py::arg("points"));
  m.def("family_names", &bench_family_names);

  py::register_exception<InfeasibleError>(m, "InfeasibleError", PyExc_RuntimeError);
  py::register_exception<SizeLimitError>(m, "SizeLimitError", PyExc_ValueError);
  py::register_exception<UnsupportedError>(m, "UnsupportedError", PyExc_TypeError);
  py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
}
