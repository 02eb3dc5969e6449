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

// qcm: generate instances, run the algorithms under a metered oracle, verify
// small instances by brute force, and run scaling benchmarks.

#include <unistd.h>

#include <bit>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qcmatroid/algorithms.h"
#include "qcmatroid/bench.h"
#include "qcmatroid/combinators.h"
#include "qcmatroid/descriptor.h"
#include "qcmatroid/generators.h"
#include "qcmatroid/hard_instances.h"
#include "qcmatroid/verify.h"

namespace qcmatroid {
namespace {

struct Common {
  std::string instance;
  std::uint64_t seed = 0;
  std::string cost_model = "linear";
  std::string out;
  std::string trace;
};

bool use_color() {
  return std::getenv("NO_COLOR") == nullptr && isatty(fileno(stdout));
}

std::string badge(bool ok) {
  if (!use_color()) return ok ? "PASS" : "FAIL";
  return ok ? "\033[32mPASS\033[0m" : "\033[31mFAIL\033[0m";
}

std::string join(const ElementList& ids) {
  std::string s;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(ids[i]);
  }
  return s;
}

std::string ledger_text(const CostLedger& l) {
  return "total_cost=" + l.total_cost_string() +
         " queries=" + std::to_string(l.query_count) +
         " max_query_size=" + std::to_string(l.max_query_size) +
         " useful_queries=" + std::to_string(l.useful_query_count);
}

// Writes to --out, or stdout when it is empty.
void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

LoadedInstance load(const Common& c) {
  if (c.instance.empty()) throw ParameterError("--instance is required");
  return load_instance(c.instance);
}

MeteredOracle metered(const LoadedInstance& inst, const Common& c) {
  MeteredOracle oracle(inst.matroid, make_cost_model(c.cost_model));
  if (inst.hard) oracle.set_useful_threshold(inst.hard->useful_threshold());
  oracle.enable_trace(!c.trace.empty());
  return oracle;
}

void finish(const MeteredOracle& oracle, const Common& c, const std::string& task,
            const std::string& answer, double wall_ms) {
  if (!c.trace.empty()) {
    std::ofstream f(c.trace);
    if (!f) throw std::runtime_error("cannot write " + c.trace);
    write_trace(f, oracle.trace());
  }
  if (!c.out.empty()) {
    BenchRecord r;
    r.task = task;
    r.family = oracle.matroid().family();
    r.n = oracle.ground_size();
    r.seed = c.seed;
    r.cost_model = oracle.cost_model().to_string();
    copy_ledger(oracle.ledger(), r);
    r.answer = answer;
    r.wall_ms = wall_ms;
    emit(c.out, csv_header() + "\n" + csv_row(r) + "\n");
  }
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                   start)
      .count();
}

// gen

struct GenFlags {
  std::string family;
  std::size_t n = 12;
  std::optional<std::size_t> m;
  double epsilon = 0.5;
  std::size_t alpha = 3;
  std::optional<bool> truncated;
  std::optional<std::size_t> vertices;
  std::optional<std::size_t> edges;
};

int run_gen(const Common& c, const GenFlags& g) {
  Rng rng(c.seed);
  const bool cut = g.truncated.value_or(false);
  nlohmann::json doc;
  if (g.family == "rank-hard" && g.m) {
    doc = to_json(sample_rank_instance(*g.m, epsilon_times_m(*g.m, g.epsilon), cut, rng));
  } else if (g.family == "partition-hard" && g.m) {
    doc = to_json(sample_partition_instance(*g.m, g.alpha, cut, rng));
  } else if ((g.family == "graphic-random" || g.family == "bicircular-random") &&
             (g.vertices || g.edges)) {
    const std::size_t v = g.vertices.value_or(std::max<std::size_t>(2, g.n / 2));
    const std::size_t e = g.edges.value_or(g.n);
    if (v == 0 && e > 0) throw ParameterError("edges need at least one vertex");
    const auto edges = random_multigraph(v, e, false, rng);
    if (g.family == "graphic-random") {
      doc = to_json(GraphicMatroid(v, edges));
    } else {
      doc = to_json(BicircularMatroid(v, edges));
    }
  } else {
    FamilyParams params;
    params.epsilon = g.epsilon;
    params.alpha = g.alpha;
    params.truncated = g.truncated;
    const GeneratedInstance inst = generate_family(g.family, g.n, params, rng);
    doc = inst.hard ? to_json(*inst.hard) : to_json(*inst.matroid);
  }
  emit(c.out, doc.dump(2) + "\n");
  return 0;
}

// basis / rank / partition

struct BasisFlags {
  std::string alg = "greedy";
  std::size_t c = 2;
  std::string weights;
  std::optional<std::uint64_t> random_weights;
};

std::vector<double> read_weights(const BasisFlags& b, std::size_t n) {
  std::vector<double> w(n);
  if (b.random_weights) {
    Rng rng(*b.random_weights);
    for (double& x : w) x = uniform_unit(rng);
    return w;
  }
  if (b.weights.empty()) return w;
  std::ifstream f(b.weights);
  if (!f) throw ParameterError("cannot read weights file " + b.weights);
  std::vector<double> read;
  std::string token;
  while (f >> token) {
    for (char& ch : token) {
      if (ch == ',') ch = ' ';
    }
    std::istringstream in(token);
    double x;
    while (in >> x) read.push_back(x);
  }
  if (read.size() != n) {
    throw ParameterError("weights file has " + std::to_string(read.size()) +
                         " values, expected " + std::to_string(n));
  }
  return read;
}

int run_basis(const Common& c, const BasisFlags& b) {
  const LoadedInstance inst = load(c);
  MeteredOracle oracle = metered(inst, c);
  const std::size_t n = oracle.ground_size();
  const TieBrokenWeights weights(read_weights(b, n));
  const auto start = std::chrono::steady_clock::now();
  BasisResult r;
  if (b.alg == "greedy") {
    ElementList all(n);
    std::iota(all.begin(), all.end(), ElementId{0});
    r = greedy_basis(oracle, order_elements(weights, all));
  } else if (b.alg == "bounded-circ") {
    r = max_weight_basis_bounded_circ(oracle, weights, {b.c, c.seed});
  } else {
    throw ParameterError("unknown --alg '" + b.alg + "'");
  }
  const double ms = elapsed_ms(start);
  std::cout << "basis=" << join(r.basis) << " rank=" << r.rank << ' '
            << ledger_text(r.ledger) << '\n';
  finish(oracle, c, "basis-" + b.alg, "rank=" + std::to_string(r.rank), ms);
  return 0;
}

int run_rank(const Common& c) {
  const LoadedInstance inst = load(c);
  MeteredOracle oracle = metered(inst, c);
  const auto start = std::chrono::steady_clock::now();
  const BasisResult r = greedy_basis(oracle);
  const double ms = elapsed_ms(start);
  std::cout << "rank=" << r.rank << ' ' << ledger_text(r.ledger) << '\n';
  finish(oracle, c, "rank", "rank=" + std::to_string(r.rank), ms);
  return 0;
}

int run_partition(const Common& c) {
  const LoadedInstance inst = load(c);
  MeteredOracle oracle = metered(inst, c);
  const auto start = std::chrono::steady_clock::now();
  const PartitionResult r = partition_size(oracle);
  const double ms = elapsed_ms(start);
  std::cout << "k=" << r.k << ' ' << ledger_text(r.ledger) << '\n';
  for (std::size_t i = 0; i < r.parts.size(); ++i) {
    std::cout << "part " << i << ": " << join(r.parts[i]) << '\n';
  }
  finish(oracle, c, "partition", "k=" + std::to_string(r.k), ms);
  return 0;
}

// verify

struct VerifyFlags {
  std::vector<std::string> checks{"axioms", "rank"};
  std::size_t max_n = 14;
};

struct CheckResult {
  bool ok;
  std::string detail;
};

CheckResult witness_counts(const HardInstance& h) {
  const std::size_t n = h.matroid->ground_size();
  std::uint64_t checked = 0;
  if (const auto* p = std::get_if<RankHardParams>(&h.params)) {
    const HardInstance sibling =
        make_rank_instance({p->m, p->eps_m, !p->truncated}, h.secret_set);
    const Matroid& plain = p->truncated ? *sibling.matroid : *h.matroid;
    const Matroid& cut = p->truncated ? *h.matroid : *sibling.matroid;
    for (SubsetMask w = 0; w < (SubsetMask{1} << n); ++w) {
      const ElementList q = mask_to_elements(w);
      const bool by_oracle = plain.is_independent(q) && !cut.is_independent(q);
      if (is_rank_witness(q, h.secret_set, p->m, p->eps_m) != by_oracle) {
        return {false, "witness predicate disagrees at W=" + format_set(q)};
      }
      const std::uint64_t count = count_rank_witness_sets(q, p->m, p->eps_m);
      if (count > 0 && count > rank_witness_count_bound(q.size(), p->m)) {
        return {false, "count " + std::to_string(count) + " above bound at W=" +
                           format_set(q)};
      }
      ++checked;
    }
  } else {
    const auto& pp = std::get<PartitionHardParams>(h.params);
    const HardInstance sibling = make_partition_instance(
        {pp.m, pp.alpha, !pp.truncated}, h.secret_partition);
    const Matroid& plain = pp.truncated ? *sibling.matroid : *h.matroid;
    const Matroid& cut = pp.truncated ? *h.matroid : *sibling.matroid;
    const std::uint64_t bound = partition_witness_count_bound(pp.m, pp.alpha);
    for (SubsetMask w = 0; w < (SubsetMask{1} << n); ++w) {
      const ElementList q = mask_to_elements(w);
      const bool by_oracle = plain.is_independent(q) && !cut.is_independent(q);
      if (is_partition_witness(q, h.secret_partition, pp.m, pp.alpha) != by_oracle) {
        return {false, "witness predicate disagrees at W=" + format_set(q)};
      }
      if (q.size() == pp.m + pp.slack()) {
        const std::uint64_t count = count_partition_witness_partitions(q, pp.m, pp.alpha);
        if (count > bound) {
          return {false, "count " + std::to_string(count) + " above bound " +
                             std::to_string(bound) + " at W=" + format_set(q)};
        }
      }
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " sets W checked"};
}

CheckResult run_check(const std::string& check, const LoadedInstance& inst,
                      const Common& c) {
  const Matroid& m = *inst.matroid;
  if (check == "axioms") {
    if (auto v = check_matroid_axioms(m)) return {false, v->describe()};
    return {true, "independence system with exchange"};
  }
  if (check == "rank") {
    MeteredOracle oracle = metered(inst, c);
    const std::size_t fast = rank(oracle);
    const std::size_t slow = bf_rank(m);
    return {fast == slow,
            "greedy " + std::to_string(fast) + ", brute force " + std::to_string(slow)};
  }
  if (check == "partition") {
    std::optional<std::size_t> slow;
    try {
      slow = bf_partition_size(m);
    } catch (const InfeasibleError&) {
    }
    MeteredOracle oracle = metered(inst, c);
    std::optional<std::size_t> fast;
    try {
      fast = partition_size(oracle).k;
    } catch (const InfeasibleError&) {
    }
    auto text = [](std::optional<std::size_t> k) {
      return k ? std::to_string(*k) : std::string("infeasible");
    };
    return {fast == slow, "partition_size " + text(fast) + ", brute force " + text(slow)};
  }
  if (check == "circumference") {
    const std::size_t circ = bf_circumference(m);
    Rng rng(c.seed);
    std::vector<double> w(m.ground_size());
    for (double& x : w) x = uniform_unit(rng);
    const TieBrokenWeights weights(w);
    MeteredOracle oracle = metered(inst, c);
    const BasisResult fast = max_weight_basis_bounded_circ(
        oracle, weights, {std::max<std::size_t>(1, circ), rng()});
    const ElementList slow = bf_max_weight_basis(m, weights);
    return {fast.basis == slow, "circumference " + std::to_string(circ) +
                                    ", bounded-circ basis " +
                                    (fast.basis == slow ? "matches" : "differs")};
  }
  if (check == "witness-counts") {
    if (!inst.hard) {
      throw ParameterError("witness-counts needs a rank_hard or partition_hard instance");
    }
    return witness_counts(*inst.hard);
  }
  throw ParameterError("unknown check '" + check + "'");
}

int run_verify(const Common& c, const VerifyFlags& v) {
  LoadedInstance inst;
  try {
    inst = load(c);
  } catch (const ParameterError& e) {
    std::cout << badge(false) << "  load: " << e.what() << '\n';
    return 1;
  }
  const std::size_t n = inst.matroid->ground_size();
  if (n > v.max_n) {
    throw SizeLimitError("instance has " + std::to_string(n) +
                         " elements, above --max-n " + std::to_string(v.max_n));
  }
  bool all_ok = true;
  for (const std::string& check : v.checks) {
    const CheckResult r = run_check(check, inst, c);
    all_ok = all_ok && r.ok;
    std::cout << badge(r.ok) << "  " << check << ": " << r.detail << '\n';
  }
  return all_ok ? 0 : 1;
}

// bench

int run_bench_cmd(const Common& c, BenchConfig config) {
  config.seed = c.seed;
  config.cost_model = c.cost_model;
  const BenchOutcome o = run_bench(config);
  std::string csv = csv_header() + "\n";
  for (const BenchRecord& r : o.records) csv += csv_row(r) + "\n";
  if (c.out.empty()) {
    std::cout << csv;
  } else {
    emit(c.out, csv);
  }
  for (const SizeSummary& s : o.summary) {
    std::fprintf(stderr, "n=%zu mean=%.6g median=%.6g stderr=%.6g\n", s.n, s.mean,
                 s.median, s.std_error);
  }
  if (o.fit) {
    std::fprintf(stderr, "slope=%.4f intercept=%.4f residual=%.4f\n", o.fit->slope,
                 o.fit->intercept, o.fit->residual);
  } else {
    std::fprintf(stderr, "slope unavailable: needs at least 3 distinct sizes\n");
  }
  return 0;
}

void add_common(CLI::App* app, Common& c, bool needs_instance) {
  if (needs_instance) {
    app->add_option("--instance", c.instance, "instance descriptor (JSON)")->required();
  }
  app->add_option("--seed", c.seed, "RNG seed");
  app->add_option("--cost-model", c.cost_model, "unit | linear | poly:p");
  app->add_option("--out", c.out, "output file");
  app->add_option("--trace", c.trace, "write size,verdict lines here");
}

}  // namespace
}  // namespace qcmatroid

int main(int argc, char** argv) {
  using namespace qcmatroid;
  CLI::App app{"qcm: matroid algorithms under a size-sensitive query cost"};
  app.require_subcommand(1);
  Common common;

  GenFlags gen;
  auto* gen_cmd = app.add_subcommand("gen", "write a random instance descriptor");
  add_common(gen_cmd, common, false);
  gen_cmd->add_option("--family", gen.family, "family name")->required();
  gen_cmd->add_option("--n", gen.n, "approximate ground size");
  gen_cmd->add_option("--m", gen.m, "hard-family size parameter");
  gen_cmd->add_option("--epsilon", gen.epsilon, "rank-hard epsilon");
  gen_cmd->add_option("--alpha", gen.alpha, "partition-hard alpha");
  gen_cmd->add_flag("--truncated{true},!--plain{false}", gen.truncated,
                    "emit the truncated sibling");
  gen_cmd->add_option("--vertices", gen.vertices, "graph vertex count");
  gen_cmd->add_option("--edges", gen.edges, "graph edge count");

  BasisFlags basis;
  auto* basis_cmd = app.add_subcommand("basis", "find a (max-weight) basis");
  add_common(basis_cmd, common, true);
  basis_cmd->add_option("--alg", basis.alg, "greedy | bounded-circ");
  basis_cmd->add_option("--c", basis.c, "circumference bound");
  basis_cmd->add_option("--weights", basis.weights, "file of weights");
  basis_cmd->add_option("--random-weights", basis.random_weights,
                        "seed for uniform weights in [0,1)");

  auto* rank_cmd = app.add_subcommand("rank", "rank by greedy");
  add_common(rank_cmd, common, true);

  auto* part_cmd = app.add_subcommand("partition", "partition size");
  add_common(part_cmd, common, true);

  VerifyFlags verify;
  auto* verify_cmd = app.add_subcommand("verify", "brute-force checks on small instances");
  add_common(verify_cmd, common, true);
  verify_cmd->add_option("--checks", verify.checks,
                         "axioms,rank,partition,circumference,witness-counts")
      ->delimiter(',');
  verify_cmd->add_option("--max-n", verify.max_n, "refuse larger instances");

  BenchConfig bench;
  auto* bench_cmd = app.add_subcommand("bench", "scaling benchmark, CSV output");
  add_common(bench_cmd, common, false);
  bench_cmd->add_option("--task", bench.task, "greedy-basis | bounded-circ-basis | partition-size")
      ->required();
  bench_cmd->add_option("--family", bench.family, "family name")->required();
  bench_cmd->add_option("--sizes", bench.sizes, "comma list of n")->delimiter(',')->required();
  bench_cmd->add_option("--trials", bench.trials, "trials per size");
  bench_cmd->add_option("--jobs", bench.jobs, "worker threads");
  bench_cmd->add_option("--c", bench.circumference, "circumference bound");
  bench_cmd->add_option("--epsilon", bench.family_params.epsilon, "rank-hard epsilon");
  bench_cmd->add_option("--alpha", bench.family_params.alpha, "partition-hard alpha");
  bench_cmd->add_flag("--truncated{true},!--plain{false}", bench.family_params.truncated,
                      "fix the hard-family sibling");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*gen_cmd) return run_gen(common, gen);
    if (*basis_cmd) return run_basis(common, basis);
    if (*rank_cmd) return run_rank(common);
    if (*part_cmd) return run_partition(common);
    if (*verify_cmd) return run_verify(common, verify);
    if (*bench_cmd) return run_bench_cmd(common, bench);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
