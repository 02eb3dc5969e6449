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

#include "qcmatroid/bench.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "qcmatroid/algorithms.h"
#include "qcmatroid/combinators.h"
#include "qcmatroid/cost_model.h"
#include "qcmatroid/random.h"

namespace qcmatroid {

std::string csv_header() {
  return "task,family,n,seed,cost_model,total_cost,query_count,max_query_size,"
         "useful_query_count,answer,wall_ms";
}

std::string csv_row(const BenchRecord& r) {
  std::ostringstream out;
  out << r.task << ',' << r.family << ',' << r.n << ',' << r.seed << ','
      << r.cost_model << ',' << r.total_cost << ',' << r.query_count << ','
      << r.max_query_size << ',' << r.useful_query_count << ',' << r.answer
      << ',';
  out.setf(std::ios::fixed);
  out.precision(3);
  out << r.wall_ms;
  return out.str();
}

void copy_ledger(const CostLedger& ledger, BenchRecord& record) {
  record.total_cost = ledger.total_cost_string();
  record.query_count = ledger.query_count;
  record.max_query_size = ledger.max_query_size;
  record.useful_query_count = ledger.useful_query_count;
}

SlopeFit fit_loglog_slope(std::span<const std::pair<double, double>> points) {
  std::set<double> distinct;
  for (const auto& [n, cost] : points) {
    if (!(n > 0) || !(cost > 0)) {
      throw ParameterError("slope fit needs positive n and cost");
    }
    distinct.insert(n);
  }
  if (distinct.size() < 3) {
    throw ParameterError("slope fit needs at least 3 distinct sizes");
  }
  SlopeFit fit;
  fit.points.assign(points.begin(), points.end());
  const double k = static_cast<double>(points.size());
  double sx = 0, sy = 0;
  for (const auto& [n, cost] : points) {
    sx += std::log(n);
    sy += std::log(cost);
  }
  const double mx = sx / k, my = sy / k;
  double sxx = 0, sxy = 0;
  for (const auto& [n, cost] : points) {
    const double dx = std::log(n) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(cost) - my);
  }
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss = 0;
  for (const auto& [n, cost] : points) {
    const double e = std::log(cost) - (fit.intercept + fit.slope * std::log(n));
    ss += e * e;
  }
  fit.residual = std::sqrt(ss / k);
  return fit;
}

const std::vector<std::string>& bench_task_names() {
  static const std::vector<std::string> kNames = {
      "greedy-basis", "bounded-circ-basis", "partition-size"};
  return kNames;
}

namespace {

BenchRecord run_trial(const BenchConfig& config, const CostModel& model,
                      std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  GeneratedInstance inst =
      generate_family(config.family, n, config.family_params, rng);
  MeteredOracle oracle(inst.matroid, model);
  oracle.set_useful_threshold(inst.useful_threshold);

  BenchRecord record;
  record.task = config.task;
  record.family = config.family;
  record.n = inst.matroid->ground_size();
  record.seed = seed;
  record.cost_model = model.to_string();

  const auto start = std::chrono::steady_clock::now();
  CostLedger ledger;
  if (config.task == "greedy-basis") {
    const BasisResult res = greedy_basis(oracle);
    record.answer = "rank=" + std::to_string(res.rank);
    ledger = res.ledger;
  } else if (config.task == "bounded-circ-basis") {
    std::vector<double> w(record.n);
    for (double& x : w) x = uniform_unit(rng);
    const BasisResult res = max_weight_basis_bounded_circ(
        oracle, TieBrokenWeights(std::move(w)),
        {config.circumference, rng()});
    record.answer = "rank=" + std::to_string(res.rank);
    ledger = res.ledger;
  } else if (config.task == "partition-size") {
    const PartitionResult res = partition_size(oracle);
    record.answer = "k=" + std::to_string(res.k);
    ledger = res.ledger;
  } else {
    throw ParameterError("unknown task '" + config.task + "'");
  }
  record.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  copy_ledger(ledger, record);
  return record;
}

double total_as_double(const BenchRecord& r) { return std::stod(r.total_cost); }

}  // namespace

BenchOutcome run_bench(const BenchConfig& config) {
  const auto& tasks = bench_task_names();
  if (std::find(tasks.begin(), tasks.end(), config.task) == tasks.end()) {
    throw ParameterError("unknown task '" + config.task + "'");
  }
  if (config.sizes.empty()) throw ParameterError("need at least one size");
  if (config.trials < 1) throw ParameterError("trials must be >= 1");
  const CostModel model = make_cost_model(config.cost_model);

  const std::size_t total = config.sizes.size() * config.trials;
  BenchOutcome outcome;
  outcome.records.resize(total);
  std::vector<std::exception_ptr> errors(total);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t job = next++; job < total; job = next++) {
      const std::size_t n = config.sizes[job / config.trials];
      try {
        outcome.records[job] =
            run_trial(config, model, n, trial_seed(config.seed, job));
      } catch (...) {
        errors[job] = std::current_exception();
      }
    }
  };
  const std::size_t jobs = std::clamp<std::size_t>(config.jobs, 1, total);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::vector<std::pair<double, double>> means;
  for (std::size_t i = 0; i < config.sizes.size(); ++i) {
    std::vector<double> costs;
    for (std::size_t t = 0; t < config.trials; ++t) {
      costs.push_back(total_as_double(outcome.records[i * config.trials + t]));
    }
    SizeSummary s;
    s.n = outcome.records[i * config.trials].n;
    const double k = static_cast<double>(costs.size());
    s.mean = std::accumulate(costs.begin(), costs.end(), 0.0) / k;
    double var = 0;
    for (double c : costs) var += (c - s.mean) * (c - s.mean);
    s.std_error = costs.size() > 1 ? std::sqrt(var / (k - 1) / k) : 0.0;
    std::sort(costs.begin(), costs.end());
    const std::size_t h = costs.size() / 2;
    s.median = costs.size() % 2 ? costs[h] : (costs[h - 1] + costs[h]) / 2;
    outcome.summary.push_back(s);
    means.emplace_back(static_cast<double>(s.n), s.mean);
  }
  std::set<double> distinct;
  for (const auto& p : means) distinct.insert(p.first);
  if (distinct.size() >= 3) {
    try {
      outcome.fit = fit_loglog_slope(means);
    } catch (const ParameterError&) {
      // zero-cost points: no fit
    }
  }
  return outcome;
}

}  // namespace qcmatroid
