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

#ifndef QCMATROID_BENCH_H_
#define QCMATROID_BENCH_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qcmatroid/generators.h"
#include "qcmatroid/oracle.h"

namespace qcmatroid {

struct BenchRecord {
  std::string task;
  std::string family;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::string cost_model;
  std::string total_cost;  // verbatim ledger total
  std::uint64_t query_count = 0;
  std::size_t max_query_size = 0;
  std::uint64_t useful_query_count = 0;
  std::string answer;  // comma-free summary, e.g. "rank=12" or "k=3"
  double wall_ms = 0;
};

// task,family,n,seed,cost_model,total_cost,query_count,max_query_size,
// useful_query_count,answer,wall_ms
std::string csv_header();
std::string csv_row(const BenchRecord& record);

// Fills the ledger-derived fields of `record`.
void copy_ledger(const CostLedger& ledger, BenchRecord& record);

struct SlopeFit {
  std::vector<std::pair<double, double>> points;  // (n, mean cost)
  double slope = 0;
  double intercept = 0;
  double residual = 0;  // RMS of log-space residuals
};

// Least squares of log(cost) on log(n). Needs >= 3 points with distinct n;
// all values positive. Throws ParameterError otherwise.
SlopeFit fit_loglog_slope(std::span<const std::pair<double, double>> points);

struct BenchConfig {
  std::string task;  // greedy-basis | bounded-circ-basis | partition-size
  std::string family;
  std::vector<std::size_t> sizes;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  std::string cost_model = "linear";
  std::size_t circumference = 2;  // bounded-circ-basis only
  FamilyParams family_params;
  std::size_t jobs = 1;
};

struct SizeSummary {
  std::size_t n = 0;
  double mean = 0;
  double median = 0;
  double std_error = 0;
};

struct BenchOutcome {
  std::vector<BenchRecord> records;  // ordered by (size index, trial)
  std::vector<SizeSummary> summary;
  std::optional<SlopeFit> fit;  // absent with fewer than 3 sizes
};

// One record per (size, trial). Trial t at size index i uses the RNG stream
// derive_rng(seed, i * trials + t), so results do not depend on `jobs`.
BenchOutcome run_bench(const BenchConfig& config);

const std::vector<std::string>& bench_task_names();

}  // namespace qcmatroid

#endif  // QCMATROID_BENCH_H_
