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

#include "qcmatroid/oracle.h"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace qcmatroid {

std::string CostLedger::total_cost_string() const {
  if (exact) return to_string(exact_total);
  std::ostringstream out;
  out << std::setprecision(17) << static_cast<double>(approx_total);
  return out.str();
}

void write_trace(std::ostream& out, std::span<const TraceEntry> trace) {
  for (const TraceEntry& entry : trace) {
    out << entry.size << ',' << (entry.independent ? "independent" : "dependent")
        << '\n';
  }
}

MeteredOracle::MeteredOracle(MatroidPtr matroid, CostModel model)
    : matroid_(std::move(matroid)), model_(model) {
  if (!matroid_) throw std::invalid_argument("MeteredOracle needs a matroid");
  ledger_.exact = model_.is_exact();
}

bool MeteredOracle::query(std::span<const ElementId> q) {
  const std::size_t n = matroid_->ground_size();
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i] >= n) {
      throw std::domain_error("element " + std::to_string(q[i]) +
                              " outside ground set of size " +
                              std::to_string(n));
    }
    if (i > 0 && q[i - 1] >= q[i]) {
      throw std::domain_error("query must be strictly increasing");
    }
  }
  // Price before answering so an overflow leaves the ledger untouched.
  const std::size_t k = q.size();
  ExactCost charge = 0;
  if (ledger_.exact) {
    charge = model_.exact(k);
    if (__builtin_add_overflow(ledger_.exact_total, charge, &charge)) {
      throw std::overflow_error("ledger total overflows 128 bits");
    }
  }
  const bool verdict = matroid_->is_independent(q);

  if (ledger_.exact) ledger_.exact_total = charge;
  ledger_.approx_total += model_.evaluate(k);
  ++ledger_.query_count;
  ledger_.max_query_size = std::max(ledger_.max_query_size, k);
  if (k > useful_threshold_) ++ledger_.useful_query_count;
  if (tracing_) trace_.push_back({k, verdict});
  return verdict;
}

bool CappedOracle::query(std::span<const ElementId> q) {
  if (q.size() > cap_) return false;
  max_forwarded_ = std::max(max_forwarded_, q.size());
  ++forwarded_;
  return inner_.query(q);
}

}  // namespace qcmatroid
