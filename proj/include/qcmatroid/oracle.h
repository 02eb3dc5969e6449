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

#ifndef QCMATROID_ORACLE_H_
#define QCMATROID_ORACLE_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qcmatroid/cost_model.h"
#include "qcmatroid/types.h"

namespace qcmatroid {

// An immutable matroid on ground set {0, ..., ground_size() - 1}.
//
// is_independent() receives a strictly increasing list of in-range ids; the
// metering layer validates this before calling. Implementations do work
// linear or near-linear in |q| and allocate only per-call scratch, so one
// instance may be queried from several threads.
class Matroid {
 public:
  virtual ~Matroid() = default;

  virtual std::size_t ground_size() const = 0;
  virtual bool is_independent(std::span<const ElementId> q) const = 0;

  // rank(q) for families that can compute it in near-linear time; nullopt
  // otherwise. Used by the l-relaxation.
  virtual std::optional<std::size_t> subset_rank(
      std::span<const ElementId> q) const {
    (void)q;
    return std::nullopt;
  }
  virtual bool has_subset_rank() const { return false; }

  // Short family tag ("graphic", "truncate", ...).
  virtual std::string family() const = 0;
};

using MatroidPtr = std::shared_ptr<const Matroid>;

// Anything an algorithm can ask "is Q independent?". Queries must be strictly
// increasing lists of in-range ids.
class IndependenceOracle {
 public:
  virtual ~IndependenceOracle() = default;
  virtual std::size_t ground_size() const = 0;
  virtual bool query(std::span<const ElementId> q) = 0;
};

struct CostLedger {
  // Exact sum of f(|Q_i|); meaningful when the cost model is exact.
  ExactCost exact_total = 0;
  // Same sum in long double (always maintained).
  long double approx_total = 0;
  bool exact = true;
  std::uint64_t query_count = 0;
  std::size_t max_query_size = 0;
  // Queries with |Q| strictly above the oracle's useful-size threshold.
  std::uint64_t useful_query_count = 0;

  long double total_cost() const {
    return exact ? static_cast<long double>(exact_total) : approx_total;
  }
  // Decimal rendering of the total; exact digits for exact models.
  std::string total_cost_string() const;

  friend bool operator==(const CostLedger&, const CostLedger&) = default;
};

struct TraceEntry {
  std::size_t size;
  bool independent;
};

// Writes one "size,verdict" line per query; verdict is "independent" or
// "dependent".
void write_trace(std::ostream& out, std::span<const TraceEntry> trace);

// Charges every answered query f(|Q|) to its ledger. Malformed queries
// (out-of-range ids, unsorted or duplicate lists) throw std::domain_error and
// leave the ledger untouched. Repeated identical queries are charged again.
class MeteredOracle final : public IndependenceOracle {
 public:
  MeteredOracle(MatroidPtr matroid, CostModel model);

  std::size_t ground_size() const override { return matroid_->ground_size(); }
  bool query(std::span<const ElementId> q) override;

  const CostLedger& ledger() const { return ledger_; }
  CostLedger ledger_snapshot() const { return ledger_; }
  const CostModel& cost_model() const { return model_; }
  const Matroid& matroid() const { return *matroid_; }
  const MatroidPtr& matroid_ptr() const { return matroid_; }

  void set_useful_threshold(std::size_t threshold) {
    useful_threshold_ = threshold;
  }
  std::size_t useful_threshold() const { return useful_threshold_; }

  void enable_trace(bool on) { tracing_ = on; }
  const std::vector<TraceEntry>& trace() const { return trace_; }

 private:
  MatroidPtr matroid_;
  CostModel model_;
  CostLedger ledger_;
  std::size_t useful_threshold_ = 0;
  bool tracing_ = false;
  std::vector<TraceEntry> trace_;
};

// Truncation applied at the oracle level: queries larger than `cap` are
// answered "dependent" without reaching the wrapped oracle. Tracks the
// largest query forwarded.
class CappedOracle final : public IndependenceOracle {
 public:
  CappedOracle(IndependenceOracle& inner, std::size_t cap)
      : inner_(inner), cap_(cap) {}

  std::size_t ground_size() const override { return inner_.ground_size(); }
  bool query(std::span<const ElementId> q) override;

  std::size_t cap() const { return cap_; }
  std::size_t max_forwarded_size() const { return max_forwarded_; }
  std::uint64_t forwarded_count() const { return forwarded_; }

 private:
  IndependenceOracle& inner_;
  std::size_t cap_;
  std::size_t max_forwarded_ = 0;
  std::uint64_t forwarded_ = 0;
};

}  // namespace qcmatroid

#endif  // QCMATROID_ORACLE_H_
