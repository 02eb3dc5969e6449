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

#ifndef QCMATROID_COST_MODEL_H_
#define QCMATROID_COST_MODEL_H_

#include <cstddef>
#include <string>
#include <string_view>

namespace qcmatroid {

using ExactCost = unsigned __int128;

// Per-query charge f(|Q|). Three kinds:
//   unit     f(k) = 1 for every k (including k = 0)
//   linear   f(k) = k
//   poly:p   f(k) = k^p for k >= 1, f(0) = 0
// Unit, linear and integral powers are charged exactly in 128-bit integers;
// fractional powers accumulate in long double.
class CostModel {
 public:
  enum class Kind { kUnit, kLinear, kPower };

  static CostModel unit();
  static CostModel linear();
  // `exponent` must be >= 0. Integral exponents take the exact path.
  static CostModel power(double exponent);

  Kind kind() const { return kind_; }
  double exponent() const { return exponent_; }
  bool is_exact() const { return kind_ != Kind::kPower || integral_power_; }

  // Exact charge; only valid when is_exact(). Throws std::overflow_error if
  // k^p does not fit in 128 bits.
  ExactCost exact(std::size_t k) const;
  long double evaluate(std::size_t k) const;

  // Canonical textual form, e.g. "unit", "linear", "poly:2", "poly:0.5".
  std::string to_string() const;

  friend bool operator==(const CostModel&, const CostModel&) = default;

 private:
  CostModel(Kind kind, double exponent, bool integral)
      : kind_(kind), exponent_(exponent), integral_power_(integral) {}

  Kind kind_;
  double exponent_;
  bool integral_power_;
};

// Parses "unit", "linear" or "poly:p" where p is a nonnegative decimal or a
// fraction "a/b". Throws ParameterError on anything else.
CostModel make_cost_model(std::string_view spec);

std::string to_string(ExactCost value);

}  // namespace qcmatroid

#endif  // QCMATROID_COST_MODEL_H_
