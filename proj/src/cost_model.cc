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

#include "qcmatroid/cost_model.h"

#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

#include "qcmatroid/types.h"

namespace qcmatroid {

namespace {

double parse_number(std::string_view text, std::string_view whole_spec) {
  double value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last || !std::isfinite(value)) {
    throw ParameterError("malformed cost model '" + std::string(whole_spec) +
                         "'");
  }
  return value;
}

}  // namespace

CostModel CostModel::unit() { return CostModel(Kind::kUnit, 0, true); }

CostModel CostModel::linear() { return CostModel(Kind::kLinear, 1, true); }

CostModel CostModel::power(double exponent) {
  if (!(exponent >= 0) || !std::isfinite(exponent)) {
    throw ParameterError("cost exponent must be a finite number >= 0");
  }
  const bool integral = std::floor(exponent) == exponent && exponent <= 127;
  return CostModel(Kind::kPower, exponent, integral);
}

ExactCost CostModel::exact(std::size_t k) const {
  switch (kind_) {
    case Kind::kUnit:
      return 1;
    case Kind::kLinear:
      return k;
    case Kind::kPower:
      break;
  }
  if (!integral_power_) {
    throw std::logic_error("exact() on a fractional power cost model");
  }
  if (k == 0) return 0;
  ExactCost result = 1;
  for (int i = 0; i < static_cast<int>(exponent_); ++i) {
    if (__builtin_mul_overflow(result, static_cast<ExactCost>(k), &result)) {
      throw std::overflow_error("query cost overflows 128 bits");
    }
  }
  return result;
}

long double CostModel::evaluate(std::size_t k) const {
  if (is_exact()) return static_cast<long double>(exact(k));
  if (k == 0) return 0;
  return std::pow(static_cast<long double>(k),
                  static_cast<long double>(exponent_));
}

std::string CostModel::to_string() const {
  switch (kind_) {
    case Kind::kUnit:
      return "unit";
    case Kind::kLinear:
      return "linear";
    case Kind::kPower:
      break;
  }
  std::ostringstream out;
  out << "poly:" << exponent_;
  return out.str();
}

CostModel make_cost_model(std::string_view spec) {
  if (spec == "unit") return CostModel::unit();
  if (spec == "linear") return CostModel::linear();
  constexpr std::string_view kPrefix = "poly:";
  if (spec.substr(0, kPrefix.size()) != kPrefix) {
    throw ParameterError("unknown cost model '" + std::string(spec) +
                         "' (expected unit, linear or poly:p)");
  }
  const std::string_view body = spec.substr(kPrefix.size());
  double exponent = 0;
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    const double num = parse_number(body.substr(0, slash), spec);
    const double den = parse_number(body.substr(slash + 1), spec);
    if (den <= 0) throw ParameterError("cost exponent denominator must be > 0");
    exponent = num / den;
  } else {
    exponent = parse_number(body, spec);
  }
  if (exponent < 0) {
    throw ParameterError("cost exponent must be >= 0 in '" +
                         std::string(spec) + "'");
  }
  return CostModel::power(exponent);
}

std::string to_string(ExactCost value) {
  if (value == 0) return "0";
  std::string digits;
  while (value > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  return std::string(digits.rbegin(), digits.rend());
}

}  // namespace qcmatroid
