// Copyright 2026 The twinvest Authors. All Rights Reserved.
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
// ==============================================================================

#include "twinvest/family.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace twinvest {

std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Affine: return "affine";
    case FamilyKind::ExponentialDecay: return "exponential-decay";
    case FamilyKind::Power: return "power";
    case FamilyKind::Constant: return "constant";
  }
  return "unknown";
}

std::optional<FamilyKind> parse_family_kind(std::string_view name) {
  if (name == "affine") return FamilyKind::Affine;
  if (name == "exponential-decay") return FamilyKind::ExponentialDecay;
  if (name == "power") return FamilyKind::Power;
  if (name == "constant") return FamilyKind::Constant;
  return std::nullopt;
}

std::size_t coefficient_count(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Affine: return 2;
    case FamilyKind::ExponentialDecay: return 2;
    case FamilyKind::Power: return 3;
    case FamilyKind::Constant: return 1;
  }
  return 0;
}

ParametricFamily::ParametricFamily(FamilyKind kind, std::vector<double> coefficients)
    : kind_(kind), coefficients_(std::move(coefficients)) {
  const auto expected = coefficient_count(kind_);
  if (coefficients_.size() != expected) {
    throw std::invalid_argument(std::string(to_string(kind_)) + " takes " + std::to_string(expected) +
                                " coefficients, got " + std::to_string(coefficients_.size()));
  }
  for (double c : coefficients_) {
    if (!std::isfinite(c)) throw std::invalid_argument("coefficients must be finite");
  }
  if (kind_ == FamilyKind::ExponentialDecay) {
    if (!(coefficients_[0] > 0.0)) throw std::invalid_argument("exponential-decay requires a > 0");
    if (!(coefficients_[1] >= 0.0)) throw std::invalid_argument("exponential-decay requires kappa >= 0");
  }
  if (kind_ == FamilyKind::Power && !(coefficients_[2] > 0.0)) {
    throw std::invalid_argument("power requires gamma > 0");
  }
}

ParametricFamily ParametricFamily::with_coefficient(std::size_t index, double value) const {
  if (index >= coefficients_.size()) {
    throw std::out_of_range("coefficient index " + std::to_string(index) + " out of range for " +
                            std::string(to_string(kind_)));
  }
  auto next = coefficients_;
  next[index] = value;
  return {kind_, std::move(next)};
}

double ParametricFamily::value(double x) const {
  const auto& k = coefficients_;
  switch (kind_) {
    case FamilyKind::Affine: return k[0] + k[1] * x;
    case FamilyKind::ExponentialDecay: return k[0] * std::exp(-k[1] * x);
    case FamilyKind::Power: return k[0] + k[1] * std::pow(x, k[2]);
    case FamilyKind::Constant: return k[0];
  }
  return std::numeric_limits<double>::quiet_NaN();
}

double ParametricFamily::derivative(double x) const {
  const auto& k = coefficients_;
  switch (kind_) {
    case FamilyKind::Affine: return k[1];
    case FamilyKind::ExponentialDecay: return -k[1] * k[0] * std::exp(-k[1] * x);
    case FamilyKind::Power: {
      if (k[1] == 0.0) return 0.0;
      const double g = k[2];
      if (g == 1.0) return k[1];
      // x^(g-1) at x = 0 is 0 for g > 1 and unbounded for g < 1.
      return k[1] * g * std::pow(x, g - 1.0);
    }
    case FamilyKind::Constant: return 0.0;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

double ParametricFamily::second_derivative(double x) const {
  const auto& k = coefficients_;
  switch (kind_) {
    case FamilyKind::Affine: return 0.0;
    case FamilyKind::ExponentialDecay: return k[1] * k[1] * k[0] * std::exp(-k[1] * x);
    case FamilyKind::Power: {
      const double g = k[2];
      if (k[1] == 0.0 || g == 1.0) return 0.0;
      if (g == 2.0) return 2.0 * k[1];
      return k[1] * g * (g - 1.0) * std::pow(x, g - 2.0);
    }
    case FamilyKind::Constant: return 0.0;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

}  // namespace twinvest
