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

#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace twinvest {

enum class FamilyKind { Affine, ExponentialDecay, Power, Constant };

std::string_view to_string(FamilyKind kind);
std::optional<FamilyKind> parse_family_kind(std::string_view name);

/// Number of coefficients a family kind takes.
std::size_t coefficient_count(FamilyKind kind);

/// A closed-form scalar function of one variable with analytic derivatives.
///
///   affine(a, b)             f(x) = a + b x
///   exponential-decay(a, k)  f(x) = a exp(-k x),   a > 0, k >= 0
///   power(a, b, g)           f(x) = a + b x^g,     g > 0, x >= 0
///   constant(a)              f(x) = a
///
/// Instances are immutable; construction validates the coefficient constraints
/// and throws std::invalid_argument on violation.
class ParametricFamily {
 public:
  ParametricFamily(FamilyKind kind, std::vector<double> coefficients);

  static ParametricFamily affine(double a, double b) { return {FamilyKind::Affine, {a, b}}; }
  static ParametricFamily exponential_decay(double a, double kappa) {
    return {FamilyKind::ExponentialDecay, {a, kappa}};
  }
  static ParametricFamily power(double a, double b, double gamma) {
    return {FamilyKind::Power, {a, b, gamma}};
  }
  static ParametricFamily constant(double a) { return {FamilyKind::Constant, {a}}; }

  FamilyKind kind() const noexcept { return kind_; }
  std::span<const double> coefficients() const noexcept { return coefficients_; }

  /// Copy with coefficient `index` replaced; re-validates.
  ParametricFamily with_coefficient(std::size_t index, double value) const;

  double value(double x) const;
  double derivative(double x) const;
  double second_derivative(double x) const;

  friend bool operator==(const ParametricFamily&, const ParametricFamily&) = default;

 private:
  FamilyKind kind_;
  std::vector<double> coefficients_;
};

}  // namespace twinvest
