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
#include <string>
#include <vector>

#include "twinvest/family.hpp"
#include "twinvest/grid.hpp"

namespace twinvest {

/// One task/technology instance: outcome probabilities without and with human
/// effort, the effort cost, the investment bound and the principal's payoffs.
struct ModelPrimitives {
  ParametricFamily pi0;   ///< P(better outcome | AI only / low effort) as a function of v
  ParametricFamily pi1;   ///< P(better outcome | human + AI / high effort)
  ParametricFamily cost;  ///< agent's cost of high effort c(v)
  double v_max = 1.0;
  double s_high = 1.0;
  double s_low = 0.0;

  double quality_importance() const { return s_high - s_low; }

  friend bool operator==(const ModelPrimitives&, const ModelPrimitives&) = default;
};

struct EvaluatedPoint {
  double v;
  double pi0, pi1, cost;
  double dpi0, dpi1, dcost;

  double delta_pi() const { return pi1 - pi0; }
  double d_delta_pi() const { return dpi1 - dpi0; }
  /// Outcome separability pi1 / pi0.
  double separability() const { return pi1 / pi0; }
  double d_separability() const { return (dpi1 * pi0 - pi1 * dpi0) / (pi0 * pi0); }
};

/// Evaluates every primitive and its derivative at v. Throws DomainError unless 0 <= v <= v_max
/// (a relative slack of 1e-12 is clamped, so grid end points are always accepted).
EvaluatedPoint evaluate(const ModelPrimitives& model, double v);

struct ValidationReport {
  bool ok = true;
  std::string condition;  ///< identifier of the first violated condition, empty when ok
  std::string detail;
  std::optional<double> v;  ///< where the violation was observed, if pointwise
  std::vector<std::string> notes;  ///< non-fatal observations (e.g. flat pi1 regions)

  explicit operator bool() const { return ok; }
};

/// Checks the model invariants on a uniform grid over [0, v_max] and the
/// baseline inducement condition at v = 0. Never throws; the first violation wins.
ValidationReport validate(const ModelPrimitives& model, std::size_t grid_points = kDefaultGridPoints);

}  // namespace twinvest
