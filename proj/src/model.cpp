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

#include "twinvest/model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "twinvest/errors.hpp"

namespace twinvest {

EvaluatedPoint evaluate(const ModelPrimitives& model, double v) {
  const double slack = 1e-12 * std::max(1.0, model.v_max);
  if (!(v >= -slack && v <= model.v_max + slack)) {
    std::ostringstream msg;
    msg << "investment " << v << " outside [0, " << model.v_max << "]";
    throw DomainError(msg.str());
  }
  v = std::clamp(v, 0.0, model.v_max);
  return EvaluatedPoint{v,
                        model.pi0.value(v),
                        model.pi1.value(v),
                        model.cost.value(v),
                        model.pi0.derivative(v),
                        model.pi1.derivative(v),
                        model.cost.derivative(v)};
}

namespace {

ValidationReport failure(std::string condition, std::string detail, std::optional<double> v = {}) {
  ValidationReport r;
  r.ok = false;
  r.condition = std::move(condition);
  r.detail = std::move(detail);
  r.v = v;
  return r;
}

std::string describe(const char* what, double lhs, const char* op, double rhs) {
  std::ostringstream s;
  s.precision(12);
  s << what << ": " << lhs << ' ' << op << ' ' << rhs;
  return s.str();
}

}  // namespace

ValidationReport validate(const ModelPrimitives& model, std::size_t grid_points) {
  if (!(model.v_max > 0.0) || !std::isfinite(model.v_max)) {
    return failure("v_max_positive", describe("v_max must be positive", model.v_max, ">", 0.0));
  }
  if (!std::isfinite(model.s_high) || !std::isfinite(model.s_low) || !(model.s_high > model.s_low)) {
    return failure("quality_ordering", describe("s_high must exceed s_low", model.s_high, ">", model.s_low));
  }
  if (grid_points < 2) grid_points = 2;

  ValidationReport report;
  std::size_t flat_pi1 = 0;
  for (std::size_t i = 0; i < grid_points; ++i) {
    const double v = grid_point(0.0, model.v_max, grid_points, i);
    const auto p = evaluate(model, v);
    if (!std::isfinite(p.pi0) || !std::isfinite(p.pi1) || !std::isfinite(p.cost)) {
      return failure("finite_values", "primitive not finite", v);
    }
    if (!std::isfinite(p.dpi0) || !std::isfinite(p.dpi1) || !std::isfinite(p.dcost)) {
      return failure("finite_derivatives", "derivative not finite", v);
    }
    if (!(p.pi0 > 0.0)) return failure("probability_bounds", describe("pi0 must be positive", p.pi0, ">", 0.0), v);
    if (!(p.pi1 > p.pi0)) return failure("strict_ordering", describe("pi1 must exceed pi0", p.pi1, ">", p.pi0), v);
    if (!(p.pi1 < 1.0)) return failure("probability_bounds", describe("pi1 must be below one", p.pi1, "<", 1.0), v);
    if (p.dpi0 < 0.0) return failure("pi0_nondecreasing", describe("pi0'", p.dpi0, ">=", 0.0), v);
    if (p.dpi1 < 0.0) return failure("pi1_nondecreasing", describe("pi1'", p.dpi1, ">=", 0.0), v);
    if (p.dcost > 0.0) return failure("cost_nonincreasing", describe("c'", p.dcost, "<=", 0.0), v);
    if (!(p.cost > 0.0)) return failure("cost_positive", describe("c", p.cost, ">", 0.0), v);
    if (p.dpi1 == 0.0) ++flat_pi1;
  }

  // Gains from contracting must exist before any twin: the principal wants to induce effort at v = 0.
  const auto p = evaluate(model, 0.0);
  const double gain = p.delta_pi() * model.quality_importance();
  const double rent = p.pi1 * p.cost / p.delta_pi();
  if (gain < rent) {
    return failure("baseline_inducement",
                   describe("baseline effort inducement at v=0 fails", gain, "<", rent), 0.0);
  }

  if (flat_pi1 > 0) {
    report.notes.push_back("pi1' = 0 at " + std::to_string(flat_pi1) + " of " + std::to_string(grid_points) +
                           " grid points; social optimum at v_max is weak there");
  }
  return report;
}

}  // namespace twinvest
