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

#include "twinvest/continuous.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "twinvest/errors.hpp"
#include "twinvest/optimize.hpp"

namespace twinvest {

namespace {

ValidationReport failure(std::string condition, std::string detail, std::optional<double> e = {}) {
  ValidationReport r;
  r.ok = false;
  r.condition = std::move(condition);
  r.detail = std::move(detail);
  r.v = e;
  return r;
}

void require_effort(const ContinuousEffortModel& model, double e) {
  const double slack = 1e-12 * std::max(1.0, model.e_max);
  if (!(e >= model.e_min - slack && e <= model.e_max + slack)) {
    std::ostringstream msg;
    msg << "effort " << e << " outside [" << model.e_min << ", " << model.e_max << "]";
    throw DomainError(msg.str());
  }
}

}  // namespace

ValidationReport validate(const ContinuousEffortModel& model, std::size_t grid_points) {
  if (!(model.c0 > 0.0)) return failure("cost_slope_positive", "c0 must be positive");
  if (!(model.e_min > 0.0 && model.e_min < model.e_max)) {
    return failure("effort_bounds", "effort bounds must satisfy 0 < e_min < e_max");
  }
  if (!(model.s_high > model.s_low)) return failure("quality_ordering", "s_high must exceed s_low");
  if (grid_points < 2) grid_points = 2;
  for (std::size_t i = 0; i < grid_points; ++i) {
    const double e = grid_point(model.e_min, model.e_max, grid_points, i);
    const double p = model.p.value(e);
    if (!(p > 0.0 && p <= 1.0)) return failure("probability_bounds", "p(e) must lie in (0, 1]", e);
    if (!(model.p.derivative(e) > 0.0)) return failure("p_increasing", "p'(e) must be positive", e);
    if (model.p.second_derivative(e) > 0.0) return failure("p_concave", "p''(e) must be non-positive", e);
  }
  return {};
}

Contract contract_for_effort(const ContinuousEffortModel& model, double e) {
  require_effort(model, e);
  const double slope = model.p.derivative(e);
  if (!(slope > 0.0)) {
    std::ostringstream msg;
    msg << "p'(" << e << ") = " << slope << " is not positive";
    throw DomainError(msg.str());
  }
  const double spread = model.c0 / slope;
  const double t_low = std::max(0.0, model.effort_cost(e) - model.p.value(e) * spread);
  return {t_low + spread, t_low};
}

WageBranch wage_branch(const ContinuousEffortModel& model, double e) {
  return contract_for_effort(model, e).t_low > 0.0 ? WageBranch::Participation : WageBranch::LimitedLiability;
}

double foc_residual(const ContinuousEffortModel& model, double e, const Contract& contract) {
  return model.p.derivative(e) * (contract.t_high - contract.t_low) - model.c0;
}

double agent_utility(const ContinuousEffortModel& model, double e, const Contract& contract) {
  const double p = model.p.value(e);
  return p * contract.t_high + (1.0 - p) * contract.t_low - model.effort_cost(e);
}

double principal_utility(const ContinuousEffortModel& model, double e, const Contract& contract) {
  const double p = model.p.value(e);
  return p * (model.s_high - contract.t_high) + (1.0 - p) * (model.s_low - contract.t_low);
}

EffortOptimum principal_optimal_effort(const ContinuousEffortModel& model, std::size_t grid_points) {
  const auto objective = [&](double e) { return principal_utility(model, e, contract_for_effort(model, e)); };
  const auto best = grid_refine_max(objective, model.e_min, model.e_max, grid_points);
  const auto contract = contract_for_effort(model, best.x);
  return {best.x, contract, best.value, contract.t_low > 0.0 ? WageBranch::Participation : WageBranch::LimitedLiability};
}

TwoEffortComparison compare_with_two_effort(const ContinuousEffortModel& model, double e_low, double e_high) {
  require_effort(model, e_low);
  require_effort(model, e_high);
  const double pi0 = model.p.value(e_low);
  const double pi1 = model.p.value(e_high);
  const double two = (model.effort_cost(e_high) - model.effort_cost(e_low)) / (pi1 - pi0);
  const double cont = model.c0 / model.p.derivative(e_high);
  return {two, cont, two / cont};
}

}  // namespace twinvest
