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

#include "twinvest/contract.hpp"
#include "twinvest/family.hpp"
#include "twinvest/model.hpp"

namespace twinvest {

/// Continuous effort e in [e_min, e_max], success probability p(e), linear cost c0 e.
struct ContinuousEffortModel {
  ParametricFamily p;
  double c0 = 1.0;
  double e_min = 0.0;
  double e_max = 1.0;
  double s_high = 1.0;
  double s_low = 0.0;

  double effort_cost(double e) const { return c0 * e; }

  friend bool operator==(const ContinuousEffortModel&, const ContinuousEffortModel&) = default;
};

/// p increasing and concave with 0 < p <= 1 on the effort interval, c0 > 0,
/// 0 < e_min < e_max and s_high > s_low.
ValidationReport validate(const ContinuousEffortModel& model, std::size_t grid_points = kDefaultGridPoints);

enum class WageBranch {
  LimitedLiability,  ///< t_low = 0, t_high = c0 / p'(e)
  Participation,     ///< t_low > 0 set by the participation constraint
};

/// Cheapest contract that makes e the agent's first-order optimum while
/// respecting participation and limited liability. Throws DomainError for e
/// outside the interval or p'(e) <= 0.
Contract contract_for_effort(const ContinuousEffortModel& model, double e);
WageBranch wage_branch(const ContinuousEffortModel& model, double e);

/// p'(e)(t_high - t_low) - c0.
double foc_residual(const ContinuousEffortModel& model, double e, const Contract& contract);

double agent_utility(const ContinuousEffortModel& model, double e, const Contract& contract);
double principal_utility(const ContinuousEffortModel& model, double e, const Contract& contract);

struct EffortOptimum {
  double e_opt;
  Contract contract;
  double principal_surplus;
  WageBranch branch;
};

/// Principal's best induced effort over [e_min, e_max] (grid scan then golden-section refinement).
EffortOptimum principal_optimal_effort(const ContinuousEffortModel& model,
                                       std::size_t grid_points = kDefaultGridPoints);

/// Side-by-side of the two-effort wage c / (pi1 - pi0), with pi taken as p at
/// the two effort levels and c as the cost difference, against c0 / p'(e_high).
struct TwoEffortComparison {
  double two_effort_t_high;
  double continuous_t_high;
  double ratio;  ///< two_effort / continuous
};
TwoEffortComparison compare_with_two_effort(const ContinuousEffortModel& model, double e_low, double e_high);

}  // namespace twinvest
