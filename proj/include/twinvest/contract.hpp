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

#include "twinvest/model.hpp"

namespace twinvest {

/// Absolute tolerance on payoff-unit comparisons. Ties resolve toward
/// employing the human / inducing effort.
inline constexpr double kPayoffTolerance = 1e-12;

/// Outcome-contingent payments: t_high on the better outcome, t_low on the worse one.
struct Contract {
  double t_high = 0.0;
  double t_low = 0.0;

  friend bool operator==(const Contract&, const Contract&) = default;
};

struct SurplusBreakdown {
  double agent_surplus;         ///< information rent U(v)
  double principal_surplus;
  double total_surplus;
  double outcome_separability;  ///< Q(v) = pi1 / pi0
  double delta_pi;              ///< pi1 - pi0
  double quality_importance;    ///< s_high - s_low
};

/// Cheapest contract inducing high effort at investment v: t_high = c / (pi1 - pi0), t_low = 0.
Contract optimal_contract(const ModelPrimitives& model, double v);

/// Agent rent pi0 c / (pi1 - pi0).
double agent_rent(const ModelPrimitives& model, double v);
/// Same rent written through outcome separability, c / (Q - 1).
double agent_rent_via_separability(const ModelPrimitives& model, double v);
/// Principal's expected surplus when inducing effort under optimal_contract(v).
double principal_surplus(const ModelPrimitives& model, double v);
/// Principal's expected surplus from running the twin alone at investment v.
double twin_only_surplus(const ModelPrimitives& model, double v);

SurplusBreakdown surpluses(const ModelPrimitives& model, double v);

/// Incremental value of effort covers the expected wage bill.
bool effort_inducement_check(const ModelPrimitives& model, double v, double tol = kPayoffTolerance);

/// Both sides of the displacement deterrent in its two algebraic forms. A
/// non-negative margin means the principal keeps the human.
struct DeterrentMargins {
  double separability_form;  ///< (s_high - s_low)(1 - 1/Q) - t_high
  double payoff_form;        ///< [pi1 (s_high - t_high) + (1 - pi1) s_low] - [pi0 s_high + (1 - pi0) s_low]
};
DeterrentMargins deterrent_margins(const ModelPrimitives& model, double v);

/// True when contracting the human beats using the twin alone at v.
bool displacement_deterrent_check(const ModelPrimitives& model, double v, double tol = kPayoffTolerance);

/// First-best surplus pi1 (s_high - s_low) + s_low - c; nondecreasing in v for valid models.
double social_total_surplus(const ModelPrimitives& model, double v);

/// The principal offers the twin when the anticipated investment does not lower its surplus.
bool should_offer_twin(const ModelPrimitives& model, double anticipated_v, double tol = kPayoffTolerance);

}  // namespace twinvest
