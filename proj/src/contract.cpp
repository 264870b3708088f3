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

#include "twinvest/contract.hpp"

namespace twinvest {

Contract optimal_contract(const ModelPrimitives& model, double v) {
  const auto p = evaluate(model, v);
  return {p.cost / p.delta_pi(), 0.0};
}

double agent_rent(const ModelPrimitives& model, double v) {
  const auto p = evaluate(model, v);
  return p.pi0 * p.cost / p.delta_pi();
}

double agent_rent_via_separability(const ModelPrimitives& model, double v) {
  const auto p = evaluate(model, v);
  return p.cost / (p.separability() - 1.0);
}

double principal_surplus(const ModelPrimitives& model, double v) {
  const auto p = evaluate(model, v);
  return p.pi1 * model.s_high + (1.0 - p.pi1) * model.s_low - p.pi1 * p.cost / p.delta_pi();
}

double twin_only_surplus(const ModelPrimitives& model, double v) {
  const auto p = evaluate(model, v);
  return p.pi0 * model.s_high + (1.0 - p.pi0) * model.s_low;
}

SurplusBreakdown surpluses(const ModelPrimitives& model, double v) {
  const auto p = evaluate(model, v);
  SurplusBreakdown s{};
  s.delta_pi = p.delta_pi();
  s.outcome_separability = p.separability();
  s.quality_importance = model.quality_importance();
  s.agent_surplus = p.pi0 * p.cost / s.delta_pi;
  s.principal_surplus = p.pi1 * model.s_high + (1.0 - p.pi1) * model.s_low - p.pi1 * p.cost / s.delta_pi;
  s.total_surplus = s.agent_surplus + s.principal_surplus;
  return s;
}

bool effort_inducement_check(const ModelPrimitives& model, double v, double tol) {
  const auto p = evaluate(model, v);
  return p.delta_pi() * model.quality_importance() >= p.pi1 * p.cost / p.delta_pi() - tol;
}

DeterrentMargins deterrent_margins(const ModelPrimitives& model, double v) {
  const auto p = evaluate(model, v);
  const double t_high = p.cost / p.delta_pi();
  const double keep = p.pi1 * (model.s_high - t_high) + (1.0 - p.pi1) * model.s_low;
  const double twin = p.pi0 * model.s_high + (1.0 - p.pi0) * model.s_low;
  return {model.quality_importance() * (1.0 - 1.0 / p.separability()) - t_high, keep - twin};
}

bool displacement_deterrent_check(const ModelPrimitives& model, double v, double tol) {
  return deterrent_margins(model, v).separability_form >= -tol;
}

double social_total_surplus(const ModelPrimitives& model, double v) {
  const auto p = evaluate(model, v);
  return p.pi1 * model.quality_importance() + model.s_low - p.cost;
}

bool should_offer_twin(const ModelPrimitives& model, double anticipated_v, double tol) {
  return principal_surplus(model, anticipated_v) >= principal_surplus(model, 0.0) - tol;
}

}  // namespace twinvest
