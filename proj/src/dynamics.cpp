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

#include "twinvest/dynamics.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "twinvest/errors.hpp"
#include "twinvest/optimize.hpp"

namespace twinvest {

std::string_view to_string(AgentKind kind) { return kind == AgentKind::Strategic ? "strategic" : "myopic"; }
std::string_view to_string(Effort effort) { return effort == Effort::High ? "high" : "low"; }

std::optional<AgentKind> parse_agent_kind(std::string_view name) {
  if (name == "strategic") return AgentKind::Strategic;
  if (name == "myopic") return AgentKind::Myopic;
  return std::nullopt;
}

namespace {

void require_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    std::ostringstream msg;
    msg << "time persistence alpha must lie in (0, 1), got " << alpha;
    throw DomainError(msg.str());
  }
}

// Principal's surplus from keeping the fully invested agent under the cost-covering contract.
double rehire_surplus(const ModelPrimitives& model) {
  const auto c = optimal_contract(model, model.v_max);
  const auto p = evaluate(model, model.v_max);
  return p.pi1 * (model.s_high - c.t_high) + (1.0 - p.pi1) * (model.s_low - c.t_low);
}

PeriodRecord employed_record(const ModelPrimitives& model, int period, double v, const Contract& contract,
                             Effort effort) {
  const auto p = evaluate(model, v);
  const double prob = effort == Effort::High ? p.pi1 : p.pi0;
  PeriodRecord r;
  r.period = period;
  r.contract = contract;
  r.investment = v;
  r.twin_capability = v;
  r.effort = effort;
  r.employed = true;
  r.agent_expected_payoff =
      prob * contract.t_high + (1.0 - prob) * contract.t_low - (effort == Effort::High ? p.cost : 0.0);
  r.principal_expected_payoff =
      prob * (model.s_high - contract.t_high) + (1.0 - prob) * (model.s_low - contract.t_low);
  return r;
}

PeriodRecord twin_record(const ModelPrimitives& model, int period, double v, double capability) {
  PeriodRecord r;
  r.period = period;
  r.investment = v;
  r.twin_capability = capability;
  r.effort = Effort::Low;
  r.employed = false;
  r.principal_expected_payoff = twin_only_surplus(model, capability);
  return r;
}

}  // namespace

double myopic_investment(const ModelPrimitives& model, const Contract&) { return model.v_max; }

bool shirk_check(const ModelPrimitives& model, const Contract& offered, double tol) {
  return offered.t_high - offered.t_low < optimal_contract(model, model.v_max).t_high - tol;
}

Contract principal_period1_contract(const ModelPrimitives& model) {
  // Inducing effort at v_max pays exactly when the deterrent holds there; with a
  // single sign change this is the "threshold below v_max" rule.
  if (!displacement_deterrent_check(model, model.v_max)) return {0.0, 0.0};
  return optimal_contract(model, model.v_max);
}

TimelineTrace simulate_two_period(const ModelPrimitives& model, AgentKind agent, const SimulationOptions& options) {
  TimelineTrace trace;
  trace.discount = options.discount;

  if (agent == AgentKind::Myopic) {
    const Contract offer = principal_period1_contract(model);
    const double v = myopic_investment(model, offer);
    const Effort effort = shirk_check(model, offer) ? Effort::Low : Effort::High;
    trace.records.push_back(employed_record(model, 1, v, offer, effort));
    if (displacement_deterrent_check(model, v)) {
      trace.records.push_back(employed_record(model, 2, v, optimal_contract(model, v), Effort::High));
    } else {
      trace.records.push_back(twin_record(model, 2, v, v));
      trace.displacement_period = 2;
    }
    return trace;
  }

  const auto sol = optimal_investment(model, options.solver);
  if (!sol.feasible) {
    trace.records.push_back(twin_record(model, 1, 0.0, 0.0));
    trace.records.push_back(twin_record(model, 2, 0.0, 0.0));
    trace.displacement_period = 1;
    return trace;
  }
  const Contract contract = optimal_contract(model, sol.v_opt);
  trace.records.push_back(employed_record(model, 1, sol.v_opt, contract, Effort::High));
  trace.records.push_back(employed_record(model, 2, sol.v_opt, contract, Effort::High));
  return trace;
}

bool degradation_deterrent_check(const ModelPrimitives& model, double alpha, double tol) {
  require_alpha(alpha);
  return rehire_surplus(model) - twin_only_surplus(model, alpha * model.v_max) >= -tol;
}

std::optional<double> degraded_displacement_threshold(const ModelPrimitives& model, double alpha,
                                                      const SolverOptions& options) {
  require_alpha(alpha);
  const auto g = [&](double v) {
    const auto c = optimal_contract(model, v);
    const auto p = evaluate(model, v);
    const double keep = p.pi1 * (model.s_high - c.t_high) + (1.0 - p.pi1) * (model.s_low - c.t_low);
    return keep - twin_only_surplus(model, alpha * v) + options.tol;
  };
  if (g(0.0) < 0.0) return 0.0;
  const std::size_t n = std::max<std::size_t>(options.grid_points, 2);
  double prev = 0.0;
  for (std::size_t i = 1; i < n; ++i) {
    const double v = grid_point(0.0, model.v_max, n, i);
    if (g(v) < 0.0) return bisect_boundary(g, prev, v);
    prev = v;
  }
  return std::nullopt;
}

std::optional<int> rehire_cycle_length(const ModelPrimitives& model, double alpha, int horizon) {
  require_alpha(alpha);
  if (displacement_deterrent_check(model, model.v_max)) return std::nullopt;
  const double rehire = rehire_surplus(model);
  double level = 1.0;
  for (int n = 1; n <= horizon; ++n) {
    level *= alpha;
    if (twin_only_surplus(model, level * model.v_max) < rehire + kPayoffTolerance) return n;
  }
  return std::nullopt;
}

TimelineTrace simulate_cycles(const ModelPrimitives& model, double alpha, int horizon,
                              const SimulationOptions& options) {
  require_alpha(alpha);
  if (horizon < 1) throw DomainError("horizon must be at least one period");
  TimelineTrace trace;
  trace.alpha = alpha;
  trace.discount = options.discount;
  const double v = model.v_max;
  const Contract contract = principal_period1_contract(model);

  const auto twin_run = rehire_cycle_length(model, alpha);
  if (!twin_run) {
    // Either the agent is never displaced or the twin never decays enough to rehire.
    const bool displaced = !displacement_deterrent_check(model, v);
    for (int t = 1; t <= horizon; ++t) {
      if (t == 1 || !displaced) {
        const Contract c = t == 1 ? contract : optimal_contract(model, v);
        const Effort e = shirk_check(model, c) ? Effort::Low : Effort::High;
        trace.records.push_back(employed_record(model, t, v, c, e));
      } else {
        trace.records.push_back(twin_record(model, t, v, std::pow(alpha, t - 2) * v));
      }
    }
    if (displaced && horizon >= 2) trace.displacement_period = 2;
    return trace;
  }

  // Retraining episodes reuse the period-1 contract rule; the k-th twin-only
  // period after retraining runs at alpha^(k-1) v_max, and the agent is
  // rehired once the next level would fall below the rehire surplus.
  trace.cycle_length = *twin_run;
  int since_training = -1;
  for (int t = 1; t <= horizon; ++t) {
    if (since_training < 0 || since_training == *twin_run) {
      const Effort e = shirk_check(model, contract) ? Effort::Low : Effort::High;
      trace.records.push_back(employed_record(model, t, v, contract, e));
      since_training = 0;
    } else {
      trace.records.push_back(twin_record(model, t, v, std::pow(alpha, since_training) * v));
      if (!trace.displacement_period) trace.displacement_period = t;
      ++since_training;
    }
  }
  return trace;
}

void sample_outcomes(const ModelPrimitives& model, TimelineTrace& trace, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (auto& r : trace.records) {
    const auto p = evaluate(model, r.employed ? r.investment : r.twin_capability);
    const double prob = r.employed && r.effort == Effort::High ? p.pi1 : p.pi0;
    // 53 random bits mapped to [0, 1); std::uniform_real_distribution is not portable.
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    r.realized_high = u < prob;
  }
}

}  // namespace twinvest
