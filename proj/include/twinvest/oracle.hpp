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

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "twinvest/continuous.hpp"
#include "twinvest/contract.hpp"
#include "twinvest/dynamics.hpp"
#include "twinvest/investment.hpp"
#include "twinvest/model.hpp"

/// Brute-force reference implementations. Everything here works from raw
/// primitive evaluations and the participation / incentive / hiring
/// inequalities; none of the closed-form contract or rent expressions are used.
namespace twinvest::oracle {

/// Smallest bonus w >= 0 with pi1 w - c >= pi0 w, found by bisection on the raw
/// incentive constraint (not by its closed-form solution).
double minimal_inducing_wage(const ModelPrimitives& model, double v);

struct InvestmentArgmax {
  bool feasible = false;
  double v = 0.0;
  double u = 0.0;
};

/// Exhaustive grid search for the agent's rent-maximizing investment, keeping
/// only points where the principal prefers contracting to the twin when
/// `respect_deterrent`. Ties go to the smaller v.
InvestmentArgmax brute_force_investment(const ModelPrimitives& model, double step, bool respect_deterrent = true);

/// Enumerates (t_high, t_low) on [0, max_payment]^2 at `step`, keeps pairs
/// satisfying participation and incentive compatibility at v, and returns the
/// principal-surplus maximizer. Empty when no grid pair is feasible.
/// max_payment defaults to s_high.
std::optional<Contract> brute_force_contract(const ModelPrimitives& model, double v, double step = 1e-3,
                                             std::optional<double> max_payment = {});

/// Backward induction over the principal's two period-1 offers, the agent's
/// (investment grid x effort) responses and the period-2 fire/retain choice.
TimelineTrace brute_force_two_period(const ModelPrimitives& model, AgentKind agent, double step = 1e-3);

/// Grid evaluation of the principal's payoff over effort, with wages from the
/// agent's first-order, participation and limited-liability constraints.
struct EffortArgmax {
  double e;
  double principal_surplus;
};
EffortArgmax brute_force_effort(const ContinuousEffortModel& model, double step = 1e-4);

/// Best response of the agent to `contract` over an effort grid.
double agent_best_effort(const ContinuousEffortModel& model, const Contract& contract, double step = 1e-4);

struct Disagreement {
  std::string input;
  double analytic;
  double oracle;
};

struct OracleReport {
  std::string target_op;
  std::size_t cases = 0;
  double max_v_error = 0.0;
  double max_value_error = 0.0;
  std::vector<Disagreement> disagreements;

  bool ok() const { return disagreements.empty(); }
};

/// Production entry points under certification; tests swap one out to check
/// that a faulty solver is caught.
struct Solvers {
  std::function<Contract(const ModelPrimitives&, double)> contract = optimal_contract;
  std::function<InvestmentSolution(const ModelPrimitives&)> investment = [](const ModelPrimitives& m) {
    return optimal_investment(m);
  };
  std::function<Regime(const ModelPrimitives&)> regime = [](const ModelPrimitives& m) {
    return classify_regime(m);
  };
  std::function<TimelineTrace(const ModelPrimitives&, AgentKind)> two_period =
      [](const ModelPrimitives& m, AgentKind a) { return simulate_two_period(m, a); };
  std::function<EffortOptimum(const ContinuousEffortModel&)> effort = [](const ContinuousEffortModel& m) {
    return principal_optimal_effort(m);
  };
};

struct CertificationOptions {
  std::uint64_t seed = 0;
  std::size_t random_models = 200;
  double investment_step = 1e-4;
  double regime_step = 1e-3;
  double contract_step = 1e-3;         ///< fixtures
  double random_contract_step = 2e-3;  ///< random models
  double two_period_step = 1e-3;
  std::size_t random_two_period_models = 50;
  double effort_step = 1e-4;
  Solvers solvers;
};

OracleReport certify_contracts(const std::vector<ModelPrimitives>& models, const std::vector<double>& v_fractions,
                               double step, const Solvers& solvers = {});
OracleReport certify_investment(const std::vector<ModelPrimitives>& models, double step, const Solvers& solvers = {});
OracleReport certify_regimes(const std::vector<ModelPrimitives>& models, double step, const Solvers& solvers = {});
OracleReport certify_two_period(const std::vector<ModelPrimitives>& models, double step, const Solvers& solvers = {});
OracleReport certify_effort(const std::vector<ContinuousEffortModel>& models, double step,
                            const Solvers& solvers = {});

/// Fixtures plus `random_models` seeded random instances through every certification.
std::vector<OracleReport> run_certification(const CertificationOptions& options = {});

}  // namespace twinvest::oracle
