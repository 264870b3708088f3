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
#include <optional>
#include <string_view>
#include <vector>

#include "twinvest/contract.hpp"
#include "twinvest/investment.hpp"
#include "twinvest/model.hpp"

namespace twinvest {

enum class AgentKind { Strategic, Myopic };
enum class Effort { High, Low };

std::string_view to_string(AgentKind kind);
std::string_view to_string(Effort effort);
std::optional<AgentKind> parse_agent_kind(std::string_view name);

struct PeriodRecord {
  int period = 1;
  Contract contract;
  double investment = 0.0;       ///< training level frozen into the twin
  double twin_capability = 0.0;  ///< effective investment the twin operates at this period
  Effort effort = Effort::Low;
  bool employed = false;
  double agent_expected_payoff = 0.0;
  double principal_expected_payoff = 0.0;
  std::optional<bool> realized_high;  ///< set only by sample_outcomes
};

struct TimelineTrace {
  std::vector<PeriodRecord> records;
  std::optional<int> displacement_period;
  /// Twin-only periods between two retraining periods (cycle mode only).
  std::optional<int> cycle_length;
  std::optional<double> alpha;
  /// Recorded for reference; the per-period hiring comparison does not discount.
  double discount = 1.0;
};

/// A myopic agent trains the twin fully whatever contract it was offered.
double myopic_investment(const ModelPrimitives& model, const Contract& offered);

/// True when the offered wage spread falls strictly below the cost-covering
/// payment at v_max, so the fully invested myopic agent exerts low effort.
bool shirk_check(const ModelPrimitives& model, const Contract& offered, double tol = kPayoffTolerance);

/// (0, 0) when the principal will displace the fully invested agent anyway,
/// else the cost-covering contract at v_max.
Contract principal_period1_contract(const ModelPrimitives& model);

struct SimulationOptions {
  double discount = 1.0;
  SolverOptions solver;
};

TimelineTrace simulate_two_period(const ModelPrimitives& model, AgentKind agent,
                                  const SimulationOptions& options = {});

/// Period-2 retention when the unattended twin decays to alpha * v_max.
/// Throws DomainError unless 0 < alpha < 1.
bool degradation_deterrent_check(const ModelPrimitives& model, double alpha, double tol = kPayoffTolerance);

/// Displacement threshold when the twin decays to alpha * v once the agent leaves.
std::optional<double> degraded_displacement_threshold(const ModelPrimitives& model, double alpha,
                                                      const SolverOptions& options = {});

inline constexpr int kDefaultRehireHorizon = 10000;

/// Smallest n >= 1 with the twin's surplus at alpha^n v_max below the surplus
/// of rehiring the agent. Absent when the agent is never displaced at v_max or
/// no such n <= horizon exists. Throws DomainError unless 0 < alpha < 1.
std::optional<int> rehire_cycle_length(const ModelPrimitives& model, double alpha,
                                       int horizon = kDefaultRehireHorizon);

/// Infinite-horizon operation truncated to `horizon` periods: one retraining
/// period with the agent, then rehire_cycle_length periods of twin-only output.
TimelineTrace simulate_cycles(const ModelPrimitives& model, double alpha, int horizon,
                              const SimulationOptions& options = {});

/// Draws a Bernoulli outcome per period from the recorded effort and twin
/// capability. Deterministic in `seed` across platforms.
void sample_outcomes(const ModelPrimitives& model, TimelineTrace& trace, std::uint64_t seed);

}  // namespace twinvest
