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
#include <string>
#include <string_view>
#include <vector>

#include "twinvest/contract.hpp"
#include "twinvest/model.hpp"

namespace twinvest {

/// Which sufficient condition (if any) pins down the strategic agent's
/// unconstrained investment. The conditions are sufficient, not exhaustive.
enum class Regime { NoInvestment, MaxInvestment, Interior, Indeterminate };

std::string_view to_string(Regime regime);

/// Evaluates c'/c against Q'/(Q-1) on a uniform grid over [0, v_max].
/// Strict inequalities throughout; exact ties fall through to Indeterminate.
Regime classify_regime(const ModelPrimitives& model, std::size_t grid_points = kDefaultGridPoints);

struct InvestmentSolution {
  Regime regime = Regime::Indeterminate;
  /// False when the deterrent fails already at v = 0: the principal never
  /// contracts the agent, so no twin is worth offering.
  bool feasible = true;
  double v_star_unconstrained = 0.0;
  double v_opt = 0.0;
  std::optional<double> displacement_threshold;
  bool deterrent_binding = false;
  double u_at_opt = 0.0;
  double principal_surplus_at_opt = 0.0;
};

struct SolverOptions {
  std::size_t grid_points = kDefaultGridPoints;
  double tol = kPayoffTolerance;
};

/// Agent's investment maximizing its rent subject to the displacement deterrent.
InvestmentSolution optimal_investment(const ModelPrimitives& model, const SolverOptions& options = {});

/// g(v) = (s_high - s_low)(1 - 1/Q(v)) - t_high(v); the deterrent holds where g >= 0.
double displacement_margin(const ModelPrimitives& model, double v);

/// Smallest v at which g turns negative. Absent when g >= 0 on all of [0, v_max];
/// 0 when g(0) < 0.
std::optional<double> displacement_threshold(const ModelPrimitives& model,
                                             const SolverOptions& options = {});

/// Every sign change of g on the grid, refined by bisection, in increasing order.
std::vector<double> displacement_roots(const ModelPrimitives& model, const SolverOptions& options = {});

struct WageSlopeDiagnostics {
  double t_bar_slope;
  double delta_pi_slope;
  double q_slope;
  bool widening_gap_lowers_wage;  ///< delta_pi' > 0 implies t_high' < 0
  bool rising_wage_needs_falling_separability;  ///< t_high' > 0 implies Q' < 0 and |c'/c| < |Q'/(Q-1)|
};

/// `positive_slope` is the threshold above which t_high' counts as increasing.
WageSlopeDiagnostics wage_slope_diagnostics(const ModelPrimitives& model, double v,
                                            double positive_slope = 0.0);

/// Sets a scalar model parameter by path: "pi0.coefficients[1]", "cost.coefficients[0]",
/// "v_max", "s_high", "s_low". Throws ParseError for unknown paths and
/// std::invalid_argument when the family rejects the value.
ModelPrimitives with_parameter(const ModelPrimitives& model, std::string_view path, double value);

struct SweepAxis {
  std::string parameter;
  double min = 0.0;
  double max = 0.0;
  std::size_t points = 1;
};

struct RegimeCell {
  std::size_t index;
  double param1;
  std::optional<double> param2;
  std::optional<Regime> regime;  ///< empty for cells whose model is invalid
  double v_opt = 0.0;
  double u_opt = 0.0;
  bool deterrent_binding = false;
  std::optional<double> v_star;
};

struct RegimeMap {
  std::vector<SweepAxis> axes;
  std::vector<RegimeCell> cells;  ///< row-major: the first axis varies slowest
};

/// Classifies and solves every cell of a one- or two-axis grid over `base`.
/// Throws std::invalid_argument for zero or more than two axes.
RegimeMap regime_sweep(const ModelPrimitives& base, std::span<const SweepAxis> axes,
                       const SolverOptions& options = {});

}  // namespace twinvest
