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

#include "twinvest/investment.hpp"

#include <cmath>
#include <regex>
#include <stdexcept>
#include <string>

#include "twinvest/errors.hpp"
#include "twinvest/optimize.hpp"

namespace twinvest {

std::string_view to_string(Regime regime) {
  switch (regime) {
    case Regime::NoInvestment: return "NoInvestment";
    case Regime::MaxInvestment: return "MaxInvestment";
    case Regime::Interior: return "Interior";
    case Regime::Indeterminate: return "Indeterminate";
  }
  return "Indeterminate";
}

namespace {

struct RatioPair {
  double cost_ratio;         // c'/c
  double separability_ratio; // Q'/(Q-1)
  double q_slope;
};

RatioPair ratios(const ModelPrimitives& model, double v) {
  const auto p = evaluate(model, v);
  const double q_slope = p.d_separability();
  return {p.dcost / p.cost, q_slope / (p.separability() - 1.0), q_slope};
}

}  // namespace

Regime classify_regime(const ModelPrimitives& model, std::size_t grid_points) {
  if (grid_points < 2) grid_points = 2;
  bool no_investment = true;
  bool q_increasing = true;
  bool max_investment = true;
  for (std::size_t i = 0; i < grid_points; ++i) {
    const auto r = ratios(model, grid_point(0.0, model.v_max, grid_points, i));
    no_investment = no_investment && r.cost_ratio < r.separability_ratio;
    q_increasing = q_increasing && r.q_slope > 0.0;
    max_investment = max_investment && r.q_slope <= 0.0 &&
                     std::abs(r.cost_ratio) < std::abs(r.separability_ratio);
  }
  if (no_investment || q_increasing) return Regime::NoInvestment;
  if (max_investment) return Regime::MaxInvestment;

  const auto lo = ratios(model, 0.0);
  const auto hi = ratios(model, model.v_max);
  if (lo.cost_ratio > lo.separability_ratio && hi.cost_ratio < hi.separability_ratio) return Regime::Interior;
  return Regime::Indeterminate;
}

double displacement_margin(const ModelPrimitives& model, double v) {
  return deterrent_margins(model, v).separability_form;
}

std::optional<double> displacement_threshold(const ModelPrimitives& model, const SolverOptions& options) {
  const auto g = [&](double v) { return displacement_margin(model, v) + options.tol; };
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

std::vector<double> displacement_roots(const ModelPrimitives& model, const SolverOptions& options) {
  const auto g = [&](double v) { return displacement_margin(model, v) + options.tol; };
  const std::size_t n = std::max<std::size_t>(options.grid_points, 2);
  std::vector<double> roots;
  double prev_v = 0.0;
  bool prev_ok = g(0.0) >= 0.0;
  for (std::size_t i = 1; i < n; ++i) {
    const double v = grid_point(0.0, model.v_max, n, i);
    const bool ok = g(v) >= 0.0;
    if (ok != prev_ok) roots.push_back(ok ? bisect_boundary(g, v, prev_v) : bisect_boundary(g, prev_v, v));
    prev_v = v;
    prev_ok = ok;
  }
  return roots;
}

InvestmentSolution optimal_investment(const ModelPrimitives& model, const SolverOptions& options) {
  InvestmentSolution sol;
  const std::size_t n = std::max<std::size_t>(options.grid_points, 3);
  const double v_max = model.v_max;
  const auto rent = [&](double v) { return agent_rent(model, v); };
  const auto margin = [&](double v) { return displacement_margin(model, v) + options.tol; };

  sol.regime = classify_regime(model, n);
  sol.v_star_unconstrained = grid_refine_max(rent, 0.0, v_max, n).x;
  sol.displacement_threshold = displacement_threshold(model, options);

  std::vector<char> feasible(n);
  std::optional<std::size_t> best;
  double best_u = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double v = grid_point(0.0, v_max, n, i);
    feasible[i] = margin(v) >= 0.0;
    if (!feasible[i]) continue;
    const double u = rent(v);
    if (!best || u > best_u) {
      best = i;
      best_u = u;
    }
  }

  if (!best) {
    sol.feasible = false;
    sol.v_opt = 0.0;
    sol.u_at_opt = 0.0;
    sol.principal_surplus_at_opt = twin_only_surplus(model, 0.0);
    sol.deterrent_binding = true;
    return sol;
  }

  // Refine inside the feasible part of the neighbouring cells; an infeasible
  // neighbour is replaced by the deterrent boundary between it and the best point.
  const std::size_t i = *best;
  const double v_best = grid_point(0.0, v_max, n, i);
  double lo = v_best;
  double hi = v_best;
  if (i > 0) {
    const double left = grid_point(0.0, v_max, n, i - 1);
    lo = feasible[i - 1] ? left : bisect_boundary(margin, v_best, left);
  }
  if (i + 1 < n) {
    const double right = grid_point(0.0, v_max, n, i + 1);
    hi = feasible[i + 1] ? right : bisect_boundary(margin, v_best, right);
  }
  ScalarMax opt{v_best, best_u};
  const auto refined = refine_max(rent, lo, hi);
  if (refined.value > opt.value && margin(refined.x) >= 0.0) opt = refined;

  sol.v_opt = opt.x;
  sol.u_at_opt = opt.value;
  sol.principal_surplus_at_opt = principal_surplus(model, opt.x);
  sol.deterrent_binding = std::abs(sol.v_opt - sol.v_star_unconstrained) > 1e-6 * std::max(1.0, v_max);
  return sol;
}

WageSlopeDiagnostics wage_slope_diagnostics(const ModelPrimitives& model, double v, double positive_slope) {
  const auto p = evaluate(model, v);
  const double dpi = p.delta_pi();
  WageSlopeDiagnostics d{};
  d.delta_pi_slope = p.d_delta_pi();
  d.t_bar_slope = (p.dcost * dpi - p.cost * d.delta_pi_slope) / (dpi * dpi);
  d.q_slope = p.d_separability();
  d.widening_gap_lowers_wage = !(d.delta_pi_slope > 0.0) || d.t_bar_slope < 0.0;
  const double cost_ratio = p.dcost / p.cost;
  const double separability_ratio = d.q_slope / (p.separability() - 1.0);
  d.rising_wage_needs_falling_separability =
      !(d.t_bar_slope > positive_slope) || (d.q_slope < 0.0 && std::abs(cost_ratio) < std::abs(separability_ratio));
  return d;
}

ModelPrimitives with_parameter(const ModelPrimitives& model, std::string_view path, double value) {
  static const std::regex coefficient(R"((pi0|pi1|cost)\.coefficients\[(\d+)\])");
  ModelPrimitives out = model;
  const std::string key(path);
  if (key == "v_max") {
    out.v_max = value;
    return out;
  }
  if (key == "s_high") {
    out.s_high = value;
    return out;
  }
  if (key == "s_low") {
    out.s_low = value;
    return out;
  }
  std::smatch m;
  if (!std::regex_match(key, m, coefficient)) throw ParseError(key, "unknown sweep parameter");
  const auto index = static_cast<std::size_t>(std::stoul(m[2].str()));
  ParametricFamily& family = m[1] == "pi0" ? out.pi0 : (m[1] == "pi1" ? out.pi1 : out.cost);
  if (index >= family.coefficients().size()) throw ParseError(key, "coefficient index out of range");
  family = family.with_coefficient(index, value);
  return out;
}

RegimeMap regime_sweep(const ModelPrimitives& base, std::span<const SweepAxis> axes, const SolverOptions& options) {
  if (axes.empty() || axes.size() > 2) {
    throw std::invalid_argument("regime sweep takes one or two varying parameters, got " +
                                std::to_string(axes.size()));
  }
  for (const auto& axis : axes) {
    if (axis.points == 0) throw std::invalid_argument("sweep axis " + axis.parameter + " has no points");
    with_parameter(base, axis.parameter, axis.min);  // rejects unknown paths up front
  }
  RegimeMap map;
  map.axes.assign(axes.begin(), axes.end());
  const SweepAxis& a = axes[0];
  const std::size_t n2 = axes.size() == 2 ? axes[1].points : 1;
  map.cells.reserve(a.points * n2);

  for (std::size_t i = 0; i < a.points; ++i) {
    for (std::size_t j = 0; j < n2; ++j) {
      RegimeCell cell{};
      cell.index = i * n2 + j;
      cell.param1 = grid_point(a.min, a.max, a.points, i);
      if (axes.size() == 2) cell.param2 = grid_point(axes[1].min, axes[1].max, axes[1].points, j);

      std::optional<ModelPrimitives> model;
      try {
        model = with_parameter(base, a.parameter, cell.param1);
        if (cell.param2) model = with_parameter(*model, axes[1].parameter, *cell.param2);
      } catch (const std::invalid_argument&) {
        model.reset();
      }
      if (model && validate(*model, options.grid_points)) {
        const auto sol = optimal_investment(*model, options);
        cell.regime = sol.regime;
        cell.v_opt = sol.v_opt;
        cell.u_opt = sol.u_at_opt;
        cell.deterrent_binding = sol.deterrent_binding;
        cell.v_star = sol.displacement_threshold;
      }
      map.cells.push_back(cell);
    }
  }
  return map;
}

}  // namespace twinvest
