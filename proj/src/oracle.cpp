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

#include "twinvest/oracle.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "twinvest/fixtures.hpp"
#include "twinvest/grid.hpp"
#include "twinvest/sampling.hpp"

namespace twinvest::oracle {

namespace {

constexpr double kTieTolerance = 1e-12;

struct Primitives {
  double pi0, pi1, cost;
};

Primitives at(const ModelPrimitives& m, double v) { return {m.pi0.value(v), m.pi1.value(v), m.cost.value(v)}; }

bool incentive_ok(const Primitives& p, double t_high, double t_low) {
  return p.pi1 * t_high + (1.0 - p.pi1) * t_low - p.cost >= p.pi0 * t_high + (1.0 - p.pi0) * t_low;
}

double hire_payoff(const ModelPrimitives& m, const Primitives& p, double wage) {
  return p.pi1 * (m.s_high - wage) + (1.0 - p.pi1) * m.s_low;
}

double twin_payoff(const ModelPrimitives& m, double pi0) { return pi0 * m.s_high + (1.0 - pi0) * m.s_low; }

std::string describe_model(const std::string& label, double v = std::numeric_limits<double>::quiet_NaN()) {
  std::ostringstream s;
  s.precision(12);
  s << label;
  if (!std::isnan(v)) s << " v=" << v;
  return s.str();
}

void record(OracleReport& report, const std::string& input, double analytic, double oracle_value,
            bool disagree) {
  if (disagree) report.disagreements.push_back({input, analytic, oracle_value});
}

// Myopic agent's best (v, effort) response on the grid: highest v wins ties, then high effort.
struct Response {
  double v;
  Effort effort;
  double payoff;
};

Response myopic_response(const ModelPrimitives& m, const Contract& c, double step) {
  const std::size_t n = grid_size_for_step(0.0, m.v_max, step);
  Response best{m.v_max, Effort::High, -std::numeric_limits<double>::infinity()};
  for (std::size_t k = n; k-- > 0;) {
    const double v = grid_point(0.0, m.v_max, n, k);
    const auto p = at(m, v);
    const double high = p.pi1 * c.t_high + (1.0 - p.pi1) * c.t_low - p.cost;
    const double low = p.pi0 * c.t_high + (1.0 - p.pi0) * c.t_low;
    if (high > best.payoff) best = {v, Effort::High, high};
    if (low > best.payoff) best = {v, Effort::Low, low};
  }
  return best;
}

PeriodRecord make_record(const ModelPrimitives& m, int period, double v, const Contract& c, Effort e) {
  const auto p = at(m, v);
  const double prob = e == Effort::High ? p.pi1 : p.pi0;
  PeriodRecord r;
  r.period = period;
  r.contract = c;
  r.investment = v;
  r.twin_capability = v;
  r.effort = e;
  r.employed = true;
  r.agent_expected_payoff = prob * c.t_high + (1.0 - prob) * c.t_low - (e == Effort::High ? p.cost : 0.0);
  r.principal_expected_payoff = prob * (m.s_high - c.t_high) + (1.0 - prob) * (m.s_low - c.t_low);
  return r;
}

PeriodRecord make_twin_record(const ModelPrimitives& m, int period, double v) {
  PeriodRecord r;
  r.period = period;
  r.investment = v;
  r.twin_capability = v;
  r.principal_expected_payoff = twin_payoff(m, m.pi0.value(v));
  return r;
}

}  // namespace

double minimal_inducing_wage(const ModelPrimitives& model, double v) {
  const auto p = at(model, v);
  if (incentive_ok(p, 0.0, 0.0)) return 0.0;
  double hi = 1.0;
  while (!incentive_ok(p, hi, 0.0)) hi *= 2.0;
  double lo = 0.0;
  for (int i = 0; i < 200 && hi - lo > 0.0; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (incentive_ok(p, mid, 0.0) ? hi : lo) = mid;
  }
  return hi;
}

InvestmentArgmax brute_force_investment(const ModelPrimitives& model, double step, bool respect_deterrent) {
  InvestmentArgmax best;
  const std::size_t n = grid_size_for_step(0.0, model.v_max, step);
  for (std::size_t k = 0; k < n; ++k) {
    const double v = grid_point(0.0, model.v_max, n, k);
    const auto p = at(model, v);
    const double wage = minimal_inducing_wage(model, v);
    if (respect_deterrent && hire_payoff(model, p, wage) < twin_payoff(model, p.pi0) - kTieTolerance) continue;
    const double rent = p.pi1 * wage - p.cost;
    if (!best.feasible || rent > best.u) best = {true, v, rent};
  }
  return best;
}

std::optional<Contract> brute_force_contract(const ModelPrimitives& model, double v, double step,
                                             std::optional<double> max_payment) {
  const auto p = at(model, v);
  const double top = max_payment.value_or(model.s_high);
  const std::size_t n = grid_size_for_step(0.0, top, step);
  std::optional<Contract> best;
  double best_value = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const double t_high = grid_point(0.0, top, n, i);
    for (std::size_t j = 0; j < n; ++j) {
      const double t_low = grid_point(0.0, top, n, j);
      const double agent = p.pi1 * t_high + (1.0 - p.pi1) * t_low - p.cost;
      if (agent < 0.0) continue;
      if (agent < p.pi0 * t_high + (1.0 - p.pi0) * t_low) continue;
      const double value = p.pi1 * (model.s_high - t_high) + (1.0 - p.pi1) * (model.s_low - t_low);
      if (value > best_value) {
        best_value = value;
        best = Contract{t_high, t_low};
      }
    }
  }
  return best;
}

TimelineTrace brute_force_two_period(const ModelPrimitives& model, AgentKind agent, double step) {
  TimelineTrace trace;
  const auto retain_value = [&](double v) {
    const auto p = at(model, v);
    return hire_payoff(model, p, minimal_inducing_wage(model, v)) - twin_payoff(model, p.pi0);
  };

  if (agent == AgentKind::Myopic) {
    // Candidate 1 pays nothing. Candidate 2 is the smallest bonus under which the
    // enumerated best response is high effort.
    const Contract nothing{0.0, 0.0};
    double lo = 0.0;
    double hi = 1.0;
    while (myopic_response(model, {hi, 0.0}, step).effort != Effort::High) hi *= 2.0;
    for (int i = 0; i < 100; ++i) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      (myopic_response(model, {mid, 0.0}, step).effort == Effort::High ? hi : lo) = mid;
    }
    const Contract bonus{hi, 0.0};

    struct Outcome {
      Contract offer;
      Response response;
      double principal_total;
    };
    const auto play = [&](const Contract& offer) {
      const auto r = myopic_response(model, offer, step);
      const auto p = at(model, r.v);
      const double prob = r.effort == Effort::High ? p.pi1 : p.pi0;
      const double first = prob * (model.s_high - offer.t_high) + (1.0 - prob) * (model.s_low - offer.t_low);
      const double second = std::max(hire_payoff(model, p, minimal_inducing_wage(model, r.v)),
                                      twin_payoff(model, p.pi0));
      return Outcome{offer, r, first + second};
    };
    const auto a = play(nothing);
    const auto b = play(bonus);
    const Outcome& chosen = a.principal_total > b.principal_total + kTieTolerance ? a : b;

    const double v = chosen.response.v;
    trace.records.push_back(make_record(model, 1, v, chosen.offer, chosen.response.effort));
    if (retain_value(v) >= -kTieTolerance) {
      trace.records.push_back(make_record(model, 2, v, {minimal_inducing_wage(model, v), 0.0}, Effort::High));
    } else {
      trace.records.push_back(make_twin_record(model, 2, v));
      trace.displacement_period = 2;
    }
    return trace;
  }

  // Strategic: the agent anticipates being fired whenever the principal prefers the twin.
  const std::size_t n = grid_size_for_step(0.0, model.v_max, step);
  std::optional<double> best_v;
  double best_total = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double v = grid_point(0.0, model.v_max, n, k);
    if (retain_value(v) < -kTieTolerance) continue;
    const auto p = at(model, v);
    const double total = 2.0 * (p.pi1 * minimal_inducing_wage(model, v) - p.cost);
    if (!best_v || total > best_total) {
      best_v = v;
      best_total = total;
    }
  }
  if (!best_v) {
    trace.records.push_back(make_twin_record(model, 1, 0.0));
    trace.records.push_back(make_twin_record(model, 2, 0.0));
    trace.displacement_period = 1;
    return trace;
  }
  const Contract c{minimal_inducing_wage(model, *best_v), 0.0};
  trace.records.push_back(make_record(model, 1, *best_v, c, Effort::High));
  trace.records.push_back(make_record(model, 2, *best_v, c, Effort::High));
  return trace;
}

EffortArgmax brute_force_effort(const ContinuousEffortModel& model, double step) {
  const std::size_t n = grid_size_for_step(model.e_min, model.e_max, step);
  EffortArgmax best{model.e_min, -std::numeric_limits<double>::infinity()};
  for (std::size_t k = 0; k < n; ++k) {
    const double e = grid_point(model.e_min, model.e_max, n, k);
    const double p = model.p.value(e);
    // First-order condition fixes the spread; participation and t_low >= 0 fix the base.
    const double spread = model.c0 / model.p.derivative(e);
    const double t_low = std::max(0.0, model.c0 * e - p * spread);
    const double t_high = t_low + spread;
    const double value = p * (model.s_high - t_high) + (1.0 - p) * (model.s_low - t_low);
    if (value > best.principal_surplus) best = {e, value};
  }
  return best;
}

double agent_best_effort(const ContinuousEffortModel& model, const Contract& contract, double step) {
  const std::size_t n = grid_size_for_step(model.e_min, model.e_max, step);
  double best_e = model.e_min;
  double best_u = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < n; ++k) {
    const double e = grid_point(model.e_min, model.e_max, n, k);
    const double p = model.p.value(e);
    const double u = p * contract.t_high + (1.0 - p) * contract.t_low - model.c0 * e;
    if (u > best_u) {
      best_u = u;
      best_e = e;
    }
  }
  return best_e;
}

OracleReport certify_contracts(const std::vector<ModelPrimitives>& models, const std::vector<double>& v_fractions,
                               double step, const Solvers& solvers) {
  OracleReport report;
  report.target_op = "optimal_contract";
  for (std::size_t i = 0; i < models.size(); ++i) {
    const auto& m = models[i];
    for (double frac : v_fractions) {
      const double v = frac * m.v_max;
      const auto analytic = solvers.contract(m, v);
      const auto brute = brute_force_contract(m, v, step);
      ++report.cases;
      const auto input = describe_model("model#" + std::to_string(i), v);
      if (!brute) {
        // The grid stops at s_high; a wage above it cannot be certified here.
        record(report, input, analytic.t_high, std::numeric_limits<double>::quiet_NaN(),
               analytic.t_high <= m.s_high);
        continue;
      }
      const double err = std::max(std::abs(analytic.t_high - brute->t_high), std::abs(analytic.t_low - brute->t_low));
      report.max_value_error = std::max(report.max_value_error, err);
      record(report, input, analytic.t_high, brute->t_high, err > step * (1.0 + 1e-9));
    }
  }
  return report;
}

OracleReport certify_investment(const std::vector<ModelPrimitives>& models, double step, const Solvers& solvers) {
  OracleReport report;
  report.target_op = "optimal_investment";
  constexpr double v_tol = 1e-3;
  constexpr double u_tol = 1e-7;
  for (std::size_t i = 0; i < models.size(); ++i) {
    const auto& m = models[i];
    const auto sol = solvers.investment(m);
    const auto brute = brute_force_investment(m, step);
    ++report.cases;
    const auto input = describe_model("model#" + std::to_string(i));
    if (sol.feasible != brute.feasible) {
      record(report, input + " feasibility", sol.feasible, brute.feasible, true);
      continue;
    }
    if (!sol.feasible) continue;
    const double v_err = std::abs(sol.v_opt - brute.v);
    const double u_err = sol.u_at_opt - brute.u;
    report.max_v_error = std::max(report.max_v_error, v_err);
    report.max_value_error = std::max(report.max_value_error, std::abs(u_err));
    // The grid can sit up to one step inside a binding deterrent boundary, which
    // costs at most the rent change over one step.
    const auto rent_at = [&](double v) {
      const auto p = at(m, v);
      return p.pi1 * minimal_inducing_wage(m, v) - p.cost;
    };
    const double one_step = std::abs(rent_at(sol.v_opt) - rent_at(std::max(0.0, sol.v_opt - step)));
    const double upper = std::max(u_tol, 1.01 * one_step);
    const bool worse = u_err < -u_tol;
    const bool too_good = u_err > upper;
    const bool v_off = v_err > v_tol && std::abs(u_err) > u_tol;
    const auto p_opt = at(m, sol.v_opt);
    const bool infeasible = hire_payoff(m, p_opt, minimal_inducing_wage(m, sol.v_opt)) <
                            twin_payoff(m, p_opt.pi0) - 1e-10;
    record(report, input, sol.v_opt, brute.v, worse || too_good || v_off || infeasible);
  }
  return report;
}

OracleReport certify_regimes(const std::vector<ModelPrimitives>& models, double step, const Solvers& solvers) {
  OracleReport report;
  report.target_op = "classify_regime";
  for (std::size_t i = 0; i < models.size(); ++i) {
    const auto& m = models[i];
    const Regime regime = solvers.regime(m);
    if (regime == Regime::Indeterminate) continue;
    const auto brute = brute_force_investment(m, step, false);
    ++report.cases;
    const double half = 0.5 * step;
    bool ok = true;
    switch (regime) {
      case Regime::NoInvestment: ok = brute.v < half; break;
      case Regime::MaxInvestment: ok = brute.v > m.v_max - half; break;
      case Regime::Interior: ok = brute.v > half && brute.v < m.v_max - half; break;
      case Regime::Indeterminate: break;
    }
    record(report, describe_model("model#" + std::to_string(i) + " " + std::string(to_string(regime))),
           static_cast<double>(static_cast<int>(regime)), brute.v, !ok);
  }
  return report;
}

OracleReport certify_two_period(const std::vector<ModelPrimitives>& models, double step, const Solvers& solvers) {
  OracleReport report;
  report.target_op = "simulate_two_period";
  for (std::size_t i = 0; i < models.size(); ++i) {
    const auto& m = models[i];
    for (AgentKind kind : {AgentKind::Myopic, AgentKind::Strategic}) {
      const auto sim = solvers.two_period(m, kind);
      const auto brute = brute_force_two_period(m, kind, step);
      ++report.cases;
      const auto input = describe_model("model#" + std::to_string(i) + " " + std::string(to_string(kind)));
      bool mismatch = sim.records.size() != brute.records.size() ||
                      sim.displacement_period != brute.displacement_period;
      double v_err = 0.0;
      double value_err = 0.0;
      for (std::size_t k = 0; !mismatch && k < sim.records.size(); ++k) {
        const auto& a = sim.records[k];
        const auto& b = brute.records[k];
        mismatch = a.employed != b.employed || a.effort != b.effort;
        v_err = std::max(v_err, std::abs(a.investment - b.investment));
        value_err = std::max({value_err, std::abs(a.agent_expected_payoff - b.agent_expected_payoff),
                              std::abs(a.principal_expected_payoff - b.principal_expected_payoff)});
      }
      report.max_v_error = std::max(report.max_v_error, v_err);
      report.max_value_error = std::max(report.max_value_error, value_err);
      // Strategic investment may sit one grid cell inside a binding deterrent.
      const double v_tol = kind == AgentKind::Myopic ? 1e-12 : std::max(step, 1e-3);
      const double value_tol = kind == AgentKind::Myopic ? 1e-9 : 1e-2 * std::max(1.0, m.s_high);
      mismatch = mismatch || v_err > v_tol || value_err > value_tol;
      const double sim_v = sim.records.empty() ? 0.0 : sim.records.front().investment;
      const double brute_v = brute.records.empty() ? 0.0 : brute.records.front().investment;
      record(report, input, sim_v, brute_v, mismatch);
    }
  }
  return report;
}

OracleReport certify_effort(const std::vector<ContinuousEffortModel>& models, double step, const Solvers& solvers) {
  OracleReport report;
  report.target_op = "principal_optimal_effort";
  for (std::size_t i = 0; i < models.size(); ++i) {
    const auto& m = models[i];
    const auto opt = solvers.effort(m);
    const auto brute = brute_force_effort(m, step);
    ++report.cases;
    const double e_err = std::abs(opt.e_opt - brute.e);
    const double value_err = opt.principal_surplus - brute.principal_surplus;
    report.max_v_error = std::max(report.max_v_error, e_err);
    report.max_value_error = std::max(report.max_value_error, std::abs(value_err));
    // The induced effort must be the agent's own best response to the contract.
    const double response = agent_best_effort(m, opt.contract, step);
    const bool off = (e_err > 1e-4 && std::abs(value_err) > 1e-9) || value_err < -1e-9 ||
                     std::abs(response - opt.e_opt) > 2.0 * step;
    record(report, describe_model("continuous#" + std::to_string(i)), opt.e_opt, brute.e, off);
  }
  return report;
}

std::vector<OracleReport> run_certification(const CertificationOptions& options) {
  using namespace fixtures;
  const std::vector<ModelPrimitives> fixed{f1(), f2(), f3(), f4()};
  ModelSampler sampler(options.seed);
  std::vector<ModelPrimitives> random;
  random.reserve(options.random_models);
  for (std::size_t i = 0; i < options.random_models; ++i) random.push_back(sampler.next_model());

  std::vector<ModelPrimitives> all = fixed;
  all.insert(all.end(), random.begin(), random.end());

  std::vector<ModelPrimitives> two_period = fixed;
  for (std::size_t i = 0; i < std::min(options.random_two_period_models, random.size()); ++i) {
    two_period.push_back(random[i]);
  }

  std::vector<ContinuousEffortModel> continuous{f5()};
  auto low_stakes = f5();
  low_stakes.s_high = 0.4;
  continuous.push_back(low_stakes);
  for (std::size_t i = 0; i < std::min<std::size_t>(options.random_models, 20); ++i) {
    continuous.push_back(sampler.next_continuous());
  }

  std::vector<OracleReport> reports;
  auto contracts = certify_contracts(fixed, {0.0, 0.5, 1.0}, options.contract_step, options.solvers);
  if (!random.empty()) {
    const auto extra = certify_contracts(random, {0.5}, options.random_contract_step, options.solvers);
    contracts.cases += extra.cases;
    contracts.max_value_error = std::max(contracts.max_value_error, extra.max_value_error);
    contracts.disagreements.insert(contracts.disagreements.end(), extra.disagreements.begin(),
                                   extra.disagreements.end());
  }
  reports.push_back(std::move(contracts));
  reports.push_back(certify_investment(all, options.investment_step, options.solvers));
  reports.push_back(certify_regimes(all, options.regime_step, options.solvers));
  reports.push_back(certify_two_period(two_period, options.two_period_step, options.solvers));
  reports.push_back(certify_effort(continuous, options.effort_step, options.solvers));
  return reports;
}

}  // namespace twinvest::oracle
