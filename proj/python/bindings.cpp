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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "twinvest/cli.hpp"
#include "twinvest/continuous.hpp"
#include "twinvest/dynamics.hpp"
#include "twinvest/errors.hpp"
#include "twinvest/investment.hpp"
#include "twinvest/io.hpp"
#include "twinvest/oracle.hpp"

namespace py = pybind11;
using namespace twinvest;

namespace {

std::string str_of(std::string_view s) { return std::string(s); }

py::tuple run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bindings for the twinvest contract, investment and dynamics solvers";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::enum_<FamilyKind>(m, "FamilyKind")
      .value("Affine", FamilyKind::Affine)
      .value("ExponentialDecay", FamilyKind::ExponentialDecay)
      .value("Power", FamilyKind::Power)
      .value("Constant", FamilyKind::Constant);

  py::class_<ParametricFamily>(m, "ParametricFamily")
      .def(py::init<FamilyKind, std::vector<double>>(), py::arg("kind"), py::arg("coefficients"))
      .def_static("affine", &ParametricFamily::affine)
      .def_static("exponential_decay", &ParametricFamily::exponential_decay)
      .def_static("power", &ParametricFamily::power)
      .def_static("constant", &ParametricFamily::constant)
      .def_property_readonly("kind", &ParametricFamily::kind)
      .def_property_readonly("coefficients",
                             [](const ParametricFamily& f) {
                               return std::vector<double>(f.coefficients().begin(), f.coefficients().end());
                             })
      .def("value", &ParametricFamily::value)
      .def("derivative", &ParametricFamily::derivative)
      .def("second_derivative", &ParametricFamily::second_derivative)
      .def("__repr__", [](const ParametricFamily& f) { return io::to_json(f).dump(); });

  py::class_<ModelPrimitives>(m, "Model")
      .def(py::init([](ParametricFamily pi0, ParametricFamily pi1, ParametricFamily cost, double v_max,
                       double s_high, double s_low) {
             return ModelPrimitives{std::move(pi0), std::move(pi1), std::move(cost), v_max, s_high, s_low};
           }),
           py::arg("pi0"), py::arg("pi1"), py::arg("cost"), py::arg("v_max"), py::arg("s_high"),
           py::arg("s_low") = 0.0)
      .def_readwrite("pi0", &ModelPrimitives::pi0)
      .def_readwrite("pi1", &ModelPrimitives::pi1)
      .def_readwrite("cost", &ModelPrimitives::cost)
      .def_readwrite("v_max", &ModelPrimitives::v_max)
      .def_readwrite("s_high", &ModelPrimitives::s_high)
      .def_readwrite("s_low", &ModelPrimitives::s_low)
      .def("__repr__", [](const ModelPrimitives& model) { return io::to_json(model).dump(); });

  py::class_<ValidationReport>(m, "ValidationReport")
      .def_readonly("ok", &ValidationReport::ok)
      .def_readonly("condition", &ValidationReport::condition)
      .def_readonly("detail", &ValidationReport::detail)
      .def_readonly("v", &ValidationReport::v)
      .def_readonly("notes", &ValidationReport::notes)
      .def("__bool__", [](const ValidationReport& r) { return r.ok; });

  py::class_<Contract>(m, "Contract")
      .def(py::init<>())
      .def(py::init([](double hi, double lo) { return Contract{hi, lo}; }), py::arg("t_high"), py::arg("t_low"))
      .def_readwrite("t_high", &Contract::t_high)
      .def_readwrite("t_low", &Contract::t_low);

  py::enum_<Regime>(m, "Regime")
      .value("NoInvestment", Regime::NoInvestment)
      .value("MaxInvestment", Regime::MaxInvestment)
      .value("Interior", Regime::Interior)
      .value("Indeterminate", Regime::Indeterminate);

  py::class_<InvestmentSolution>(m, "InvestmentSolution")
      .def_readonly("regime", &InvestmentSolution::regime)
      .def_readonly("feasible", &InvestmentSolution::feasible)
      .def_readonly("v_star_unconstrained", &InvestmentSolution::v_star_unconstrained)
      .def_readonly("v_opt", &InvestmentSolution::v_opt)
      .def_readonly("displacement_threshold", &InvestmentSolution::displacement_threshold)
      .def_readonly("deterrent_binding", &InvestmentSolution::deterrent_binding)
      .def_readonly("u_at_opt", &InvestmentSolution::u_at_opt)
      .def_readonly("principal_surplus_at_opt", &InvestmentSolution::principal_surplus_at_opt);

  py::enum_<AgentKind>(m, "AgentKind").value("Strategic", AgentKind::Strategic).value("Myopic", AgentKind::Myopic);

  py::class_<PeriodRecord>(m, "PeriodRecord")
      .def_readonly("period", &PeriodRecord::period)
      .def_readonly("contract", &PeriodRecord::contract)
      .def_readonly("investment", &PeriodRecord::investment)
      .def_readonly("twin_capability", &PeriodRecord::twin_capability)
      .def_property_readonly("effort", [](const PeriodRecord& r) { return str_of(to_string(r.effort)); })
      .def_readonly("employed", &PeriodRecord::employed)
      .def_readonly("agent_expected_payoff", &PeriodRecord::agent_expected_payoff)
      .def_readonly("principal_expected_payoff", &PeriodRecord::principal_expected_payoff)
      .def_readonly("realized_high", &PeriodRecord::realized_high);

  py::class_<TimelineTrace>(m, "TimelineTrace")
      .def_readonly("records", &TimelineTrace::records)
      .def_readonly("displacement_period", &TimelineTrace::displacement_period)
      .def_readonly("cycle_length", &TimelineTrace::cycle_length)
      .def_readonly("alpha", &TimelineTrace::alpha);

  py::class_<ContinuousEffortModel>(m, "ContinuousEffortModel")
      .def(py::init([](ParametricFamily p, double c0, double e_min, double e_max, double s_high, double s_low) {
             return ContinuousEffortModel{std::move(p), c0, e_min, e_max, s_high, s_low};
           }),
           py::arg("p"), py::arg("c0"), py::arg("e_min"), py::arg("e_max"), py::arg("s_high"),
           py::arg("s_low") = 0.0);

  py::class_<EffortOptimum>(m, "EffortOptimum")
      .def_readonly("e_opt", &EffortOptimum::e_opt)
      .def_readonly("contract", &EffortOptimum::contract)
      .def_readonly("principal_surplus", &EffortOptimum::principal_surplus);

  m.def("validate", py::overload_cast<const ModelPrimitives&, std::size_t>(&validate), py::arg("model"),
        py::arg("grid_points") = kDefaultGridPoints);
  m.def("validate_continuous", py::overload_cast<const ContinuousEffortModel&, std::size_t>(&validate),
        py::arg("model"), py::arg("grid_points") = kDefaultGridPoints);
  m.def("optimal_contract", &optimal_contract, py::arg("model"), py::arg("v"));
  m.def("agent_rent", &agent_rent, py::arg("model"), py::arg("v"));
  m.def("principal_surplus", &principal_surplus, py::arg("model"), py::arg("v"));
  m.def("displacement_deterrent_check", &displacement_deterrent_check, py::arg("model"), py::arg("v"),
        py::arg("tol") = kPayoffTolerance);
  m.def("displacement_margin", &displacement_margin, py::arg("model"), py::arg("v"));
  m.def(
      "classify_regime", [](const ModelPrimitives& model, std::size_t grid) { return classify_regime(model, grid); },
      py::arg("model"), py::arg("grid_points") = kDefaultGridPoints);
  m.def(
      "optimal_investment",
      [](const ModelPrimitives& model, std::size_t grid) {
        SolverOptions options;
        options.grid_points = grid;
        return optimal_investment(model, options);
      },
      py::arg("model"), py::arg("grid_points") = kDefaultGridPoints);
  m.def(
      "simulate_two_period",
      [](const ModelPrimitives& model, AgentKind agent) { return simulate_two_period(model, agent); },
      py::arg("model"), py::arg("agent"));
  m.def(
      "simulate_cycles",
      [](const ModelPrimitives& model, double alpha, int horizon) { return simulate_cycles(model, alpha, horizon); },
      py::arg("model"), py::arg("alpha"), py::arg("horizon"));
  m.def("degradation_deterrent_check", &degradation_deterrent_check, py::arg("model"), py::arg("alpha"),
        py::arg("tol") = kPayoffTolerance);
  m.def(
      "rehire_cycle_length",
      [](const ModelPrimitives& model, double alpha) { return rehire_cycle_length(model, alpha); },
      py::arg("model"), py::arg("alpha"));
  m.def("contract_for_effort", &contract_for_effort, py::arg("model"), py::arg("e"));
  m.def("foc_residual", &foc_residual, py::arg("model"), py::arg("e"), py::arg("contract"));
  m.def("principal_optimal_effort", &principal_optimal_effort, py::arg("model"),
        py::arg("grid_points") = kDefaultGridPoints);
  m.def(
      "load_model",
      [](const std::string& text) {
        auto doc = io::parse_model_document(text);
        return py::make_tuple(doc.model, doc.continuous);
      },
      py::arg("text"), "Parse a JSON model document; returns (model or None, continuous model or None).");
  m.def("run_cli", &run_cli, py::arg("args"), "Run the CLI in-process; returns (exit_code, stdout, stderr).");
}
