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

#include "twinvest/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include "twinvest/errors.hpp"

namespace twinvest::io {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::string join(const std::string& base, const std::string& key) { return base.empty() ? key : base + "." + key; }

void reject_unknown(const json& obj, const std::string& path, std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, _] : obj.items()) {
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    if (!known) throw ParseError(join(path, key), "unknown key");
  }
}

const json& require(const json& obj, const std::string& path, const std::string& key) {
  if (!obj.contains(key)) throw ParseError(join(path, key), "missing required field");
  return obj.at(key);
}

double number(const json& value, const std::string& path) {
  if (!value.is_number()) throw ParseError(path, "expected a number");
  const double x = value.get<double>();
  if (!std::isfinite(x)) throw ParseError(path, "expected a finite number");
  return x;
}

void require_object(const json& value, const std::string& path) {
  if (!value.is_object()) throw ParseError(path.empty() ? "$" : path, "expected an object");
}

ParametricFamily parse_family(const json& value, const std::string& path) {
  require_object(value, path);
  reject_unknown(value, path, {"kind", "coefficients"});
  const auto& kind_node = require(value, path, "kind");
  if (!kind_node.is_string()) throw ParseError(join(path, "kind"), "expected a string");
  const auto kind = parse_family_kind(kind_node.get<std::string>());
  if (!kind) {
    throw ParseError(join(path, "kind"),
                     "unknown family '" + kind_node.get<std::string>() +
                         "' (expected affine, exponential-decay, power or constant)");
  }
  const auto& coeffs = require(value, path, "coefficients");
  const auto coeff_path = join(path, "coefficients");
  if (!coeffs.is_array()) throw ParseError(coeff_path, "expected an array");
  std::vector<double> values;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    values.push_back(number(coeffs[i], coeff_path + "[" + std::to_string(i) + "]"));
  }
  try {
    return ParametricFamily(*kind, std::move(values));
  } catch (const std::invalid_argument& e) {
    throw ParseError(coeff_path, e.what());
  }
}

ContinuousEffortModel parse_continuous(const json& value, const std::string& path) {
  require_object(value, path);
  reject_unknown(value, path, {"p", "c0", "e_min", "e_max", "s_high", "s_low"});
  return {parse_family(require(value, path, "p"), join(path, "p")),
          number(require(value, path, "c0"), join(path, "c0")),
          number(require(value, path, "e_min"), join(path, "e_min")),
          number(require(value, path, "e_max"), join(path, "e_max")),
          number(require(value, path, "s_high"), join(path, "s_high")),
          number(require(value, path, "s_low"), join(path, "s_low"))};
}

std::vector<SweepAxis> parse_sweep(const json& value) {
  if (!value.is_array()) throw ParseError("sweep", "expected an array of axes");
  if (value.empty() || value.size() > 2) {
    throw ParseError("sweep", "expected one or two varying parameters, got " + std::to_string(value.size()));
  }
  std::vector<SweepAxis> axes;
  for (std::size_t i = 0; i < value.size(); ++i) {
    const auto path = "sweep[" + std::to_string(i) + "]";
    const auto& axis = value[i];
    require_object(axis, path);
    reject_unknown(axis, path, {"parameter", "min", "max", "points"});
    const auto& param = require(axis, path, "parameter");
    if (!param.is_string()) throw ParseError(join(path, "parameter"), "expected a string");
    SweepAxis a{param.get<std::string>(), number(require(axis, path, "min"), join(path, "min")),
                number(require(axis, path, "max"), join(path, "max")), 0};
    if (axis.contains("points")) {
      const auto& pts = axis.at("points");
      if (!pts.is_number_integer() || pts.get<long long>() < 1) {
        throw ParseError(join(path, "points"), "expected a positive integer");
      }
      a.points = pts.get<std::size_t>();
    }
    axes.push_back(std::move(a));
  }
  return axes;
}

}  // namespace

ModelDocument parse_model_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError("$", std::string("invalid JSON: ") + e.what());
  }
  require_object(root, "");
  reject_unknown(root, "", {"pi0", "pi1", "cost", "v_max", "s_high", "s_low", "continuous", "sweep"});

  ModelDocument doc;
  const bool has_model = root.contains("pi0") || root.contains("pi1") || root.contains("cost") ||
                         root.contains("v_max") || root.contains("s_high") || root.contains("s_low");
  if (has_model) {
    doc.model = ModelPrimitives{parse_family(require(root, "", "pi0"), "pi0"),
                                parse_family(require(root, "", "pi1"), "pi1"),
                                parse_family(require(root, "", "cost"), "cost"),
                                number(require(root, "", "v_max"), "v_max"),
                                number(require(root, "", "s_high"), "s_high"),
                                number(require(root, "", "s_low"), "s_low")};
  }
  if (root.contains("continuous")) doc.continuous = parse_continuous(root.at("continuous"), "continuous");
  if (root.contains("sweep")) doc.sweep = parse_sweep(root.at("sweep"));
  if (!doc.model && !doc.continuous) throw ParseError("$", "file defines neither model primitives nor a continuous section");
  return doc;
}

ModelDocument load_model_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("", "cannot read model file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_model_document(buffer.str());
}

ordered_json to_json(const ParametricFamily& family) {
  ordered_json j;
  j["kind"] = std::string(to_string(family.kind()));
  j["coefficients"] = std::vector<double>(family.coefficients().begin(), family.coefficients().end());
  return j;
}

ordered_json to_json(const ModelPrimitives& model) {
  ordered_json j;
  j["pi0"] = to_json(model.pi0);
  j["pi1"] = to_json(model.pi1);
  j["cost"] = to_json(model.cost);
  j["v_max"] = model.v_max;
  j["s_high"] = model.s_high;
  j["s_low"] = model.s_low;
  return j;
}

ordered_json to_json(const ContinuousEffortModel& model) {
  ordered_json j;
  j["p"] = to_json(model.p);
  j["c0"] = model.c0;
  j["e_min"] = model.e_min;
  j["e_max"] = model.e_max;
  j["s_high"] = model.s_high;
  j["s_low"] = model.s_low;
  return j;
}

ordered_json to_json(const TimelineTrace& trace) {
  ordered_json j;
  j["displacement_period"] = trace.displacement_period ? ordered_json(*trace.displacement_period) : ordered_json();
  j["cycle_length"] = trace.cycle_length ? ordered_json(*trace.cycle_length) : ordered_json();
  j["alpha"] = trace.alpha ? ordered_json(*trace.alpha) : ordered_json();
  j["discount"] = trace.discount;
  auto& records = j["records"] = ordered_json::array();
  for (const auto& r : trace.records) {
    ordered_json row;
    row["period"] = r.period;
    row["employed"] = r.employed;
    row["effort"] = std::string(to_string(r.effort));
    row["t_high"] = r.contract.t_high;
    row["t_low"] = r.contract.t_low;
    row["investment"] = r.investment;
    row["twin_capability"] = r.twin_capability;
    row["agent_expected_payoff"] = r.agent_expected_payoff;
    row["principal_expected_payoff"] = r.principal_expected_payoff;
    if (r.realized_high) row["realized_outcome"] = *r.realized_high ? "high" : "low";
    records.push_back(std::move(row));
  }
  return j;
}

ordered_json to_json(const oracle::OracleReport& report) {
  ordered_json j;
  j["target_op"] = report.target_op;
  j["cases"] = report.cases;
  j["max_v_error"] = report.max_v_error;
  j["max_value_error"] = report.max_value_error;
  auto& list = j["disagreements"] = ordered_json::array();
  for (const auto& d : report.disagreements) {
    list.push_back({{"input", d.input}, {"analytic", d.analytic}, {"oracle", d.oracle}});
  }
  return j;
}

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (value == 0.0) return "0";  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

namespace {

std::string format_optional(const std::optional<double>& value) { return value ? format_number(*value) : ""; }

}  // namespace

void write_regime_csv(std::ostream& os, const RegimeMap& map) {
  os << "param1,param2,regime,v_opt,u_opt,deterrent_binding,v_star\n";
  for (const auto& cell : map.cells) {
    os << format_number(cell.param1) << ',' << format_optional(cell.param2) << ',';
    if (!cell.regime) {
      os << "Invalid,,,,\n";
      continue;
    }
    os << to_string(*cell.regime) << ',' << format_number(cell.v_opt) << ',' << format_number(cell.u_opt) << ','
       << (cell.deterrent_binding ? "true" : "false") << ',' << format_optional(cell.v_star) << '\n';
  }
}

void write_trace_csv(std::ostream& os, const TimelineTrace& trace) {
  const bool sampled = !trace.records.empty() && trace.records.front().realized_high.has_value();
  os << "period,employed,effort,t_high,t_low,investment,twin_capability,agent_expected_payoff,"
        "principal_expected_payoff";
  if (sampled) os << ",realized_outcome";
  os << '\n';
  for (const auto& r : trace.records) {
    os << r.period << ',' << (r.employed ? "true" : "false") << ',' << to_string(r.effort) << ','
       << format_number(r.contract.t_high) << ',' << format_number(r.contract.t_low) << ','
       << format_number(r.investment) << ',' << format_number(r.twin_capability) << ','
       << format_number(r.agent_expected_payoff) << ',' << format_number(r.principal_expected_payoff);
    if (sampled) os << ',' << (r.realized_high.value_or(false) ? "high" : "low");
    os << '\n';
  }
}

void write_profile_csv(std::ostream& os, const ModelPrimitives& model, std::size_t grid_points) {
  os << "v,u,t_high,separability,deterrent_margin\n";
  grid_points = std::max<std::size_t>(grid_points, 2);
  for (std::size_t i = 0; i < grid_points; ++i) {
    const double v = grid_point(0.0, model.v_max, grid_points, i);
    const auto s = surpluses(model, v);
    os << format_number(v) << ',' << format_number(s.agent_surplus) << ','
       << format_number(optimal_contract(model, v).t_high) << ',' << format_number(s.outcome_separability) << ','
       << format_number(displacement_margin(model, v)) << '\n';
  }
}

void write_oracle_csv(std::ostream& os, const std::vector<oracle::OracleReport>& reports) {
  os << "target_op,cases,max_v_error,max_value_error,disagreements\n";
  for (const auto& r : reports) {
    os << r.target_op << ',' << r.cases << ',' << format_number(r.max_v_error) << ','
       << format_number(r.max_value_error) << ',' << r.disagreements.size() << '\n';
  }
}

}  // namespace twinvest::io
