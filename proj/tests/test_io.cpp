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

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "twinvest/errors.hpp"
#include "twinvest/fixtures.hpp"
#include "twinvest/io.hpp"

using namespace twinvest;

namespace {

const char* kF1 = R"({
  "pi0": {"kind": "affine", "coefficients": [0.2, 0.3]},
  "pi1": {"kind": "affine", "coefficients": [0.7, 0.1]},
  "cost": {"kind": "affine", "coefficients": [0.2, -0.1]},
  "v_max": 1, "s_high": 2, "s_low": 0
})";

std::string parse_error_path(const std::string& text) {
  try {
    io::parse_model_document(text);
  } catch (const ParseError& e) {
    return e.path();
  }
  return "<no error>";
}

std::vector<std::vector<std::string>> split_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::vector<std::string> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(cell);
    if (!line.empty() && line.back() == ',') row.emplace_back();
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

TEST_CASE("model document round-trips") {
  const auto doc = io::parse_model_document(kF1);
  REQUIRE(doc.model.has_value());
  CHECK(*doc.model == fixtures::f1());
  CHECK_FALSE(doc.continuous.has_value());
  const auto again = io::parse_model_document(io::to_json(*doc.model).dump());
  CHECK(*again.model == *doc.model);
}

TEST_CASE("parse errors cite the offending field") {
  CHECK(parse_error_path("{not json") == "$");
  CHECK(parse_error_path("[1, 2]") == "$");
  CHECK(parse_error_path(R"({"pi0": {"kind": "affine", "coefficients": [0.2, "x"]}})") == "pi0.coefficients[1]");
  CHECK(parse_error_path(R"({"pi0": {"kind": "cubic", "coefficients": [1]}})") == "pi0.kind");
  CHECK(parse_error_path(R"({"pi0": {"kind": "affine", "coefficients": [0.2]}})") == "pi0.coefficients");
  CHECK(parse_error_path(R"({"pi0": {"kind": "constant", "coefficients": [0.2]}, "colour": 1})") == "colour");

  std::string missing = kF1;
  missing.replace(missing.find("\"v_max\": 1, "), 12, "");
  CHECK(parse_error_path(missing) == "v_max");

  std::string bad_sweep = kF1;
  bad_sweep.insert(bad_sweep.rfind('}'), R"(, "sweep": [{"parameter": "s_high", "min": 1, "max": "two"}])");
  CHECK(parse_error_path(bad_sweep) == "sweep[0].max");
}

TEST_CASE("continuous section parses") {
  const auto doc = io::parse_model_document(R"({"continuous": {
      "p": {"kind": "power", "coefficients": [0, 1, 0.5]},
      "c0": 0.25, "e_min": 0.04, "e_max": 1, "s_high": 2, "s_low": 0}})");
  REQUIRE(doc.continuous.has_value());
  CHECK(*doc.continuous == fixtures::f5());
}

TEST_CASE("numbers use twelve significant digits") {
  CHECK(io::format_number(0.0) == "0");
  CHECK(io::format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(io::format_number(-0.0) == "0");
  CHECK(io::format_number(1e-20) == "1e-20");
}

TEST_CASE("profile CSV re-parses to the in-memory values") {
  const auto m = fixtures::f2();
  std::ostringstream os;
  io::write_profile_csv(os, m, 101);
  const auto rows = split_csv(os.str());
  REQUIRE(rows.size() == 102);
  CHECK(rows[0] == std::vector<std::string>{"v", "u", "t_high", "separability", "deterrent_margin"});
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double v = std::stod(rows[i][0]);
    CHECK(std::abs(std::stod(rows[i][1]) - agent_rent(m, v)) <= 1e-9);
    CHECK(std::abs(std::stod(rows[i][2]) - optimal_contract(m, v).t_high) <= 1e-9);
    CHECK(std::abs(std::stod(rows[i][4]) - displacement_margin(m, v)) <= 1e-9);
  }
}

TEST_CASE("trace CSV re-parses to the in-memory values") {
  auto trace = simulate_cycles(fixtures::f2(), 0.99, 8);
  sample_outcomes(fixtures::f2(), trace, 1);
  std::ostringstream os;
  io::write_trace_csv(os, trace);
  const auto rows = split_csv(os.str());
  REQUIRE(rows.size() == 9);
  CHECK(rows[0].back() == "realized_outcome");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& r = trace.records[i - 1];
    CHECK(std::stoi(rows[i][0]) == r.period);
    CHECK(rows[i][1] == (r.employed ? "true" : "false"));
    CHECK(std::abs(std::stod(rows[i][6]) - r.twin_capability) <= 1e-9);
    CHECK(std::abs(std::stod(rows[i][8]) - r.principal_expected_payoff) <= 1e-9);
  }
}

TEST_CASE("regime CSV marks invalid cells") {
  const std::vector<SweepAxis> axes{{"s_high", 0.1, 2.0, 4}};
  std::ostringstream os;
  io::write_regime_csv(os, regime_sweep(fixtures::f1(), axes));
  const auto rows = split_csv(os.str());
  REQUIRE(rows.size() == 5);
  CHECK(rows[1][2] == "Invalid");
  CHECK(rows[4][2] == "MaxInvestment");
  CHECK(rows[1].size() == rows[0].size());
}

TEST_CASE("output is deterministic") {
  const std::vector<SweepAxis> axes{{"cost.coefficients[1]", 0.5, 3.0, 6}, {"pi0.coefficients[1]", 0.1, 0.4, 5}};
  std::ostringstream a, b;
  io::write_regime_csv(a, regime_sweep(fixtures::f3(), axes));
  io::write_regime_csv(b, regime_sweep(fixtures::f3(), axes));
  CHECK(a.str() == b.str());
}
