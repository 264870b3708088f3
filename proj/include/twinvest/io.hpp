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

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "twinvest/continuous.hpp"
#include "twinvest/dynamics.hpp"
#include "twinvest/investment.hpp"
#include "twinvest/model.hpp"
#include "twinvest/oracle.hpp"

namespace twinvest::io {

/// Parsed model file. Any of the three sections may be absent.
struct ModelDocument {
  std::optional<ModelPrimitives> model;
  std::optional<ContinuousEffortModel> continuous;
  std::vector<SweepAxis> sweep;  ///< axes without "points" get points = 0
};

/// Parses the JSON model format. Unknown keys are rejected; every error is a
/// ParseError naming the offending field path (e.g. "pi0.coefficients[1]").
ModelDocument parse_model_document(std::string_view text);
ModelDocument load_model_document(const std::string& path);

nlohmann::ordered_json to_json(const ParametricFamily& family);
nlohmann::ordered_json to_json(const ModelPrimitives& model);
nlohmann::ordered_json to_json(const ContinuousEffortModel& model);
nlohmann::ordered_json to_json(const TimelineTrace& trace);
nlohmann::ordered_json to_json(const oracle::OracleReport& report);

/// Shortest round-trip-safe rendering used everywhere: 12 significant digits, '.' decimal point.
std::string format_number(double value);

void write_regime_csv(std::ostream& os, const RegimeMap& map);
void write_trace_csv(std::ostream& os, const TimelineTrace& trace);
/// Rent, wage, separability and deterrent margin over a uniform v grid.
void write_profile_csv(std::ostream& os, const ModelPrimitives& model, std::size_t grid_points);
void write_oracle_csv(std::ostream& os, const std::vector<oracle::OracleReport>& reports);

}  // namespace twinvest::io
