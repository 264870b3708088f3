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

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "twinvest/cli.hpp"

namespace fs = std::filesystem;
using twinvest::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(TWINVEST_FIXTURE_DIR) + "/" + name; }

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "twinvest_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

fs::path write_file(const std::string& name, const std::string& text) {
  const auto path = scratch(name);
  std::ofstream(path) << text;
  return path;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

std::size_t count_lines(const std::string& text) {
  return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
}

}  // namespace

TEST_CASE("validate exit codes") {
  CHECK(invoke({"validate", "--model", fixture("f1_max_investment.json")}).code == 0);

  std::string low = slurp(fixture("f1_max_investment.json"));
  low.replace(low.find("\"s_high\": 2.0"), 13, "\"s_high\": 0.5");
  const auto bad = invoke({"validate", "--model", write_file("low_quality.json", low).string()});
  CHECK(bad.code == 2);
  CHECK(bad.out.find("violated=baseline_inducement") != std::string::npos);

  const auto malformed = invoke({"validate", "--model", write_file("broken.json", "{\"pi0\": ").string()});
  CHECK(malformed.code == 1);
  CHECK(malformed.err.find("$") != std::string::npos);

  CHECK(invoke({"validate", "--model", scratch("missing.json").string()}).code == 1);
  CHECK(invoke({"validate"}).code == 1);
  CHECK(invoke({"frobnicate"}).code == 1);
}

TEST_CASE("solve reports the regime and optimum") {
  const auto f2 = invoke({"solve", "--model", fixture("f2_displacement.json")});
  CHECK(f2.code == 0);
  CHECK(f2.out.find("regime=MaxInvestment(constrained)\n") != std::string::npos);
  CHECK(f2.out.find("v_opt=0.9034441") != std::string::npos);
  CHECK(f2.out.find("v_star=0.9034441") != std::string::npos);
  CHECK(f2.out.find("binding=true") != std::string::npos);

  const auto f4 = invoke({"solve", "--model", fixture("f4_no_investment.json")});
  CHECK(f4.out.find("regime=NoInvestment\nv_opt=0\n") != std::string::npos);

  const auto profile = scratch("f3_profile.csv");
  const auto f3 = invoke({"solve", "--model", fixture("f3_interior.json"), "--out", profile.string(), "--grid", "11"});
  CHECK(f3.out.find("regime=Interior\nv_opt=0.1223") != std::string::npos);
  CHECK(count_lines(slurp(profile)) == 12);

  const auto f5 = invoke({"solve", "--model", fixture("f5_continuous_effort.json")});
  CHECK(f5.out.find("e_opt=1\n") != std::string::npos);
}

TEST_CASE("solve rejects a model the principal would never contract") {
  std::string low = slurp(fixture("f1_max_investment.json"));
  low.replace(low.find("\"s_high\": 2.0"), 13, "\"s_high\": 0.5");
  CHECK(invoke({"solve", "--model", write_file("low_quality.json", low).string()}).code == 2);
}

TEST_CASE("simulate traces") {
  const auto myopic = invoke({"simulate", "--model", fixture("f2_displacement.json"), "--agent", "myopic"});
  CHECK(myopic.code == 0);
  CHECK(count_lines(myopic.out) == 3);
  CHECK(myopic.err.find("displacement_period=2") != std::string::npos);

  const auto stable = invoke({"simulate", "--model", fixture("f1_max_investment.json"), "--agent", "myopic"});
  CHECK(stable.err.find("displacement_period") == std::string::npos);

  const auto cycles = invoke(
      {"simulate", "--model", fixture("f2_displacement.json"), "--alpha", "0.99", "--horizon", "12"});
  CHECK(cycles.code == 0);
  CHECK(count_lines(cycles.out) == 13);
  CHECK(cycles.err.find("cycle_length=5") != std::string::npos);

  const auto defaulted = invoke({"simulate", "--model", fixture("f2_displacement.json"), "--alpha", "0.5"});
  CHECK(count_lines(defaulted.out) == 3);

  CHECK(invoke({"simulate", "--model", fixture("f2_displacement.json"), "--alpha", "1.5"}).code == 1);
  CHECK(invoke({"simulate", "--model", fixture("f2_displacement.json"), "--agent", "lazy"}).code == 1);

  const auto json = invoke({"simulate", "--model", fixture("f2_displacement.json"), "--format", "json"});
  CHECK(json.out.find("\"records\"") != std::string::npos);
}

TEST_CASE("sweep grid sizes") {
  const auto out = scratch("sweep.csv");
  CHECK(invoke({"sweep", "--model", fixture("f3_regime_sweep.json"), "--out", out.string()}).code == 0);
  CHECK(count_lines(slurp(out)) == 26 * 16 + 1);

  const auto full = invoke({"sweep", "--model", fixture("f3_regime_sweep.json"), "--grid", "50"});
  CHECK(count_lines(full.out) == 2501);
  int distinct = 0;
  for (const char* regime : {",NoInvestment,", ",MaxInvestment,", ",Interior,", ",Indeterminate,"}) {
    distinct += full.out.find(regime) != std::string::npos ? 1 : 0;
  }
  CHECK(distinct >= 2);

  std::string text = slurp(fixture("f3_regime_sweep.json"));
  for (auto pos = text.find("\"points\""); pos != std::string::npos; pos = text.find("\"points\"", pos + 1)) {
    const auto end = text.find_first_of(",}\n", pos);
    text.replace(pos, end - pos, "\"points\": 1");
  }
  const auto single = invoke({"sweep", "--model", write_file("single.json", text).string()});
  CHECK(count_lines(single.out) == 2);

  CHECK(invoke({"sweep", "--model", fixture("f1_max_investment.json")}).code == 1);
}

TEST_CASE("verify with no random models") {
  const auto r = invoke({"verify", "--models", "0"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"status\": \"agree\"") != std::string::npos);
}

TEST_CASE("verify fails on an injected solver fault") {
  twinvest::oracle::Solvers broken;
  broken.contract = [](const twinvest::ModelPrimitives& m, double v) {
    auto c = twinvest::optimal_contract(m, v);
    c.t_high += 0.01;
    return c;
  };
  std::ostringstream out, err;
  CHECK(run({"verify", "--models", "0"}, out, err, broken) == 3);
}
