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

#include "twinvest/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "twinvest/continuous.hpp"
#include "twinvest/dynamics.hpp"
#include "twinvest/errors.hpp"
#include "twinvest/investment.hpp"
#include "twinvest/io.hpp"
#include "twinvest/oracle.hpp"

namespace twinvest::cli {

namespace {

struct RunConfig {
  std::string model_path;
  std::string agent = "myopic";
  std::optional<double> alpha;
  double delta = 1.0;
  std::optional<int> horizon;
  std::optional<std::size_t> grid;
  std::optional<double> step;
  std::optional<std::uint64_t> seed;
  std::size_t models = 200;
  std::string out;
  std::string format = "csv";
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidModel {
  ValidationReport report;
};

// Routes a CSV either to --out or to `fallback`.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (path.empty()) return;
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
    if (!*file_) throw InputError("cannot write output file '" + path + "'");
    stream_ = file_.get();
  }
  std::ostream& stream() { return *stream_; }
  bool to_file() const { return file_ != nullptr; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

std::string bool_text(bool b) { return b ? "true" : "false"; }

io::ModelDocument load(const RunConfig& cfg) {
  if (cfg.model_path.empty()) throw InputError("--model is required");
  return io::load_model_document(cfg.model_path);
}

const ModelPrimitives& require_valid(const io::ModelDocument& doc) {
  if (!doc.model) throw InputError("model file defines no investment model (pi0, pi1, cost, ...)");
  auto report = validate(*doc.model);
  if (!report) throw InvalidModel{std::move(report)};
  return *doc.model;
}

void print_validation(std::ostream& out, const char* section, const ValidationReport& r) {
  out << section << "=" << (r.ok ? "pass" : "fail") << '\n';
  if (!r.ok) {
    out << "violated=" << r.condition << '\n' << "detail=" << r.detail << '\n';
    if (r.v) out << "at=" << io::format_number(*r.v) << '\n';
  }
  for (const auto& note : r.notes) out << "note=" << note << '\n';
}

int cmd_validate(const RunConfig& cfg, std::ostream& out) {
  const auto doc = load(cfg);
  bool ok = true;
  if (doc.model) {
    const auto r = validate(*doc.model, cfg.grid.value_or(kDefaultGridPoints));
    print_validation(out, "model", r);
    ok = ok && r.ok;
  }
  if (doc.continuous) {
    const auto r = validate(*doc.continuous, cfg.grid.value_or(kDefaultGridPoints));
    print_validation(out, "continuous", r);
    ok = ok && r.ok;
  }
  return ok ? kSuccess : kModelInvalid;
}

int cmd_solve(const RunConfig& cfg, std::ostream& out) {
  const auto doc = load(cfg);
  if (doc.model) {
    const auto& model = require_valid(doc);
    SolverOptions options;
    const auto sol = optimal_investment(model, options);
    if (!sol.feasible) {
      out << "outcome=no-twin\n"
          << "reason=deterrent fails at v=0; the principal prefers the twin at any investment\n";
    } else {
      std::string regime(to_string(sol.regime));
      if (sol.deterrent_binding) regime += "(constrained)";
      const auto s = surpluses(model, sol.v_opt);
      const auto roots = displacement_roots(model, options);
      out << "regime=" << regime << '\n'
          << "v_opt=" << io::format_number(sol.v_opt) << '\n'
          << "v_star=" << (sol.displacement_threshold ? io::format_number(*sol.displacement_threshold) : "none")
          << '\n'
          << "binding=" << bool_text(sol.deterrent_binding) << '\n'
          << "v_unconstrained=" << io::format_number(sol.v_star_unconstrained) << '\n'
          << "u_opt=" << io::format_number(sol.u_at_opt) << '\n'
          << "principal_surplus=" << io::format_number(s.principal_surplus) << '\n'
          << "total_surplus=" << io::format_number(s.total_surplus) << '\n'
          << "t_high=" << io::format_number(optimal_contract(model, sol.v_opt).t_high) << '\n'
          << "separability=" << io::format_number(s.outcome_separability) << '\n'
          << "offer_twin=" << bool_text(should_offer_twin(model, sol.v_opt)) << '\n'
          << "displacement_roots=";
      for (std::size_t i = 0; i < roots.size(); ++i) out << (i ? ";" : "") << io::format_number(roots[i]);
      out << '\n';
    }
    if (!cfg.out.empty()) {
      Sink sink(cfg.out, out);
      io::write_profile_csv(sink.stream(), model, cfg.grid.value_or(kDefaultGridPoints));
    }
  }
  if (doc.continuous) {
    const auto r = validate(*doc.continuous);
    if (!r) throw InvalidModel{r};
    const auto opt = principal_optimal_effort(*doc.continuous, cfg.grid.value_or(kDefaultGridPoints));
    out << "e_opt=" << io::format_number(opt.e_opt) << '\n'
        << "effort_t_high=" << io::format_number(opt.contract.t_high) << '\n'
        << "effort_t_low=" << io::format_number(opt.contract.t_low) << '\n'
        << "effort_principal_surplus=" << io::format_number(opt.principal_surplus) << '\n'
        << "wage_branch="
        << (opt.branch == WageBranch::LimitedLiability ? "limited-liability" : "participation") << '\n';
  }
  return kSuccess;
}

int cmd_simulate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto doc = load(cfg);
  const auto& model = require_valid(doc);
  const auto agent = parse_agent_kind(cfg.agent);
  if (!agent) throw InputError("--agent must be strategic or myopic");
  SimulationOptions options;
  options.discount = cfg.delta;

  TimelineTrace trace;
  if (cfg.alpha) {
    trace = simulate_cycles(model, *cfg.alpha, cfg.horizon.value_or(2), options);
  } else {
    if (cfg.horizon && *cfg.horizon != 2) throw InputError("--horizon needs --alpha (the base game has two periods)");
    trace = simulate_two_period(model, *agent, options);
  }
  if (cfg.seed) sample_outcomes(model, trace, *cfg.seed);

  Sink sink(cfg.out, out);
  if (cfg.format == "json") {
    sink.stream() << io::to_json(trace).dump(2) << '\n';
  } else {
    io::write_trace_csv(sink.stream(), trace);
  }

  std::ostringstream summary;
  summary << "periods=" << trace.records.size();
  if (trace.displacement_period) summary << " displacement_period=" << *trace.displacement_period;
  if (trace.cycle_length) summary << " cycle_length=" << *trace.cycle_length;
  (sink.to_file() ? out : err) << summary.str() << '\n';
  return kSuccess;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  const auto doc = load(cfg);
  if (!doc.model) throw InputError("model file defines no investment model to sweep");
  if (doc.sweep.empty()) throw InputError("model file has no 'sweep' section");
  auto axes = doc.sweep;
  for (auto& axis : axes) {
    if (cfg.grid) {
      axis.points = *cfg.grid;
    } else if (axis.points == 0) {
      axis.points = 50;
    }
  }
  RegimeMap map;
  try {
    map = regime_sweep(*doc.model, axes);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  Sink sink(cfg.out, out);
  io::write_regime_csv(sink.stream(), map);
  return kSuccess;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, const oracle::Solvers& solvers) {
  oracle::CertificationOptions options;
  options.solvers = solvers;
  options.seed = cfg.seed.value_or(0);
  options.random_models = cfg.models;
  if (cfg.step) options.investment_step = *cfg.step;
  const auto reports = oracle::run_certification(options);

  if (!cfg.out.empty()) {
    Sink sink(cfg.out, out);
    io::write_oracle_csv(sink.stream(), reports);
  }
  nlohmann::ordered_json j;
  j["seed"] = options.seed;
  j["random_models"] = options.random_models;
  auto& list = j["reports"] = nlohmann::ordered_json::array();
  bool ok = true;
  for (const auto& r : reports) {
    list.push_back(io::to_json(r));
    ok = ok && r.ok();
  }
  j["status"] = ok ? "agree" : "disagree";
  out << j.dump(2) << '\n';
  return ok ? kSuccess : kOracleDisagreement;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return run(args, out, err, oracle::Solvers{});
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const oracle::Solvers& solvers) {
  CLI::App app{"Strategic AI-twin training investment solver", "twinvest"};
  app.require_subcommand(1);
  RunConfig cfg;

  const auto model_opt = [&](CLI::App* sub) {
    sub->add_option("--model", cfg.model_path, "Model definition (JSON)")->required();
  };
  const auto out_opt = [&](CLI::App* sub, const char* what) { sub->add_option("--out", cfg.out, what); };

  auto* validate_cmd = app.add_subcommand("validate", "Check model invariants");
  model_opt(validate_cmd);
  validate_cmd->add_option("--grid", cfg.grid, "Invariant grid points")->check(CLI::Range(2, 10000000));

  auto* solve_cmd = app.add_subcommand("solve", "Classify the regime and solve for the optimal investment");
  model_opt(solve_cmd);
  solve_cmd->add_option("--grid", cfg.grid, "Profile grid points")->check(CLI::Range(2, 10000000));
  out_opt(solve_cmd, "CSV of rent, wage, separability and deterrent margin over v");

  auto* simulate_cmd = app.add_subcommand("simulate", "Two-period game or rehire cycles under decay");
  model_opt(simulate_cmd);
  simulate_cmd->add_option("--agent", cfg.agent, "strategic | myopic")
      ->check(CLI::IsMember({"strategic", "myopic"}));
  simulate_cmd->add_option("--alpha", cfg.alpha, "Twin time persistence in (0, 1)")
      ->check(CLI::Range(0.0, 1.0) & !CLI::IsMember({0.0, 1.0}));
  simulate_cmd->add_option("--delta", cfg.delta, "Discount factor (recorded only)")
      ->check(CLI::Range(0.0, 1.0) & !CLI::IsMember({0.0}));
  simulate_cmd->add_option("--horizon", cfg.horizon, "Number of periods")->check(CLI::PositiveNumber);
  simulate_cmd->add_option("--seed", cfg.seed, "Sample Bernoulli outcomes with this seed");
  simulate_cmd->add_option("--format", cfg.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  out_opt(simulate_cmd, "Trace output path");

  auto* sweep_cmd = app.add_subcommand("sweep", "Regime map over one or two model parameters");
  model_opt(sweep_cmd);
  sweep_cmd->add_option("--grid", cfg.grid, "Points per axis (overrides the file; default 50)")
      ->check(CLI::Range(1, 100000));
  out_opt(sweep_cmd, "CSV output path");

  auto* verify_cmd = app.add_subcommand("verify", "Certify the solvers against brute-force oracles");
  verify_cmd->add_option("--seed", cfg.seed, "Random model seed");
  verify_cmd->add_option("--models", cfg.models, "Number of random models");
  verify_cmd->add_option("--step", cfg.step, "Investment oracle grid step")->check(CLI::PositiveNumber);
  out_opt(verify_cmd, "CSV summary output path");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (*validate_cmd) return cmd_validate(cfg, out);
    if (*solve_cmd) return cmd_solve(cfg, out);
    if (*simulate_cmd) return cmd_simulate(cfg, out, err);
    if (*sweep_cmd) return cmd_sweep(cfg, out);
    if (*verify_cmd) return cmd_verify(cfg, out, solvers);
  } catch (const InvalidModel& bad) {
    print_validation(out, "model", bad.report);
    return kModelInvalid;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace twinvest::cli
