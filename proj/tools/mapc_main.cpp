// Copyright 2026 The mapc-csr Authors.
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

// mapc: generate scenarios, run one solver, run sweeps, check allocations.
//
// Exit codes: 0 ok, 1 infeasible or invalid input, 2 exact-solver size
// refusal, 3 I/O failure.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "mapc/baseline.hpp"
#include "mapc/error.hpp"
#include "mapc/evaluation.hpp"
#include "mapc/exact.hpp"
#include "mapc/experiments.hpp"
#include "mapc/feasibility.hpp"
#include "mapc/heuristic.hpp"
#include "mapc/io.hpp"
#include "mapc/propagation.hpp"

namespace {

enum ExitCode : int {
  kOk = 0,
  kInfeasible = 1,
  kSizeRefusal = 2,
  kIo = 3,
};

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text << '\n';
  } else {
    mapc::write_text_file(out_path, text + "\n");
  }
}

struct GenerateOptions {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<int> n_aps;
  std::optional<int> n_stas;
  std::string out;
  std::string csv;
};

int run_generate(const GenerateOptions& o) {
  mapc::NetworkParams params;
  mapc::PlacementConfig placement;
  int n_aps = 4;
  int n_stas = 16;
  if (!o.config.empty()) {
    const auto doc = nlohmann::json::parse(mapc::read_text_file(o.config), nullptr, false);
    if (doc.is_discarded()) throw mapc::DomainError("invalid JSON in " + o.config);
    if (doc.contains("params")) params = mapc::network_params_from_json(doc["params"].dump());
    if (doc.contains("placement")) {
      placement = mapc::placement_config_from_json(doc["placement"].dump());
    }
    if (doc.contains("n_aps")) n_aps = doc["n_aps"].get<int>();
    if (doc.contains("n_stas")) n_stas = doc["n_stas"].get<int>();
  }
  if (o.seed) placement.seed = *o.seed;
  if (o.n_aps) n_aps = *o.n_aps;
  if (o.n_stas) n_stas = *o.n_stas;

  const mapc::Scenario scenario = mapc::generate_scenario(n_aps, n_stas, params, placement);
  emit(mapc::scenario_to_json(scenario), o.out);
  if (!o.csv.empty()) mapc::write_text_file(o.csv, mapc::positions_csv(scenario));
  return kOk;
}

struct SolveOptions {
  std::string scenario;
  std::string solver = "heuristic";
  std::uint64_t seed = 1;
  std::string metric = "min-sinr";
  std::string set_size = "ceil";
  std::string size_search = "best-throughput";
  std::string cap_mode = "scale";
  std::string out;
  bool trace = false;
  bool refine = false;
  double time_budget_s = 0.0;
  int workers = 1;
};

int run_solve(const SolveOptions& o) {
  const mapc::Scenario scenario = mapc::scenario_from_json(mapc::read_text_file(o.scenario));
  const mapc::GainMatrix gains = mapc::build_gain_matrix(scenario);

  mapc::SolveReport report;
  report.solver = o.solver;
  const mapc::SolverKind kind = mapc::parse_solver_kind(o.solver);
  switch (kind) {
    case mapc::SolverKind::kHeuristic: {
      auto cfg = mapc::HeuristicConfig::from_params(scenario.params);
      cfg.capacity_metric = mapc::parse_capacity_metric(o.metric);
      cfg.set_size_rule = mapc::parse_set_size_rule(o.set_size);
      cfg.size_search = mapc::parse_size_search(o.size_search);
      auto result = mapc::run_heuristic_detailed(scenario, gains, cfg);
      report.allocation = std::move(result.allocation);
      if (o.trace) report.trace = std::move(result.trace);
      break;
    }
    case mapc::SolverKind::kBaseline:
      report.allocation = mapc::non_coordinated_allocate(
          scenario, {o.seed, mapc::parse_cap_mode(o.cap_mode)});
      break;
    case mapc::SolverKind::kExact: {
      mapc::ExactConfig cfg;
      cfg.refine_powers = o.refine;
      cfg.time_budget_s = o.time_budget_s;
      cfg.workers = o.workers;
      auto solution = mapc::solve_exact(scenario, gains, cfg);
      report.allocation = solution.allocation;
      report.exact = std::move(solution);
      break;
    }
  }
  report.evaluation = mapc::evaluate(scenario, gains, report.allocation);
  report.feasibility = mapc::check_feasibility(scenario, report.allocation);
  emit(mapc::solve_report_to_json(report), o.out);
  return kOk;
}

struct SweepOptions {
  std::string config;
  std::string out;
  std::optional<std::uint64_t> seed;
  std::optional<int> workers;
  std::string metric;
};

int run_sweep_cmd(const SweepOptions& o) {
  mapc::SweepSpec spec = mapc::sweep_spec_from_json(mapc::read_text_file(o.config));
  if (!o.out.empty()) spec.output_dir = o.out;
  if (o.seed) spec.seed = *o.seed;
  if (o.workers) spec.workers = *o.workers;
  if (!o.metric.empty()) spec.capacity_metric = mapc::parse_capacity_metric(o.metric);
  if (spec.output_dir.empty()) spec.output_dir = "sweep_out";

  const auto rows = mapc::run_sweep(spec);
  mapc::write_sweep_outputs(spec, rows);
  for (const auto& r : rows) {
    if (r.skipped) std::cerr << "warning: " << r.note << " at " << r.sweep_value << '\n';
  }
  std::cout << "wrote " << (spec.output_dir / "sweep.csv").string() << '\n';
  return kOk;
}

struct CheckOptions {
  std::string scenario;
  std::string allocation;
  std::string out;
};

int run_check(const CheckOptions& o) {
  const mapc::Scenario scenario = mapc::scenario_from_json(mapc::read_text_file(o.scenario));
  const mapc::Allocation alloc = mapc::allocation_from_json(mapc::read_text_file(o.allocation));
  const mapc::FeasibilityReport report = mapc::check_feasibility(scenario, alloc);
  emit(mapc::feasibility_to_json(report), o.out);
  return report.feasible() ? kOk : kInfeasible;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Joint RU allocation and coordinated spatial reuse for multi-AP WiFi"};
  app.require_subcommand(1);

  GenerateOptions gen;
  auto* generate = app.add_subcommand("generate", "Generate a random scenario as JSON");
  generate->add_option("--config", gen.config, "JSON with params, placement, n_aps, n_stas");
  generate->add_option("--seed", gen.seed, "Placement seed");
  generate->add_option("--n-aps", gen.n_aps, "Number of APs");
  generate->add_option("--n-stas", gen.n_stas, "Number of STAs");
  generate->add_option("--out", gen.out, "Scenario JSON path (default stdout)");
  generate->add_option("--csv", gen.csv, "Also write AP/STA positions as CSV");

  SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "Run one solver on a scenario, print a JSON report");
  solve_cmd->add_option("--scenario", solve.scenario, "Scenario JSON")->required();
  solve_cmd->add_option("--solver", solve.solver, "exact | heuristic | baseline")
      ->check(CLI::IsMember({"exact", "heuristic", "baseline"}));
  solve_cmd->add_option("--seed", solve.seed, "Baseline RNG seed");
  solve_cmd->add_option("--metric", solve.metric, "Heuristic capacity metric")
      ->check(CLI::IsMember({"min-sinr", "sum-rate"}));
  solve_cmd->add_option("--set-size", solve.set_size, "Heuristic initial set size rule")
      ->check(CLI::IsMember({"floor", "ceil"}));
  solve_cmd->add_option("--size-search", solve.size_search, "Heuristic per-RU size selection")
      ->check(CLI::IsMember({"first-feasible", "best-throughput"}));
  solve_cmd->add_option("--cap-mode", solve.cap_mode, "Baseline AP-budget handling")
      ->check(CLI::IsMember({"scale", "truncate"}));
  solve_cmd->add_option("--out", solve.out, "Report path (default stdout)");
  solve_cmd->add_flag("--trace", solve.trace, "Include the heuristic's per-RU trace");
  solve_cmd->add_flag("--refine", solve.refine, "Exact: polish powers continuously");
  solve_cmd->add_option("--time-budget", solve.time_budget_s, "Exact: wall-clock cap (s)");
  solve_cmd->add_option("--workers", solve.workers, "Exact: worker threads");

  SweepOptions sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Run a parameter sweep, write CSV and SVG");
  sweep_cmd->add_option("--config", sweep.config, "Sweep JSON")->required();
  sweep_cmd->add_option("--out", sweep.out, "Output directory");
  sweep_cmd->add_option("--seed", sweep.seed, "Master seed");
  sweep_cmd->add_option("--workers", sweep.workers, "Parallel instances");
  sweep_cmd->add_option("--metric", sweep.metric, "Heuristic capacity metric")
      ->check(CLI::IsMember({"min-sinr", "sum-rate"}));

  CheckOptions check;
  auto* check_cmd = app.add_subcommand("check", "Feasibility report for an allocation");
  check_cmd->add_option("--scenario", check.scenario, "Scenario JSON")->required();
  check_cmd->add_option("--allocation", check.allocation, "Allocation JSON")->required();
  check_cmd->add_option("--out", check.out, "Report path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInfeasible;
  }

  try {
    if (*generate) return run_generate(gen);
    if (*solve_cmd) return run_solve(solve);
    if (*sweep_cmd) return run_sweep_cmd(sweep);
    if (*check_cmd) return run_check(check);
  } catch (const mapc::SizeLimitError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kSizeRefusal;
  } catch (const mapc::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const mapc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInfeasible;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInfeasible;
  }
  return kOk;
}
