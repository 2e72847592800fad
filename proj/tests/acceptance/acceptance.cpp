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

// Acceptance suite. Prints one PASS/FAIL line per criterion followed by the
// measured values, and exits non-zero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mapc/evaluation.hpp"
#include "mapc/exact.hpp"
#include "mapc/experiments.hpp"
#include "mapc/feasibility.hpp"
#include "mapc/heuristic.hpp"
#include "mapc/io.hpp"
#include "mapc/propagation.hpp"
#include "oracle.hpp"

namespace fs = std::filesystem;
using namespace mapc;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

const std::vector<double> kGrid{5.0, 10.0, 15.0};
constexpr std::uint64_t kSeed = 20240601;

struct SmallInstance {
  Scenario scenario;
  GainMatrix gains;
};

std::vector<SmallInstance> oracle_instances() {
  std::vector<SmallInstance> out;
  const auto variants = default_variants();
  for (int i = 0; i < 50; ++i) {
    auto params = NetworkParams::reference();
    params.num_rus = 2 + (i / 6) % 2;
    PlacementConfig pc;
    pc.seed = derive_seed(kSeed, static_cast<std::uint64_t>(i));
    pc.near_fraction = variants[i % variants.size()].near_fraction;
    pc.rayleigh_shape_divisor = variants[i % variants.size()].shape_divisor;
    auto s = generate_scenario(2 + i % 2, 4 + (i / 2) % 3, params, pc);
    auto g = build_gain_matrix(s);
    out.push_back({std::move(s), std::move(g)});
  }
  return out;
}

// Criteria 1 and 3 share the same instances and exact solutions.
struct OracleRun {
  Outcome optimality;
  Outcome heuristic_ratio;
};

OracleRun run_oracle() {
  OracleRun r;
  const auto instances = oracle_instances();
  int mismatches = 0, dominated = 0, infeasible = 0;
  double worst_time = 0.0, ratio_sum = 0.0, worst_ratio = 1.0;
  Rng rng(derive_seed(kSeed, 0xACCE));
  for (const auto& [s, g] : instances) {
    const auto t0 = Clock::now();
    const auto sol = solve_exact(s, g, {});
    worst_time = std::max(worst_time, seconds_since(t0));
    const double exact = sol.evaluation.total_throughput_bps;
    const auto ref = testing::brute_force_optimum(s, g, kGrid);
    if (exact != ref.best_bps) ++mismatches;
    if (!check_feasibility(s, sol.allocation).feasible()) ++infeasible;
    for (int k = 0; k < 1000; ++k) {
      const auto a = testing::random_feasible_allocation(s, kGrid, rng);
      if (evaluate(s, g, a).total_throughput_bps > exact) {
        ++dominated;
        break;
      }
    }
    const double h =
        evaluate(s, g, run_heuristic(s, g, HeuristicConfig::from_params(s.params)))
            .total_throughput_bps;
    const double ratio = h / exact;
    ratio_sum += ratio;
    worst_ratio = std::min(worst_ratio, ratio);
  }
  r.optimality.pass = mismatches == 0 && dominated == 0 && infeasible == 0 && worst_time < 60.0;
  r.optimality.detail = std::to_string(instances.size()) + " instances, " +
                        std::to_string(mismatches) + " brute-force mismatches, " +
                        std::to_string(dominated) + " beaten by random allocations, " +
                        std::to_string(infeasible) + " infeasible, slowest solve " +
                        fmt("%.3f s", worst_time);
  const double mean_ratio = ratio_sum / static_cast<double>(instances.size());
  r.heuristic_ratio.pass = mean_ratio >= 0.80;
  r.heuristic_ratio.detail = "mean heuristic/exact " + fmt("%.4f", mean_ratio) +
                             ", worst " + fmt("%.4f", worst_ratio) + " (need >= 0.80)";
  return r;
}

Outcome heuristic_feasibility() {
  int violations = 0, below = 0, assigned = 0;
  for (int i = 0; i < 200; ++i) {
    PlacementConfig pc;
    pc.seed = derive_seed(kSeed + 1, static_cast<std::uint64_t>(i));
    const int n_stas = 8 + i % 17;
    const auto s = generate_scenario(4, n_stas, NetworkParams::reference(), pc);
    const auto g = build_gain_matrix(s);
    const auto cfg = HeuristicConfig::from_params(s.params);
    const auto a = run_heuristic(s, g, cfg);
    violations += static_cast<int>(check_feasibility(s, a).violations.size());
    const auto ev = evaluate(s, g, a);
    for (int u = 0; u < n_stas; ++u) {
      if (!a.is_assigned(u)) continue;
      ++assigned;
      if (ev.sinr_of_sta[u] < s.params.sinr_threshold_linear - 1e-9) ++below;
    }
  }
  return {violations == 0 && below == 0,
          "200 scenarios, " + std::to_string(violations) + " violations, " +
              std::to_string(below) + " of " + std::to_string(assigned) +
              " served STAs below the SINR threshold"};
}

const SweepRow* find_row(const std::vector<SweepRow>& rows, double x, SolverKind s) {
  for (const auto& r : rows)
    if (r.solver == s && std::abs(r.sweep_value - x) < 1e-9) return &r;
  return nullptr;
}

SweepSpec fig3_spec() {
  SweepSpec spec;
  spec.kind = SweepKind::kStaCount;
  for (int u = 8; u <= 24; u += 2) spec.points.push_back(u);
  spec.instances_per_point = 20;
  spec.seed = kSeed;
  return spec;
}

Outcome gain_curve(const std::vector<SweepRow>& rows, double secs) {
  const double g14 = *find_row(rows, 14, SolverKind::kHeuristic)->mean_gain_vs_baseline_pct;
  const double g24 = *find_row(rows, 24, SolverKind::kHeuristic)->mean_gain_vs_baseline_pct;
  auto mbps = [&](double x, SolverKind s) {
    return fmt("%.3f", find_row(rows, x, s)->mean_total_throughput_bps / 1e6);
  };
  return {g14 >= 30.0 && g24 < g14 && secs < 120.0,
          "gain at 14 STAs " + fmt("%.2f%%", g14) + ", at 24 STAs " + fmt("%.2f%%", g24) +
              " (heuristic Mbit/s " + mbps(14, SolverKind::kHeuristic) + " -> " +
              mbps(24, SolverKind::kHeuristic) + ", baseline " +
              mbps(14, SolverKind::kBaseline) + " -> " + mbps(24, SolverKind::kBaseline) +
              "), sweep " + fmt("%.2f s", secs)};
}

Outcome distance_trend() {
  SweepSpec spec;
  spec.kind = SweepKind::kApDistance;
  spec.points = {5.87, 11.74, 17.61};
  spec.n_stas = 16;
  spec.instances_per_point = 20;
  spec.seed = kSeed;
  const auto rows = run_sweep(spec);
  std::vector<double> thr, gain;
  for (double d : spec.points) {
    const auto* h = find_row(rows, d, SolverKind::kHeuristic);
    thr.push_back(h->mean_total_throughput_bps);
    gain.push_back(*h->mean_gain_vs_baseline_pct);
  }
  const bool nondecreasing = thr[1] >= thr[0] && thr[2] >= thr[1];
  return {gain.front() > gain.back() && nondecreasing,
          "gains " + fmt("%.2f%%", gain[0]) + " / " + fmt("%.2f%%", gain[1]) + " / " +
              fmt("%.2f%%", gain[2]) + ", heuristic Mbit/s " + fmt("%.3f", thr[0] / 1e6) +
              " / " + fmt("%.3f", thr[1] / 1e6) + " / " + fmt("%.3f", thr[2] / 1e6)};
}

Outcome power_trend() {
  SweepSpec spec;
  spec.kind = SweepKind::kPmax;
  spec.points = {10, 15, 20, 25, 30};
  spec.n_stas = 20;
  spec.instances_per_point = 20;
  spec.seed = kSeed;
  const auto rows = run_sweep(spec);
  std::vector<double> thr;
  std::string listing;
  for (double p : spec.points) {
    thr.push_back(find_row(rows, p, SolverKind::kHeuristic)->mean_total_throughput_bps);
    listing += (listing.empty() ? "" : " / ") + fmt("%.3f", thr.back() / 1e6);
  }
  const double rho = testing::spearman(spec.points, thr);
  const double g10 = *find_row(rows, 10, SolverKind::kHeuristic)->mean_gain_vs_baseline_pct;
  const double g30 = *find_row(rows, 30, SolverKind::kHeuristic)->mean_gain_vs_baseline_pct;
  return {rho > 0.0 && g30 >= g10,
          "Spearman rho " + fmt("%.3f", rho) + ", gain at 10 mW " + fmt("%.2f%%", g10) +
              ", at 30 mW " + fmt("%.2f%%", g30) + ", heuristic Mbit/s " + listing};
}

Outcome propagation_values() {
  const auto p = NetworkParams::reference();
  const double pl = path_loss_db(1.0, p);
  const double g = channel_gain(10.0, p);
  return {std::abs(pl - 40.05) <= 0.02 && std::abs(g / 3.13e-7 - 1.0) <= 0.01,
          "PL(1 m) = " + fmt("%.4f dB", pl) + ", gain(10 m) = " + fmt("%.4e", g)};
}

std::vector<std::string> output_bytes(const fs::path& dir) {
  std::vector<std::string> out;
  for (const char* f : {"sweep.csv", "sweep_throughput.svg", "sweep_gain.svg"})
    out.push_back(read_text_file(dir / f));
  return out;
}

Outcome determinism(const fs::path& base) {
  auto spec = fig3_spec();
  std::vector<std::vector<std::string>> runs;
  int idx = 0;
  for (int workers : {1, 1, 4}) {
    spec.workers = workers;
    spec.output_dir = base / ("run" + std::to_string(idx++));
    write_sweep_outputs(spec, run_sweep(spec));
    runs.push_back(output_bytes(spec.output_dir));
  }
  const bool same = runs[0] == runs[1] && runs[0] == runs[2];
  return {same, std::string(same ? "identical" : "differing") +
                    " CSV and SVG bytes over two 1-worker runs and one 4-worker run"};
}

Outcome performance(double sweep_secs) {
  PlacementConfig pc;
  pc.seed = kSeed;
  const auto s = generate_scenario(4, 24, NetworkParams::reference(), pc);
  const auto g = build_gain_matrix(s);
  const auto t0 = Clock::now();
  run_heuristic(s, g, HeuristicConfig::from_params(s.params));
  const double h = seconds_since(t0);
  return {h < 1.0 && sweep_secs < 300.0,
          "heuristic at 24 STAs " + fmt("%.4f s", h) + ", STA-count sweep " +
              fmt("%.2f s", sweep_secs)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance suite"};
  std::string out_dir = (fs::temp_directory_path() / "mapc_acceptance").string();
  app.add_option("--out-dir", out_dir, "Scratch directory for sweep outputs");
  CLI11_PARSE(app, argc, argv);

  std::vector<Outcome> results(9);
  const auto oracle = run_oracle();
  results[0] = oracle.optimality;
  results[1] = heuristic_feasibility();
  results[2] = oracle.heuristic_ratio;

  const auto t0 = Clock::now();
  const auto fig3 = run_sweep(fig3_spec());
  const double fig3_secs = seconds_since(t0);
  results[3] = gain_curve(fig3, fig3_secs);
  results[4] = distance_trend();
  results[5] = power_trend();
  results[6] = propagation_values();
  fs::remove_all(out_dir);
  results[7] = determinism(out_dir);
  results[8] = performance(fig3_secs);

  int failed = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    std::printf("criterion %zu: %s: %s\n", i + 1, results[i].pass ? "PASS" : "FAIL",
                results[i].detail.c_str());
    failed += results[i].pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(results.size()) - failed,
              results.size());
  return failed == 0 ? 0 : 1;
}
