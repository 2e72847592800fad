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

#ifndef MAPC_EXPERIMENTS_HPP_
#define MAPC_EXPERIMENTS_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mapc/baseline.hpp"
#include "mapc/exact.hpp"
#include "mapc/heuristic.hpp"
#include "mapc/propagation.hpp"
#include "mapc/types.hpp"

namespace mapc {

enum class SweepKind { kStaCount, kApDistance, kPmax };
enum class SolverKind { kExact, kHeuristic, kBaseline };

std::string_view to_string(SweepKind k);
std::string_view to_string(SolverKind s);
SweepKind parse_sweep_kind(std::string_view text);
SolverKind parse_solver_kind(std::string_view text);

// One clustered-placement variant: share of near STAs and Rayleigh divisor.
struct InstanceVariant {
  double near_fraction;
  double shape_divisor;

  friend bool operator==(const InstanceVariant&, const InstanceVariant&) = default;
};

// Near-STA shares 30..60 % paired in ascending order with a = 2..4.
std::vector<InstanceVariant> default_variants();

struct SweepSpec {
  SweepKind kind = SweepKind::kStaCount;
  // STA counts, mean inter-AP distances (m) or per-STA power caps (mW).
  std::vector<double> points;
  // Instance i uses variants[i % variants.size()] and seed
  // derive_seed(seed, i); the same instances are reused at every point.
  int instances_per_point = 20;
  std::vector<SolverKind> solvers{SolverKind::kHeuristic, SolverKind::kBaseline};
  std::uint64_t seed = 1;

  NetworkParams base_params;
  PlacementConfig placement;
  std::vector<InstanceVariant> variants = default_variants();
  int n_aps = 4;
  int n_stas = 16;  // fixed STA count for distance and power sweeps

  double heuristic_p_min_mw = 5.0;
  double heuristic_p_mid_mw = 10.0;
  CapacityMetric capacity_metric = CapacityMetric::kMinSinr;
  int candidate_beam_width = 64;
  SetSizeRule set_size_rule = SetSizeRule::kCeil;
  SizeSearch size_search = SizeSearch::kBestThroughput;
  ExactConfig exact;
  CapMode cap_mode = CapMode::kScale;

  int workers = 1;
  std::filesystem::path output_dir;

  void validate() const;
};

struct SweepRow {
  SweepKind kind = SweepKind::kStaCount;
  double sweep_value = 0.0;
  SolverKind solver = SolverKind::kHeuristic;
  bool skipped = false;
  std::string note;  // reason when skipped
  double mean_total_throughput_bps = 0.0;
  double stddev_total_throughput_bps = 0.0;
  // Per-instance paired gains against the baseline, averaged. Absent for the
  // baseline row itself and when the baseline did not run.
  std::optional<double> mean_gain_vs_baseline_pct;
  std::optional<double> stddev_gain_vs_baseline_pct;
  std::vector<double> per_instance_bps;
  std::vector<std::uint64_t> seeds;
};

// The scenario of instance `index` at one sweep point, exactly as run_sweep
// builds it.
Scenario sweep_instance(const SweepSpec& spec, double point, int index);

// Rows ordered by (point, solver order in spec). Deterministic given the
// spec, whatever spec.workers is. When output_dir is set it must be
// writable (IoError otherwise).
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

// 6 significant digits in scientific form without '+' or exponent padding,
// e.g. 132900000 -> "1.32900e8", 0.0125 -> "1.25000e-2".
std::string format_sci(double value);

std::string format_csv(std::span<const SweepRow> rows);
void emit_csv(std::span<const SweepRow> rows, const std::filesystem::path& path);

enum class PlotMetric { kThroughput, kGain };

// Line chart of the rows: sweep value on x, one polyline and legend entry per
// solver with data. Throws DomainError with fewer than two sweep values.
std::string render_plot_svg(std::span<const SweepRow> rows,
                            PlotMetric metric = PlotMetric::kThroughput);
void emit_plot_svg(std::span<const SweepRow> rows,
                   const std::filesystem::path& path,
                   PlotMetric metric = PlotMetric::kThroughput);

// sweep.csv, sweep_throughput.svg and (when gains exist) sweep_gain.svg in
// spec.output_dir.
void write_sweep_outputs(const SweepSpec& spec, std::span<const SweepRow> rows);

// Exact objective on one instance for increasing per-STA caps, each with the
// power grid {5, 10, ...} mW up to the cap (so every grid contains the
// previous one). Returns the objectives in input order.
std::vector<double> exact_objective_vs_pmax(const Scenario& scenario,
                                            std::span<const double> p_max_mw,
                                            ExactConfig config);

}  // namespace mapc

#endif  // MAPC_EXPERIMENTS_HPP_
