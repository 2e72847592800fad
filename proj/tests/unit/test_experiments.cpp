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

#include <cmath>
#include <filesystem>
#include <regex>
#include <sstream>

#include "doctest.h"
#include "mapc/error.hpp"
#include "mapc/evaluation.hpp"
#include "mapc/experiments.hpp"
#include "mapc/io.hpp"
#include "oracle.hpp"

using namespace mapc;

namespace {

int count_of(const std::string& text, const std::string& needle) {
  int n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

int line_count(const std::string& text) { return count_of(text, "\n"); }

SweepSpec sta_spec(int instances) {
  SweepSpec spec;
  spec.kind = SweepKind::kStaCount;
  for (int u = 8; u <= 24; u += 2) spec.points.push_back(u);
  spec.instances_per_point = instances;
  spec.seed = 17;
  return spec;
}

std::vector<SweepRow> synthetic_rows(int n_points) {
  std::vector<SweepRow> rows;
  for (int i = 0; i < n_points; ++i) {
    for (auto s : {SolverKind::kExact, SolverKind::kHeuristic, SolverKind::kBaseline}) {
      SweepRow r;
      r.sweep_value = 8 + 2 * i;
      r.solver = s;
      r.mean_total_throughput_bps = 1e8 + 1e6 * i + (s == SolverKind::kExact ? 5e6 : 0);
      r.per_instance_bps = {r.mean_total_throughput_bps};
      r.seeds = {1};
      if (s != SolverKind::kBaseline) r.mean_gain_vs_baseline_pct = 10.0 + i;
      rows.push_back(r);
    }
  }
  return rows;
}

}  // namespace

TEST_CASE("scientific number format") {
  CHECK(format_sci(132900000.0) == "1.32900e8");
  CHECK(format_sci(0.0) == "0.00000e0");
  CHECK(format_sci(0.00125) == "1.25000e-3");
  CHECK(format_sci(-42.0) == "-4.20000e1");
  CHECK(format_sci(14.0) == "1.40000e1");
}

TEST_CASE("parsers and spec validation") {
  CHECK(parse_sweep_kind("sta_count") == SweepKind::kStaCount);
  CHECK(parse_sweep_kind("ap_distance") == SweepKind::kApDistance);
  CHECK(parse_sweep_kind("pmax") == SweepKind::kPmax);
  CHECK(parse_solver_kind("exact") == SolverKind::kExact);
  CHECK_THROWS_AS(parse_solver_kind("milp"), DomainError);
  auto spec = sta_spec(1);
  CHECK_NOTHROW(spec.validate());
  spec.points = {10, 8};
  CHECK_THROWS_AS(spec.validate(), DomainError);
  spec = sta_spec(1);
  spec.points = {2};
  CHECK_THROWS_AS(spec.validate(), DomainError);
  spec = sta_spec(0);
  CHECK_THROWS_AS(spec.validate(), DomainError);
  CHECK(default_variants().size() == 5u);
}

TEST_CASE("STA sweep row counts and CSV shape") {
  const auto spec = sta_spec(2);
  const auto rows = run_sweep(spec);
  CHECK(rows.size() == 18u);
  const auto csv = format_csv(rows);
  CHECK(line_count(csv) == 19);
  CHECK(csv.rfind("kind,sweep_value,solver,status,instances,mean_total_throughput_bps,"
                  "stddev_total_throughput_bps,mean_gain_vs_baseline_pct,"
                  "stddev_gain_vs_baseline_pct,per_instance_bps,seeds\n", 0) == 0);
  const std::vector<SweepRow> two(rows.begin(), rows.begin() + 2);
  CHECK(line_count(format_csv(two)) == 3);
}

TEST_CASE("paired per-instance gains") {
  const auto rows = run_sweep(sta_spec(4));
  for (std::size_t i = 0; i + 1 < rows.size(); i += 2) {
    const auto& h = rows[i];
    const auto& b = rows[i + 1];
    REQUIRE(h.solver == SolverKind::kHeuristic);
    REQUIRE(b.solver == SolverKind::kBaseline);
    CHECK(h.sweep_value == b.sweep_value);
    CHECK(h.seeds == b.seeds);
    CHECK_FALSE(b.mean_gain_vs_baseline_pct.has_value());
    REQUIRE(h.mean_gain_vs_baseline_pct.has_value());
    double sum = 0, tsum = 0;
    for (std::size_t k = 0; k < h.per_instance_bps.size(); ++k) {
      sum += throughput_gain(h.per_instance_bps[k], b.per_instance_bps[k]);
      tsum += h.per_instance_bps[k];
    }
    const double n = static_cast<double>(h.per_instance_bps.size());
    CHECK(*h.mean_gain_vs_baseline_pct == doctest::Approx(sum / n).epsilon(1e-12));
    CHECK(h.mean_total_throughput_bps == doctest::Approx(tsum / n).epsilon(1e-12));
  }
}

TEST_CASE("sweep output is deterministic across runs and worker counts") {
  auto spec = sta_spec(3);
  spec.points = {10, 14};
  const auto once = format_csv(run_sweep(spec));
  CHECK(once == format_csv(run_sweep(spec)));
  spec.workers = 3;
  CHECK(once == format_csv(run_sweep(spec)));
  auto single = sta_spec(1);
  single.points = {12};
  CHECK(format_csv(run_sweep(single)) == format_csv(run_sweep(single)));
}

TEST_CASE("instances are shared across sweep points") {
  SweepSpec spec;
  spec.kind = SweepKind::kPmax;
  spec.points = {10, 20, 30};
  spec.n_stas = 20;
  const auto a = sweep_instance(spec, 10, 3);
  const auto b = sweep_instance(spec, 30, 3);
  CHECK(a.sta_positions == b.sta_positions);
  CHECK(a.params.p_max_sta_mw == 10.0);
  CHECK(b.params.p_max_sta_mw == 30.0);
  CHECK(b.params.p_max_ap_mw >= 30.0);

  spec.kind = SweepKind::kApDistance;
  spec.points = {5.87, 17.61};
  spec.n_stas = 16;
  const auto near = sweep_instance(spec, 5.87, 2);
  const auto far = sweep_instance(spec, 17.61, 2);
  CHECK(near.association == far.association);
  CHECK(mean_pairwise_distance(far.ap_positions) == doctest::Approx(17.61));
  CHECK(sweep_instance(spec, 5.87, 2).sta_positions != sweep_instance(spec, 5.87, 3).sta_positions);
}

TEST_CASE("exact rows: solved within limits, skipped beyond") {
  SweepSpec spec;
  spec.kind = SweepKind::kStaCount;
  spec.points = {4, 9};
  spec.n_aps = 2;
  spec.instances_per_point = 2;
  spec.base_params.num_rus = 2;
  spec.solvers = {SolverKind::kExact, SolverKind::kHeuristic, SolverKind::kBaseline};
  const auto rows = run_sweep(spec);
  REQUIRE(rows.size() == 6u);
  CHECK_FALSE(rows[0].skipped);
  CHECK(rows[0].mean_total_throughput_bps >= rows[1].mean_total_throughput_bps);
  CHECK(rows[3].skipped);
  CHECK_FALSE(rows[3].note.empty());
  CHECK(format_csv(rows).find("skipped: ") != std::string::npos);
  // The skipped exact series has one point left and still gets drawn.
  const auto svg = render_plot_svg(rows);
  CHECK(count_of(svg, "<polyline") == 3);
}

TEST_CASE("plot structure") {
  const auto rows = synthetic_rows(9);
  const auto svg = render_plot_svg(rows);
  CHECK(count_of(svg, "<polyline") == 3);
  CHECK(count_of(svg, "<circle") == 27);
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);

  // 5% margin: the first marker sits 0.05 spans right of the y axis.
  const std::regex axis(R"re(<line x1="([0-9.]+)" y1="[0-9.]+" x2="[0-9.]+" y2="[0-9.]+"/>)re");
  std::smatch m;
  REQUIRE(std::regex_search(svg, m, axis));
  const double left = std::stod(m[1]);
  std::vector<double> cx;
  const std::regex circle(R"re(<circle cx="([0-9.]+)")re");
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), circle); it != std::sregex_iterator(); ++it)
    cx.push_back(std::stod((*it)[1]));
  const double lo = *std::min_element(cx.begin(), cx.end());
  const double hi = *std::max_element(cx.begin(), cx.end());
  CHECK((lo - left) / (hi - lo) == doctest::Approx(0.05).epsilon(0.01));

  const auto gain = render_plot_svg(rows, PlotMetric::kGain);
  CHECK(count_of(gain, "<polyline") == 2);
  CHECK(count_of(gain, ">baseline</text>") == 0);

  std::vector<SweepRow> without_exact;
  for (auto r : rows) {
    if (r.solver == SolverKind::kExact) {
      r.skipped = true;
      r.note = "too large";
    }
    without_exact.push_back(r);
  }
  const auto two = render_plot_svg(without_exact);
  CHECK(count_of(two, "<polyline") == 2);
  CHECK(count_of(two, ">exact</text>") == 0);

  CHECK_THROWS_AS(render_plot_svg(synthetic_rows(1)), DomainError);
}

TEST_CASE("written outputs") {
  auto spec = sta_spec(1);
  spec.points = {8, 12};
  spec.output_dir = std::filesystem::temp_directory_path() / "mapc_experiments_test";
  std::filesystem::remove_all(spec.output_dir);
  const auto rows = run_sweep(spec);
  write_sweep_outputs(spec, rows);
  for (const char* f : {"sweep.csv", "sweep_throughput.svg", "sweep_gain.svg"})
    CHECK(std::filesystem::exists(spec.output_dir / f));
  CHECK(read_text_file(spec.output_dir / "sweep.csv") == format_csv(rows));
  CHECK_THROWS_AS(emit_csv({}, spec.output_dir / "x.csv"), DomainError);
  std::filesystem::remove_all(spec.output_dir);
}
