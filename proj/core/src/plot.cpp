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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "mapc/error.hpp"
#include "mapc/experiments.hpp"

namespace mapc {
namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 400.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 150.0;  // room for the legend
constexpr double kTop = 30.0;
constexpr double kBottom = 50.0;

const char* color_of(SolverKind s) {
  switch (s) {
    case SolverKind::kExact: return "#1f77b4";
    case SolverKind::kHeuristic: return "#d62728";
    case SolverKind::kBaseline: return "#2ca02c";
  }
  return "#000000";
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

struct Range {
  double lo;
  double hi;
};

// Data extent widened by 5 % of the span on each side.
Range padded(double lo, double hi) {
  double span = hi - lo;
  if (span <= 0.0) span = std::abs(lo) > 0.0 ? std::abs(lo) : 1.0;
  return {lo - 0.05 * span, hi + 0.05 * span};
}

}  // namespace

std::string render_plot_svg(std::span<const SweepRow> rows, PlotMetric metric) {
  std::map<SolverKind, std::vector<std::pair<double, double>>> series;
  std::vector<SolverKind> order;
  std::set<double> xs;
  for (const SweepRow& r : rows) {
    if (std::find(order.begin(), order.end(), r.solver) == order.end()) {
      order.push_back(r.solver);
    }
    if (r.skipped) continue;
    double y = r.mean_total_throughput_bps / 1e6;
    if (metric == PlotMetric::kGain) {
      if (!r.mean_gain_vs_baseline_pct) continue;
      y = *r.mean_gain_vs_baseline_pct;
    }
    series[r.solver].emplace_back(r.sweep_value, y);
    xs.insert(r.sweep_value);
  }
  if (xs.size() < 2) {
    throw DomainError("a line plot needs at least two sweep values; use the CSV output instead");
  }

  double ylo = 0.0, yhi = 0.0;
  bool first = true;
  for (const auto& [solver, pts] : series) {
    for (const auto& [x, y] : pts) {
      ylo = first ? y : std::min(ylo, y);
      yhi = first ? y : std::max(yhi, y);
      first = false;
    }
  }
  const Range xr = padded(*xs.begin(), *xs.rbegin());
  const Range yr = padded(ylo, yhi);
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - xr.lo) / (xr.hi - xr.lo) * plot_w; };
  auto py = [&](double y) { return kTop + (yr.hi - y) / (yr.hi - yr.lo) * plot_h; };

  const std::string y_title = metric == PlotMetric::kGain
                                  ? "Throughput gain vs. baseline (%)"
                                  : "Total throughput (Mbit/s)";
  std::string x_title = "Sweep value";
  if (!rows.empty()) {
    switch (rows.front().kind) {
      case SweepKind::kStaCount: x_title = "Number of STAs"; break;
      case SweepKind::kApDistance: x_title = "Mean inter-AP distance (m)"; break;
      case SweepKind::kPmax: x_title = "Maximum per-STA power (mW)"; break;
    }
  }

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) +
         "\" height=\"" + num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) + " " +
         num(kHeight) + "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"" + num(kWidth) + "\" height=\"" +
         num(kHeight) + "\" fill=\"white\"/>\n";

  // Axes and ticks.
  svg += "<g class=\"axes\" stroke=\"black\" fill=\"none\">\n";
  svg += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(kTop + plot_h) + "\" x2=\"" +
         num(kLeft + plot_w) + "\" y2=\"" + num(kTop + plot_h) + "\"/>\n";
  svg += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(kTop) + "\" x2=\"" + num(kLeft) +
         "\" y2=\"" + num(kTop + plot_h) + "\"/>\n";
  svg += "</g>\n<g class=\"ticks\" fill=\"black\">\n";
  for (double x : xs) {
    svg += "<line x1=\"" + num(px(x)) + "\" y1=\"" + num(kTop + plot_h) + "\" x2=\"" +
           num(px(x)) + "\" y2=\"" + num(kTop + plot_h + 4) + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + num(px(x)) + "\" y=\"" + num(kTop + plot_h + 16) +
           "\" text-anchor=\"middle\">" + tick_label(x) + "</text>\n";
  }
  constexpr int kYTicks = 5;
  for (int t = 0; t <= kYTicks; ++t) {
    const double y = yr.lo + (yr.hi - yr.lo) * t / kYTicks;
    svg += "<line x1=\"" + num(kLeft - 4) + "\" y1=\"" + num(py(y)) + "\" x2=\"" +
           num(kLeft) + "\" y2=\"" + num(py(y)) + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + num(kLeft - 7) + "\" y=\"" + num(py(y) + 4) +
           "\" text-anchor=\"end\">" + tick_label(y) + "</text>\n";
  }
  svg += "</g>\n";
  svg += "<text x=\"" + num(kLeft + plot_w / 2) + "\" y=\"" + num(kHeight - 10) +
         "\" text-anchor=\"middle\">" + x_title + "</text>\n";
  svg += "<text x=\"15\" y=\"" + num(kTop + plot_h / 2) +
         "\" text-anchor=\"middle\" transform=\"rotate(-90 15 " +
         num(kTop + plot_h / 2) + ")\">" + y_title + "</text>\n";

  // Series and legend; solvers without data are left out of both.
  int legend_row = 0;
  for (SolverKind solver : order) {
    auto it = series.find(solver);
    if (it == series.end() || it->second.empty()) continue;
    const char* color = color_of(solver);
    std::string points;
    for (const auto& [x, y] : it->second) {
      if (!points.empty()) points += ' ';
      points += num(px(x)) + "," + num(py(y));
    }
    svg += "<g class=\"series\" data-solver=\"" + std::string(to_string(solver)) + "\">\n";
    svg += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
           "\" stroke-width=\"2\" points=\"" + points + "\"/>\n";
    for (const auto& [x, y] : it->second) {
      svg += "<circle cx=\"" + num(px(x)) + "\" cy=\"" + num(py(y)) +
             "\" r=\"3\" fill=\"" + color + "\"/>\n";
    }
    svg += "</g>\n";

    const double ly = kTop + 10 + 18.0 * legend_row++;
    const double lx = kLeft + plot_w + 15;
    svg += "<g class=\"legend\">\n";
    svg += "<line x1=\"" + num(lx) + "\" y1=\"" + num(ly) + "\" x2=\"" + num(lx + 20) +
           "\" y2=\"" + num(ly) + "\" stroke=\"" + color + "\" stroke-width=\"2\"/>\n";
    svg += "<text x=\"" + num(lx + 26) + "\" y=\"" + num(ly + 4) + "\">" +
           std::string(to_string(solver)) + "</text>\n";
    svg += "</g>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace mapc
