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

#include "mapc/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include "mapc/error.hpp"
#include "mapc/evaluation.hpp"
#include "mapc/rng.hpp"

namespace mapc {

std::string_view to_string(SweepKind k) {
  switch (k) {
    case SweepKind::kStaCount: return "sta_count";
    case SweepKind::kApDistance: return "ap_distance";
    case SweepKind::kPmax: return "pmax";
  }
  return "unknown";
}

std::string_view to_string(SolverKind s) {
  switch (s) {
    case SolverKind::kExact: return "exact";
    case SolverKind::kHeuristic: return "heuristic";
    case SolverKind::kBaseline: return "baseline";
  }
  return "unknown";
}

SweepKind parse_sweep_kind(std::string_view text) {
  if (text == "sta_count") return SweepKind::kStaCount;
  if (text == "ap_distance") return SweepKind::kApDistance;
  if (text == "pmax") return SweepKind::kPmax;
  throw DomainError("unknown sweep kind '" + std::string(text) +
                    "' (expected sta_count, ap_distance or pmax)");
}

SolverKind parse_solver_kind(std::string_view text) {
  if (text == "exact") return SolverKind::kExact;
  if (text == "heuristic") return SolverKind::kHeuristic;
  if (text == "baseline") return SolverKind::kBaseline;
  throw DomainError("unknown solver '" + std::string(text) +
                    "' (expected exact, heuristic or baseline)");
}

std::vector<InstanceVariant> default_variants() {
  return {{0.30, 2.0}, {0.375, 2.5}, {0.45, 3.0}, {0.525, 3.5}, {0.60, 4.0}};
}

void SweepSpec::validate() const {
  if (points.empty()) throw DomainError("sweep has no points");
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (!(points[i] > points[i - 1])) {
      throw DomainError("sweep points must be strictly increasing");
    }
  }
  if (instances_per_point < 1) {
    throw DomainError("instances_per_point must be at least 1");
  }
  if (solvers.empty()) throw DomainError("sweep runs no solver");
  if (variants.empty()) throw DomainError("sweep has no instance variants");
  if (workers < 1) throw DomainError("workers must be at least 1");
  if (n_aps < 1) throw DomainError("n_aps must be at least 1");
  if (kind == SweepKind::kStaCount) {
    for (double p : points) {
      if (p != std::floor(p) || p < n_aps) {
        throw DomainError("STA-count points must be integers >= n_aps");
      }
    }
  } else if (n_stas < n_aps) {
    throw DomainError("n_stas must be >= n_aps");
  }
  base_params.validate();
  placement.validate();
}

namespace {

NetworkParams point_params(const SweepSpec& spec, double point) {
  NetworkParams params = spec.base_params;
  if (spec.kind == SweepKind::kPmax) {
    params.p_max_sta_mw = point;
    params.p_max_ap_mw = std::max(params.p_max_ap_mw, point);
  }
  return params;
}

int point_stas(const SweepSpec& spec, double point) {
  return spec.kind == SweepKind::kStaCount ? static_cast<int>(point) : spec.n_stas;
}

std::uint64_t instance_seed(const SweepSpec& spec, int index) {
  return derive_seed(spec.seed, static_cast<std::uint64_t>(index));
}

ExactConfig point_exact_config(const SweepSpec& spec, const NetworkParams& params) {
  ExactConfig cfg = spec.exact;
  cfg.workers = 1;
  std::vector<double> grid;
  for (double p : cfg.power_grid_mw) {
    if (p < params.p_max_sta_mw) grid.push_back(p);
  }
  if (grid.empty() || grid.back() != params.p_max_sta_mw) {
    grid.push_back(params.p_max_sta_mw);
  }
  cfg.power_grid_mw = std::move(grid);
  return cfg;
}

std::optional<std::string> exact_refusal(const SweepSpec& spec, double point,
                                         const NetworkParams& params) {
  const ExactConfig cfg = point_exact_config(spec, params);
  const auto& l = cfg.limits;
  const int stas = point_stas(spec, point);
  std::ostringstream why;
  if (stas > l.max_stas) why << stas << " STAs > limit " << l.max_stas << "; ";
  if (params.num_rus > l.max_rus) why << params.num_rus << " RUs > limit " << l.max_rus << "; ";
  if (spec.n_aps > l.max_aps) why << spec.n_aps << " APs > limit " << l.max_aps << "; ";
  if (static_cast<int>(cfg.power_grid_mw.size()) > l.max_grid_levels) {
    why << cfg.power_grid_mw.size() << " power levels > limit " << l.max_grid_levels << "; ";
  }
  std::string s = why.str();
  if (s.empty()) return std::nullopt;
  s.resize(s.size() - 2);
  return "exact solver skipped: " + s;
}

std::pair<double, double> mean_stddev(std::span<const double> v) {
  if (v.empty()) return {0.0, 0.0};
  double sum = 0.0;
  for (double x : v) sum += x;
  const double mean = sum / static_cast<double>(v.size());
  if (v.size() < 2) return {mean, 0.0};
  double ss = 0.0;
  for (double x : v) ss += (x - mean) * (x - mean);
  return {mean, std::sqrt(ss / static_cast<double>(v.size() - 1))};
}

void ensure_writable_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    throw IoError("cannot create output directory '" + dir.string() +
                  "': " + ec.message());
  }
  const auto probe = dir / ".mapc_write_probe";
  {
    std::ofstream out(probe);
    if (!out) {
      throw IoError("output directory '" + dir.string() + "' is not writable");
    }
  }
  std::filesystem::remove(probe, ec);
}

}  // namespace

Scenario sweep_instance(const SweepSpec& spec, double point, int index) {
  const InstanceVariant& v =
      spec.variants[static_cast<std::size_t>(index) % spec.variants.size()];
  PlacementConfig placement = spec.placement;
  placement.near_fraction = v.near_fraction;
  placement.rayleigh_shape_divisor = v.shape_divisor;
  placement.seed = instance_seed(spec, index);

  const NetworkParams params = point_params(spec, point);
  Scenario s = generate_scenario(spec.n_aps, point_stas(spec, point), params, placement);
  if (spec.kind == SweepKind::kApDistance) s = rescale_ap_layout(s, point);
  return s;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  spec.validate();
  if (!spec.output_dir.empty()) ensure_writable_dir(spec.output_dir);

  const auto n_inst = static_cast<std::size_t>(spec.instances_per_point);
  const bool has_baseline =
      std::find(spec.solvers.begin(), spec.solvers.end(), SolverKind::kBaseline) !=
      spec.solvers.end();

  std::vector<SweepRow> rows;
  for (double point : spec.points) {
    const NetworkParams params = point_params(spec, point);
    std::map<SolverKind, std::optional<std::string>> refusal;
    for (SolverKind s : spec.solvers) {
      refusal[s] = s == SolverKind::kExact ? exact_refusal(spec, point, params)
                                           : std::nullopt;
    }

    // totals[solver index][instance]
    std::vector<std::vector<double>> totals(spec.solvers.size(),
                                            std::vector<double>(n_inst, 0.0));
    auto run_instance = [&](std::size_t i) {
      const Scenario scenario = sweep_instance(spec, point, static_cast<int>(i));
      const GainMatrix gains = build_gain_matrix(scenario);
      for (std::size_t k = 0; k < spec.solvers.size(); ++k) {
        const SolverKind solver = spec.solvers[k];
        if (refusal[solver]) continue;
        Allocation alloc;
        switch (solver) {
          case SolverKind::kHeuristic: {
            HeuristicConfig cfg = HeuristicConfig::from_params(
                params, spec.heuristic_p_min_mw, spec.heuristic_p_mid_mw);
            cfg.capacity_metric = spec.capacity_metric;
            cfg.candidate_beam_width = spec.candidate_beam_width;
            cfg.set_size_rule = spec.set_size_rule;
            cfg.size_search = spec.size_search;
            alloc = run_heuristic(scenario, gains, cfg);
            break;
          }
          case SolverKind::kBaseline:
            alloc = non_coordinated_allocate(
                scenario, {derive_seed(instance_seed(spec, static_cast<int>(i)), 0xBA5E),
                           spec.cap_mode});
            break;
          case SolverKind::kExact:
            alloc = solve_exact(scenario, gains, point_exact_config(spec, params)).allocation;
            break;
        }
        totals[k][i] = evaluate(scenario, gains, alloc).total_throughput_bps;
      }
    };

    const auto workers = std::min<std::size_t>(static_cast<std::size_t>(spec.workers), n_inst);
    if (workers <= 1) {
      for (std::size_t i = 0; i < n_inst; ++i) run_instance(i);
    } else {
      std::vector<std::thread> threads;
      std::vector<std::exception_ptr> errors(workers);
      for (std::size_t w = 0; w < workers; ++w) {
        threads.emplace_back([&, w] {
          try {
            for (std::size_t i = w; i < n_inst; i += workers) run_instance(i);
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
      for (auto& t : threads) t.join();
      for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
      }
    }

    std::vector<std::uint64_t> seeds(n_inst);
    for (std::size_t i = 0; i < n_inst; ++i) {
      seeds[i] = instance_seed(spec, static_cast<int>(i));
    }
    const auto base_it =
        std::find(spec.solvers.begin(), spec.solvers.end(), SolverKind::kBaseline);
    const auto base_k = static_cast<std::size_t>(base_it - spec.solvers.begin());

    for (std::size_t k = 0; k < spec.solvers.size(); ++k) {
      SweepRow row;
      row.kind = spec.kind;
      row.sweep_value = point;
      row.solver = spec.solvers[k];
      row.seeds = seeds;
      if (refusal[row.solver]) {
        row.skipped = true;
        row.note = *refusal[row.solver];
        rows.push_back(std::move(row));
        continue;
      }
      row.per_instance_bps = totals[k];
      std::tie(row.mean_total_throughput_bps, row.stddev_total_throughput_bps) =
          mean_stddev(row.per_instance_bps);
      if (has_baseline && row.solver != SolverKind::kBaseline) {
        std::vector<double> gains(n_inst);
        for (std::size_t i = 0; i < n_inst; ++i) {
          gains[i] = throughput_gain(totals[k][i], totals[base_k][i]);
        }
        const auto [m, sd] = mean_stddev(gains);
        row.mean_gain_vs_baseline_pct = m;
        row.stddev_gain_vs_baseline_pct = sd;
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string format_sci(double value) {
  if (value == 0.0) return "0.00000e0";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.5e", value);
  std::string s(buf);
  const auto e = s.find('e');
  std::string mantissa = s.substr(0, e);
  std::string exponent = s.substr(e + 1);
  bool negative = false;
  std::size_t i = 0;
  if (exponent[i] == '+' || exponent[i] == '-') {
    negative = exponent[i] == '-';
    ++i;
  }
  while (i + 1 < exponent.size() && exponent[i] == '0') ++i;
  return mantissa + "e" + (negative ? "-" : "") + exponent.substr(i);
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

template <typename T, typename F>
std::string joined(const std::vector<T>& v, F&& fmt) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ';';
    out += fmt(v[i]);
  }
  return out;
}

std::string write_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << body;
  out.flush();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
  return body;
}

}  // namespace

std::string format_csv(std::span<const SweepRow> rows) {
  std::string out =
      "kind,sweep_value,solver,status,instances,mean_total_throughput_bps,"
      "stddev_total_throughput_bps,mean_gain_vs_baseline_pct,"
      "stddev_gain_vs_baseline_pct,per_instance_bps,seeds\n";
  for (const SweepRow& r : rows) {
    std::vector<std::string> f;
    f.emplace_back(to_string(r.kind));
    f.push_back(format_sci(r.sweep_value));
    f.emplace_back(to_string(r.solver));
    f.push_back(r.skipped ? "skipped: " + r.note : "ok");
    f.push_back(std::to_string(r.skipped ? 0 : r.per_instance_bps.size()));
    if (r.skipped) {
      f.insert(f.end(), 5, "");
    } else {
      f.push_back(format_sci(r.mean_total_throughput_bps));
      f.push_back(format_sci(r.stddev_total_throughput_bps));
      f.push_back(r.mean_gain_vs_baseline_pct ? format_sci(*r.mean_gain_vs_baseline_pct) : "");
      f.push_back(r.stddev_gain_vs_baseline_pct ? format_sci(*r.stddev_gain_vs_baseline_pct) : "");
      f.push_back(joined(r.per_instance_bps, format_sci));
    }
    f.push_back(joined(r.seeds, [](std::uint64_t s) { return std::to_string(s); }));
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (i > 0) out += ',';
      out += csv_field(f[i]);
    }
    out += '\n';
  }
  return out;
}

void emit_csv(std::span<const SweepRow> rows, const std::filesystem::path& path) {
  if (rows.empty()) throw DomainError("no sweep rows to write");
  write_file(path, format_csv(rows));
}

void emit_plot_svg(std::span<const SweepRow> rows, const std::filesystem::path& path,
                   PlotMetric metric) {
  write_file(path, render_plot_svg(rows, metric));
}

void write_sweep_outputs(const SweepSpec& spec, std::span<const SweepRow> rows) {
  ensure_writable_dir(spec.output_dir);
  emit_csv(rows, spec.output_dir / "sweep.csv");
  if (spec.points.size() < 2) return;
  emit_plot_svg(rows, spec.output_dir / "sweep_throughput.svg", PlotMetric::kThroughput);
  const bool any_gain = std::any_of(rows.begin(), rows.end(), [](const SweepRow& r) {
    return r.mean_gain_vs_baseline_pct.has_value();
  });
  if (any_gain) {
    emit_plot_svg(rows, spec.output_dir / "sweep_gain.svg", PlotMetric::kGain);
  }
}

std::vector<double> exact_objective_vs_pmax(const Scenario& scenario,
                                            std::span<const double> p_max_mw,
                                            ExactConfig config) {
  std::vector<double> out;
  for (double cap : p_max_mw) {
    Scenario s = scenario;
    s.params.p_max_sta_mw = cap;
    s.params.p_max_ap_mw = std::max(s.params.p_max_ap_mw, cap);
    config.power_grid_mw.clear();
    for (double p = 5.0; p < cap; p += 5.0) config.power_grid_mw.push_back(p);
    config.power_grid_mw.push_back(cap);
    config.limits.max_grid_levels =
        std::max(config.limits.max_grid_levels,
                 static_cast<int>(config.power_grid_mw.size()));
    out.push_back(solve_exact(s, build_gain_matrix(s), config).evaluation.total_throughput_bps);
  }
  return out;
}

}  // namespace mapc
