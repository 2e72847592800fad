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

#include "mapc/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "mapc/error.hpp"

namespace mapc {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw DomainError(std::string("invalid JSON: ") + e.what());
  }
}

template <typename T>
void read_opt(const json& j, const char* key, T& out) {
  if (!j.contains(key) || j.at(key).is_null()) return;
  try {
    out = j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw DomainError(std::string("bad value for '") + key + "': " + e.what());
  }
}

template <typename T>
T read_req(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw DomainError(std::string("missing required key '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw DomainError(std::string("bad value for '") + key + "': " + e.what());
  }
}

json indexed(const std::vector<double>& v) {
  json obj = json::object();
  for (std::size_t i = 0; i < v.size(); ++i) obj[std::to_string(i)] = v[i];
  return obj;
}

// Reads {"0": ..., "1": ...} with keys covering 0..n-1 exactly.
std::vector<json> from_indexed(const json& obj, const char* what) {
  if (!obj.is_object()) {
    throw DomainError(std::string("'") + what + "' must be an object keyed by index");
  }
  std::vector<json> out(obj.size());
  std::vector<bool> seen(obj.size(), false);
  for (const auto& [key, value] : obj.items()) {
    std::size_t idx = 0;
    try {
      std::size_t used = 0;
      idx = std::stoul(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw DomainError(std::string("'") + what + "' has non-index key '" + key + "'");
    }
    if (idx >= out.size() || seen[idx]) {
      throw DomainError(std::string("'") + what + "' keys must be 0.." +
                        std::to_string(out.size() - 1) + " without gaps");
    }
    seen[idx] = true;
    out[idx] = value;
  }
  return out;
}

json params_json(const NetworkParams& p) {
  return json{{"frequency_hz", p.frequency_hz},
              {"pathloss_exponent", p.pathloss_exponent},
              {"ref_distance_m", p.ref_distance_m},
              {"noise_power_mw", p.noise_power_mw},
              {"p_max_sta_mw", p.p_max_sta_mw},
              {"p_max_ap_mw", p.p_max_ap_mw},
              {"num_rus", p.num_rus},
              {"ru_bandwidth_hz", p.ru_bandwidth_hz},
              {"g_max", p.g_max},
              {"sinr_threshold_linear", p.sinr_threshold_linear},
              {"max_aps_per_group", p.max_aps_per_group}};
}

NetworkParams params_from(const json& j) {
  NetworkParams p;
  if (j.is_null()) return p;
  if (!j.is_object()) throw DomainError("'params' must be an object");
  read_opt(j, "frequency_hz", p.frequency_hz);
  read_opt(j, "pathloss_exponent", p.pathloss_exponent);
  read_opt(j, "ref_distance_m", p.ref_distance_m);
  read_opt(j, "noise_power_mw", p.noise_power_mw);
  if (j.contains("noise_power_dbm")) {
    p.noise_power_mw = dbm_to_mw(read_req<double>(j, "noise_power_dbm"));
  }
  read_opt(j, "p_max_sta_mw", p.p_max_sta_mw);
  read_opt(j, "p_max_ap_mw", p.p_max_ap_mw);
  read_opt(j, "num_rus", p.num_rus);
  read_opt(j, "ru_bandwidth_hz", p.ru_bandwidth_hz);
  read_opt(j, "g_max", p.g_max);
  read_opt(j, "sinr_threshold_linear", p.sinr_threshold_linear);
  if (j.contains("sinr_threshold_db")) {
    p.sinr_threshold_linear = db_to_linear(read_req<double>(j, "sinr_threshold_db"));
  }
  read_opt(j, "max_aps_per_group", p.max_aps_per_group);
  return p;
}

PlacementConfig placement_from(const json& j) {
  PlacementConfig c;
  if (j.is_null()) return c;
  if (!j.is_object()) throw DomainError("'placement' must be an object");
  read_opt(j, "coverage_radius_m", c.coverage_radius_m);
  read_opt(j, "mean_inter_ap_distance_m", c.mean_inter_ap_distance_m);
  read_opt(j, "near_fraction", c.near_fraction);
  read_opt(j, "rayleigh_shape_divisor", c.rayleigh_shape_divisor);
  read_opt(j, "seed", c.seed);
  return c;
}

json allocation_json(const Allocation& a) {
  json ru = json::object();
  for (std::size_t u = 0; u < a.ru_of_sta.size(); ++u) {
    ru[std::to_string(u)] =
        a.ru_of_sta[u] == kUnassigned ? json(nullptr) : json(a.ru_of_sta[u]);
  }
  json out{{"ru_of_sta", ru}, {"power_of_sta_mw", indexed(a.power_of_sta_mw)}};
  if (a.is_grouped()) {
    json groups = json::object();
    for (std::size_t n = 0; n < a.group_of_ap.size(); ++n) {
      groups[std::to_string(n)] = a.group_of_ap[n];
    }
    out["group_of_ap"] = groups;
    out["active_groups"] = std::vector<int>(a.active_groups.begin(), a.active_groups.end());
  } else {
    out["group_of_ap"] = nullptr;
    out["active_groups"] = json::array();
  }
  return out;
}

json evaluation_json(const EvaluationResult& r) {
  return json{{"sinr_of_sta", indexed(r.sinr_of_sta)},
              {"throughput_of_sta_bps", indexed(r.throughput_of_sta_bps)},
              {"total_throughput_bps", r.total_throughput_bps},
              {"power_used_by_ap_mw", indexed(r.power_used_by_ap_mw)}};
}

json feasibility_json(const FeasibilityReport& r) {
  json violations = json::array();
  for (const Violation& v : r.violations) {
    violations.push_back({{"constraint", std::string(to_string(v.constraint))},
                          {"indices", v.indices},
                          {"message", v.message}});
  }
  return json{{"feasible", r.feasible()},
              {"grouping_checked", r.grouping_checked},
              {"violations", violations}};
}

json exact_stats_json(const ExactSolution& s) {
  return json{{"objective_bps", s.evaluation.total_throughput_bps},
              {"grid_objective_bps", s.grid_objective_bps},
              {"nodes_explored", s.nodes_explored},
              {"pruned", s.pruned},
              {"proven_optimal", s.proven_optimal},
              {"status", s.proven_optimal ? "OPTIMAL" : "INCUMBENT"},
              {"wall_time_s", s.wall_time_s}};
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("failed reading '" + path.string() + "'");
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

NetworkParams network_params_from_json(const std::string& text) {
  return params_from(parse(text));
}

std::string network_params_to_json(const NetworkParams& params) {
  return params_json(params).dump(2);
}

PlacementConfig placement_config_from_json(const std::string& text) {
  return placement_from(parse(text));
}

std::string scenario_to_json(const Scenario& s) {
  json aps = json::array();
  for (const Point& p : s.ap_positions) aps.push_back({{"x", p.x}, {"y", p.y}});
  json stas = json::array();
  for (std::size_t u = 0; u < s.sta_positions.size(); ++u) {
    stas.push_back({{"x", s.sta_positions[u].x},
                    {"y", s.sta_positions[u].y},
                    {"ap", s.association[u]}});
  }
  return json{{"params", params_json(s.params)}, {"aps", aps}, {"stas", stas}}.dump(2);
}

Scenario scenario_from_json(const std::string& text) {
  const json j = parse(text);
  Scenario s;
  s.params = params_from(j.contains("params") ? j.at("params") : json(nullptr));
  for (const json& ap : read_req<json>(j, "aps")) {
    s.ap_positions.push_back({read_req<double>(ap, "x"), read_req<double>(ap, "y")});
  }
  for (const json& sta : read_req<json>(j, "stas")) {
    s.sta_positions.push_back({read_req<double>(sta, "x"), read_req<double>(sta, "y")});
    s.association.push_back(read_req<int>(sta, "ap"));
  }
  s.validate();
  return s;
}

std::string positions_csv(const Scenario& s) {
  std::string out = "kind,index,x_m,y_m,ap\n";
  char buf[128];
  for (std::size_t n = 0; n < s.ap_positions.size(); ++n) {
    std::snprintf(buf, sizeof buf, "ap,%zu,%.6f,%.6f,%zu\n", n, s.ap_positions[n].x,
                  s.ap_positions[n].y, n);
    out += buf;
  }
  for (std::size_t u = 0; u < s.sta_positions.size(); ++u) {
    std::snprintf(buf, sizeof buf, "sta,%zu,%.6f,%.6f,%d\n", u, s.sta_positions[u].x,
                  s.sta_positions[u].y, s.association[u]);
    out += buf;
  }
  return out;
}

std::string allocation_to_json(const Allocation& alloc) {
  return allocation_json(alloc).dump(2);
}

Allocation allocation_from_json(const std::string& text) {
  const json j = parse(text);
  const std::vector<json> rus = from_indexed(read_req<json>(j, "ru_of_sta"), "ru_of_sta");
  const std::vector<json> powers =
      from_indexed(read_req<json>(j, "power_of_sta_mw"), "power_of_sta_mw");
  if (rus.size() != powers.size()) {
    throw DomainError("ru_of_sta and power_of_sta_mw cover different STAs");
  }
  Allocation a = Allocation::unassigned(static_cast<int>(rus.size()));
  try {
    for (std::size_t u = 0; u < rus.size(); ++u) {
      a.ru_of_sta[u] = rus[u].is_null() ? kUnassigned : rus[u].get<int>();
      a.power_of_sta_mw[u] = powers[u].get<double>();
    }
    if (j.contains("group_of_ap") && !j.at("group_of_ap").is_null()) {
      for (const json& g : from_indexed(j.at("group_of_ap"), "group_of_ap")) {
        a.group_of_ap.push_back(g.get<int>());
      }
      for (int g : read_req<std::vector<int>>(j, "active_groups")) {
        a.active_groups.insert(g);
      }
    }
  } catch (const json::exception& e) {
    throw DomainError(std::string("bad allocation value: ") + e.what());
  }
  return a;
}

std::string evaluation_to_json(const EvaluationResult& result) {
  return evaluation_json(result).dump(2);
}

std::string feasibility_to_json(const FeasibilityReport& report) {
  return feasibility_json(report).dump(2);
}

std::string solve_report_to_json(const SolveReport& report) {
  json out{{"solver", report.solver},
           {"objective_bps", report.evaluation.total_throughput_bps},
           {"allocation", allocation_json(report.allocation)},
           {"evaluation", evaluation_json(report.evaluation)},
           {"feasibility", feasibility_json(report.feasibility)}};
  if (report.exact) out["search"] = exact_stats_json(*report.exact);
  if (!report.trace.empty()) out["trace"] = report.trace;
  return out.dump(2);
}

SweepSpec sweep_spec_from_json(const std::string& text) {
  const json j = parse(text);
  SweepSpec spec;
  spec.kind = parse_sweep_kind(read_req<std::string>(j, "kind"));
  spec.points = read_req<std::vector<double>>(j, "points");
  read_opt(j, "instances_per_point", spec.instances_per_point);
  if (j.contains("solvers")) {
    spec.solvers.clear();
    for (const auto& s : read_req<std::vector<std::string>>(j, "solvers")) {
      spec.solvers.push_back(parse_solver_kind(s));
    }
  }
  read_opt(j, "seed", spec.seed);
  if (j.contains("params")) spec.base_params = params_from(j.at("params"));
  if (j.contains("placement")) spec.placement = placement_from(j.at("placement"));
  if (j.contains("variants")) {
    spec.variants.clear();
    for (const auto& v : read_req<std::vector<std::vector<double>>>(j, "variants")) {
      if (v.size() != 2) throw DomainError("each variant is [near_fraction, shape_divisor]");
      spec.variants.push_back({v[0], v[1]});
    }
  }
  read_opt(j, "n_aps", spec.n_aps);
  read_opt(j, "n_stas", spec.n_stas);
  if (j.contains("heuristic")) {
    const json& h = j.at("heuristic");
    read_opt(h, "p_min_mw", spec.heuristic_p_min_mw);
    read_opt(h, "p_mid_mw", spec.heuristic_p_mid_mw);
    read_opt(h, "beam_width", spec.candidate_beam_width);
    if (h.contains("set_size")) {
      spec.set_size_rule = parse_set_size_rule(read_req<std::string>(h, "set_size"));
    }
    if (h.contains("size_search")) {
      spec.size_search = parse_size_search(read_req<std::string>(h, "size_search"));
    }
    if (h.contains("metric")) {
      spec.capacity_metric = parse_capacity_metric(read_req<std::string>(h, "metric"));
    }
  }
  if (j.contains("exact")) {
    const json& e = j.at("exact");
    read_opt(e, "power_grid_mw", spec.exact.power_grid_mw);
    read_opt(e, "max_groups", spec.exact.max_groups);
    read_opt(e, "refine_powers", spec.exact.refine_powers);
    read_opt(e, "time_budget_s", spec.exact.time_budget_s);
    if (e.contains("limits")) {
      const json& l = e.at("limits");
      read_opt(l, "max_stas", spec.exact.limits.max_stas);
      read_opt(l, "max_rus", spec.exact.limits.max_rus);
      read_opt(l, "max_aps", spec.exact.limits.max_aps);
      read_opt(l, "max_grid_levels", spec.exact.limits.max_grid_levels);
    }
  }
  if (j.contains("baseline") && j.at("baseline").contains("cap_mode")) {
    spec.cap_mode = parse_cap_mode(read_req<std::string>(j.at("baseline"), "cap_mode"));
  }
  read_opt(j, "workers", spec.workers);
  if (j.contains("output_dir")) {
    spec.output_dir = read_req<std::string>(j, "output_dir");
  }
  spec.validate();
  return spec;
}

}  // namespace mapc
