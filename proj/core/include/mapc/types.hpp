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

#ifndef MAPC_TYPES_HPP_
#define MAPC_TYPES_HPP_

#include <cstddef>
#include <set>
#include <span>
#include <vector>

namespace mapc {

using StaIndex = int;
using ApIndex = int;
using RuIndex = int;
using GroupId = int;

inline constexpr RuIndex kUnassigned = -1;

// Physical and regulatory parameters of one network. Powers are linear mW
// throughout; dBm only appears at I/O boundaries.
struct NetworkParams {
  double frequency_hz = 2.4e9;
  double pathloss_exponent = 2.5;
  double ref_distance_m = 1.0;
  double noise_power_mw = 2.511886431509580e-10;  // -96 dBm
  double p_max_sta_mw = 15.0;
  double p_max_ap_mw = 100.0;
  int num_rus = 10;
  double ru_bandwidth_hz = 2.0e6;
  int g_max = 4;
  double sinr_threshold_linear = 1.584893192461113;  // 2 dB
  // Upper bound on APs per group. 0 means "number of APs", i.e. the
  // membership/activation link alone.
  int max_aps_per_group = 0;

  // The evaluation parameters used throughout the reference experiments.
  static NetworkParams reference();

  // Throws DomainError when an invariant is violated.
  void validate() const;

  friend bool operator==(const NetworkParams&, const NetworkParams&) = default;
};

double dbm_to_mw(double dbm);
double mw_to_dbm(double mw);
double db_to_linear(double db);
double linear_to_db(double ratio);

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

double distance(const Point& a, const Point& b);

// One network instance: geometry, association and parameters.
struct Scenario {
  NetworkParams params;
  std::vector<Point> ap_positions;
  std::vector<Point> sta_positions;
  std::vector<ApIndex> association;  // association[u] = serving AP of STA u

  int num_aps() const { return static_cast<int>(ap_positions.size()); }
  int num_stas() const { return static_cast<int>(sta_positions.size()); }
  ApIndex ap_of(StaIndex u) const { return association[static_cast<std::size_t>(u)]; }
  std::vector<StaIndex> stas_of(ApIndex n) const;

  // Checks parameters, sizes, association ranges and that every AP serves
  // at least one STA. Throws DomainError / StructuralError /
  // InfeasibleInputError.
  void validate() const;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

// Linear channel gains from every AP to every STA, stored row-major by STA.
class GainMatrix {
 public:
  GainMatrix() = default;
  GainMatrix(int num_stas, int num_aps);

  int num_stas() const { return num_stas_; }
  int num_aps() const { return num_aps_; }

  double operator()(StaIndex u, ApIndex n) const {
    return gains_[index(u, n)];
  }
  double& operator()(StaIndex u, ApIndex n) { return gains_[index(u, n)]; }

  std::span<const double> row(StaIndex u) const {
    return {gains_.data() + static_cast<std::size_t>(u) * num_aps_,
            static_cast<std::size_t>(num_aps_)};
  }

  friend bool operator==(const GainMatrix&, const GainMatrix&) = default;

 private:
  std::size_t index(StaIndex u, ApIndex n) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(num_aps_) +
           static_cast<std::size_t>(n);
  }

  int num_stas_ = 0;
  int num_aps_ = 0;
  std::vector<double> gains_;
};

// The decision variables of one TXOP: RU and power per STA plus the AP
// grouping. An empty group_of_ap marks an ungrouped allocation (the
// heuristic's output), for which the grouping constraints do not apply.
struct Allocation {
  std::vector<RuIndex> ru_of_sta;
  std::vector<double> power_of_sta_mw;
  std::vector<GroupId> group_of_ap;
  std::set<GroupId> active_groups;

  // All STAs unassigned, no grouping.
  static Allocation unassigned(int num_stas);

  bool is_assigned(StaIndex u) const {
    return ru_of_sta[static_cast<std::size_t>(u)] != kUnassigned;
  }
  bool is_grouped() const { return !group_of_ap.empty(); }

  void assign(StaIndex u, RuIndex ru, double power_mw);
  void unassign(StaIndex u);

  // Same allocation with group ids relabelled 0, 1, ... in order of the
  // smallest member AP. Active groups without members keep their count and
  // are numbered after the populated ones.
  Allocation canonical() const;

  // Equality up to group relabelling.
  friend bool operator==(const Allocation& a, const Allocation& b);
};

struct EvaluationResult {
  std::vector<double> sinr_of_sta;
  std::vector<double> throughput_of_sta_bps;
  double total_throughput_bps = 0.0;
  std::vector<double> power_used_by_ap_mw;
};

}  // namespace mapc

#endif  // MAPC_TYPES_HPP_
