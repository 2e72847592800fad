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

#include "mapc/types.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "mapc/error.hpp"

namespace mapc {

NetworkParams NetworkParams::reference() { return NetworkParams{}; }

void NetworkParams::validate() const {
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw DomainError(std::string("network parameter '") + name +
                        "' must be strictly positive and finite");
    }
  };
  positive(frequency_hz, "frequency_hz");
  positive(pathloss_exponent, "pathloss_exponent");
  positive(ref_distance_m, "ref_distance_m");
  positive(noise_power_mw, "noise_power_mw");
  positive(p_max_sta_mw, "p_max_sta_mw");
  positive(p_max_ap_mw, "p_max_ap_mw");
  positive(ru_bandwidth_hz, "ru_bandwidth_hz");
  if (!(sinr_threshold_linear >= 0.0)) {
    throw DomainError("sinr_threshold_linear must be non-negative");
  }
  if (num_rus < 1) throw DomainError("num_rus must be at least 1");
  if (g_max < 1) throw DomainError("g_max must be at least 1");
  if (max_aps_per_group < 0) {
    throw DomainError("max_aps_per_group must be non-negative (0 = no cap)");
  }
  if (p_max_sta_mw > p_max_ap_mw) {
    throw DomainError("p_max_sta_mw must not exceed p_max_ap_mw");
  }
}

double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }
double mw_to_dbm(double mw) { return 10.0 * std::log10(mw); }
double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double linear_to_db(double ratio) { return 10.0 * std::log10(ratio); }

double distance(const Point& a, const Point& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

std::vector<StaIndex> Scenario::stas_of(ApIndex n) const {
  std::vector<StaIndex> out;
  for (StaIndex u = 0; u < num_stas(); ++u) {
    if (ap_of(u) == n) out.push_back(u);
  }
  return out;
}

void Scenario::validate() const {
  params.validate();
  if (ap_positions.empty()) throw StructuralError("scenario has no APs");
  if (association.size() != sta_positions.size()) {
    throw StructuralError("association size " +
                          std::to_string(association.size()) +
                          " does not match STA count " +
                          std::to_string(sta_positions.size()));
  }
  std::vector<int> served(ap_positions.size(), 0);
  for (std::size_t u = 0; u < association.size(); ++u) {
    const ApIndex n = association[u];
    if (n < 0 || n >= num_aps()) {
      throw StructuralError("STA " + std::to_string(u) +
                            " associated to unknown AP " + std::to_string(n));
    }
    ++served[static_cast<std::size_t>(n)];
  }
  for (std::size_t n = 0; n < served.size(); ++n) {
    if (served[n] == 0) {
      throw InfeasibleInputError("AP " + std::to_string(n) +
                                 " has no associated STA");
    }
  }
}

GainMatrix::GainMatrix(int num_stas, int num_aps)
    : num_stas_(num_stas),
      num_aps_(num_aps),
      gains_(static_cast<std::size_t>(num_stas) *
                 static_cast<std::size_t>(num_aps),
             0.0) {
  if (num_stas < 0 || num_aps < 0) {
    throw StructuralError("gain matrix dimensions must be non-negative");
  }
}

Allocation Allocation::unassigned(int num_stas) {
  Allocation a;
  a.ru_of_sta.assign(static_cast<std::size_t>(num_stas), kUnassigned);
  a.power_of_sta_mw.assign(static_cast<std::size_t>(num_stas), 0.0);
  return a;
}

void Allocation::assign(StaIndex u, RuIndex ru, double power_mw) {
  ru_of_sta[static_cast<std::size_t>(u)] = ru;
  power_of_sta_mw[static_cast<std::size_t>(u)] = power_mw;
}

void Allocation::unassign(StaIndex u) { assign(u, kUnassigned, 0.0); }

Allocation Allocation::canonical() const {
  Allocation out = *this;
  if (!is_grouped()) return out;

  std::map<GroupId, GroupId> relabel;
  GroupId next = 0;
  for (GroupId g : group_of_ap) {
    if (g >= 0 && !relabel.contains(g)) relabel.emplace(g, next++);
  }
  for (GroupId g : active_groups) {
    if (!relabel.contains(g)) relabel.emplace(g, next++);
  }
  for (GroupId& g : out.group_of_ap) {
    if (g >= 0) g = relabel.at(g);
  }
  out.active_groups.clear();
  for (GroupId g : active_groups) out.active_groups.insert(relabel.at(g));
  return out;
}

bool operator==(const Allocation& a, const Allocation& b) {
  const Allocation ca = a.canonical();
  const Allocation cb = b.canonical();
  return ca.ru_of_sta == cb.ru_of_sta &&
         ca.power_of_sta_mw == cb.power_of_sta_mw &&
         ca.group_of_ap == cb.group_of_ap &&
         ca.active_groups == cb.active_groups;
}

}  // namespace mapc
