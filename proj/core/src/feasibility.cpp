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

#include "mapc/feasibility.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "mapc/error.hpp"

namespace mapc {

std::string_view to_string(Constraint c) {
  switch (c) {
    case Constraint::kOneRu: return "ONE_RU";
    case Constraint::kStaPower: return "STA_POWER";
    case Constraint::kNoIntraBssReuse: return "NO_INTRA_BSS_REUSE";
    case Constraint::kApPower: return "AP_POWER";
    case Constraint::kOneGroup: return "ONE_GROUP";
    case Constraint::kGroupCap: return "GROUP_CAP";
    case Constraint::kGroupRuReuse: return "GROUP_RU_REUSE";
  }
  return "UNKNOWN";
}

int FeasibilityReport::count(Constraint c) const {
  return static_cast<int>(std::count_if(
      violations.begin(), violations.end(),
      [c](const Violation& v) { return v.constraint == c; }));
}

namespace {

// Relative slack on power caps so that budgets filled by floating-point
// scaling (e.g. 8 x 12.5 mW) are not reported.
constexpr double kPowerSlack = 1e-9;

bool exceeds(double value, double cap) {
  return value > cap * (1.0 + kPowerSlack);
}

}  // namespace

FeasibilityReport check_feasibility(const Scenario& scenario,
                                    const Allocation& alloc) {
  const auto n_stas = static_cast<std::size_t>(scenario.num_stas());
  const int n_aps = scenario.num_aps();
  if (alloc.ru_of_sta.size() != n_stas ||
      alloc.power_of_sta_mw.size() != n_stas ||
      scenario.association.size() != n_stas) {
    throw StructuralError("allocation does not cover the scenario's STAs");
  }
  if (alloc.is_grouped() &&
      alloc.group_of_ap.size() != static_cast<std::size_t>(n_aps)) {
    throw StructuralError("allocation grouping does not cover every AP");
  }

  const NetworkParams& p = scenario.params;
  FeasibilityReport report;
  auto add = [&report](Constraint c, std::vector<int> idx, std::string msg) {
    report.violations.push_back({c, std::move(idx), std::move(msg)});
  };

  for (StaIndex u = 0; u < scenario.num_stas(); ++u) {
    const auto su = static_cast<std::size_t>(u);
    const RuIndex j = alloc.ru_of_sta[su];
    const double pw = alloc.power_of_sta_mw[su];
    if (j != kUnassigned && (j < 0 || j >= p.num_rus)) {
      add(Constraint::kOneRu, {u, j},
          "STA " + std::to_string(u) + " assigned to nonexistent RU " +
              std::to_string(j));
    }
    if (pw < 0.0 || exceeds(pw, p.p_max_sta_mw)) {
      add(Constraint::kStaPower, {u},
          "STA " + std::to_string(u) + " power " + std::to_string(pw) +
              " mW outside [0, " + std::to_string(p.p_max_sta_mw) + "]");
    } else if (j == kUnassigned && pw != 0.0) {
      add(Constraint::kStaPower, {u},
          "unassigned STA " + std::to_string(u) + " carries power " +
              std::to_string(pw) + " mW");
    }
  }

  // RU usage and power per BSS.
  std::map<std::pair<ApIndex, RuIndex>, std::vector<StaIndex>> bss_ru_users;
  std::vector<double> ap_power(static_cast<std::size_t>(n_aps), 0.0);
  for (StaIndex u = 0; u < scenario.num_stas(); ++u) {
    const auto su = static_cast<std::size_t>(u);
    const ApIndex n = scenario.ap_of(u);
    ap_power[static_cast<std::size_t>(n)] += alloc.power_of_sta_mw[su];
    if (alloc.ru_of_sta[su] != kUnassigned) {
      bss_ru_users[{n, alloc.ru_of_sta[su]}].push_back(u);
    }
  }
  for (const auto& [key, users] : bss_ru_users) {
    if (users.size() > 1) {
      std::vector<int> idx(users.begin(), users.end());
      idx.push_back(key.second);
      add(Constraint::kNoIntraBssReuse, std::move(idx),
          "AP " + std::to_string(key.first) + " reuses RU " +
              std::to_string(key.second) + " for " +
              std::to_string(users.size()) + " STAs");
    }
  }
  for (ApIndex n = 0; n < n_aps; ++n) {
    const double total = ap_power[static_cast<std::size_t>(n)];
    if (exceeds(total, p.p_max_ap_mw)) {
      add(Constraint::kApPower, {n},
          "AP " + std::to_string(n) + " spends " + std::to_string(total) +
              " mW > " + std::to_string(p.p_max_ap_mw) + " mW");
    }
  }

  if (!alloc.is_grouped()) {
    report.grouping_checked = false;
    return report;
  }

  const int size_cap = p.max_aps_per_group > 0 ? p.max_aps_per_group : n_aps;
  std::map<GroupId, std::vector<ApIndex>> members;
  for (ApIndex n = 0; n < n_aps; ++n) {
    const GroupId g = alloc.group_of_ap[static_cast<std::size_t>(n)];
    if (g < 0) {
      add(Constraint::kOneGroup, {n},
          "AP " + std::to_string(n) + " is not a member of any group");
      continue;
    }
    members[g].push_back(n);
    if (!alloc.active_groups.contains(g)) {
      add(Constraint::kOneGroup, {n, g},
          "AP " + std::to_string(n) + " is a member of inactive group " +
              std::to_string(g));
    }
  }
  for (const auto& [g, aps] : members) {
    if (static_cast<int>(aps.size()) > size_cap) {
      add(Constraint::kOneGroup, {g},
          "group " + std::to_string(g) + " has " + std::to_string(aps.size()) +
              " APs > cap " + std::to_string(size_cap));
    }
  }
  if (static_cast<int>(alloc.active_groups.size()) > p.g_max) {
    add(Constraint::kGroupCap, {static_cast<int>(alloc.active_groups.size())},
        std::to_string(alloc.active_groups.size()) +
            " active groups > G_max " + std::to_string(p.g_max));
  }

  for (StaIndex u = 0; u < scenario.num_stas(); ++u) {
    const RuIndex j = alloc.ru_of_sta[static_cast<std::size_t>(u)];
    if (j == kUnassigned) continue;
    for (StaIndex v = u + 1; v < scenario.num_stas(); ++v) {
      if (alloc.ru_of_sta[static_cast<std::size_t>(v)] != j) continue;
      const ApIndex nu = scenario.ap_of(u);
      const ApIndex nv = scenario.ap_of(v);
      if (nu == nv) continue;  // covered by kNoIntraBssReuse
      const GroupId gu = alloc.group_of_ap[static_cast<std::size_t>(nu)];
      const GroupId gv = alloc.group_of_ap[static_cast<std::size_t>(nv)];
      if (gu < 0 || gu != gv) {
        add(Constraint::kGroupRuReuse, {u, v, j},
            "STAs " + std::to_string(u) + " and " + std::to_string(v) +
                " share RU " + std::to_string(j) +
                " but their APs are in different groups");
      }
    }
  }
  return report;
}

}  // namespace mapc
