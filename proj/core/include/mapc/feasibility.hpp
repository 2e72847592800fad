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

#ifndef MAPC_FEASIBILITY_HPP_
#define MAPC_FEASIBILITY_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "mapc/types.hpp"

namespace mapc {

// Constraint families of the joint RU / power / grouping model.
enum class Constraint {
  kOneRu,            // at most one (existing) RU per STA
  kStaPower,         // 0 <= P_u <= P_max, and P_u = 0 when unassigned
  kNoIntraBssReuse,  // an RU is used at most once inside a BSS
  kApPower,          // per-AP power budget
  kOneGroup,         // each AP in exactly one active group, group size cap
  kGroupCap,         // at most G_max active groups
  kGroupRuReuse,     // co-RU STAs of different APs need a shared group
};

std::string_view to_string(Constraint c);

struct Violation {
  Constraint constraint;
  std::vector<int> indices;  // offending STA / AP / RU / group indices
  std::string message;
};

struct FeasibilityReport {
  std::vector<Violation> violations;
  // False for ungrouped allocations: the grouping families (kOneGroup,
  // kGroupCap, kGroupRuReuse) were not applicable and not checked.
  bool grouping_checked = true;

  bool feasible() const { return violations.empty(); }
  int count(Constraint c) const;
};

// Itemized check of every constraint family. Never throws for an allocation
// whose container sizes match the scenario (StructuralError otherwise).
FeasibilityReport check_feasibility(const Scenario& scenario,
                                    const Allocation& alloc);

}  // namespace mapc

#endif  // MAPC_FEASIBILITY_HPP_
