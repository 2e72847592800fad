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

#ifndef MAPC_EXACT_HPP_
#define MAPC_EXACT_HPP_

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "mapc/types.hpp"

namespace mapc {

struct ExactLimits {
  int max_stas = 8;
  int max_rus = 4;
  int max_aps = 4;
  int max_grid_levels = 4;
};

struct ExactConfig {
  // Allowed powers for an assigned STA, strictly increasing, all in
  // (0, P_max]. Zero power is expressed by leaving the STA unassigned.
  std::vector<double> power_grid_mw{5.0, 10.0, 15.0};
  // 0 uses the network's G_max.
  int max_groups = 0;
  ExactLimits limits;
  // Cyclic single-coordinate continuous ascent on the grid optimum.
  bool refine_powers = false;
  // Wall-clock cap in seconds; 0 disables it.
  double time_budget_s = 0.0;
  // Threads exploring disjoint groupings. The result does not depend on it.
  int workers = 1;

  void validate(const NetworkParams& params) const;
};

// group_of_ap for one partition of the APs, labelled as a restricted growth
// string: AP 0 is in group 0 and each AP's label is at most one more than
// the largest label before it.
using Grouping = std::vector<GroupId>;

// Every partition of n_aps APs into at most g_max non-empty groups (and at
// most max_group_size APs per group when positive), in lexicographic order
// of their labels. The first entry puts all APs in one group.
std::vector<Grouping> enumerate_groupings(int n_aps, int g_max,
                                          int max_group_size = 0);

// Calls visit for every STA -> RU map (kUnassigned allowed) that uses each
// RU at most once per BSS and shares an RU across BSSs only inside a group.
// Order: depth-first over STAs by index, trying kUnassigned and then RUs in
// ascending order. visit returns false to stop early.
void for_each_assignment(
    std::span<const ApIndex> association, int num_rus, const Grouping& grouping,
    const std::function<bool(std::span<const RuIndex>)>& visit);

std::vector<std::vector<RuIndex>> enumerate_assignments(
    const Scenario& scenario, const Grouping& grouping);

struct ExactSolution {
  Allocation allocation;
  EvaluationResult evaluation;
  double grid_objective_bps = 0.0;  // before refinement
  bool proven_optimal = true;       // false when the time budget ran out
  std::uint64_t nodes_explored = 0;
  std::uint64_t pruned = 0;
  double wall_time_s = 0.0;
};

// Maximizes total throughput over groupings x RU assignments x grid powers
// subject to the STA and AP power caps. Throws SizeLimitError when the
// instance exceeds config.limits.
ExactSolution solve_exact(const Scenario& scenario, const GainMatrix& gains,
                          const ExactConfig& config);

// Continuous coordinate ascent on the powers of assigned STAs, keeping every
// STA and AP cap. Never lowers the objective.
Allocation refine_powers(const Scenario& scenario, const GainMatrix& gains,
                         Allocation alloc);

}  // namespace mapc

#endif  // MAPC_EXACT_HPP_
