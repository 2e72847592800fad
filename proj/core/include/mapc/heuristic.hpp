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

#ifndef MAPC_HEURISTIC_HPP_
#define MAPC_HEURISTIC_HPP_

#include <array>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mapc/types.hpp"

namespace mapc {

// How the heuristic scores one STA-power combination on an RU.
enum class CapacityMetric {
  kMinSinr,  // log2(1 + min member SINR)
  kSumRate,  // sum of log2(1 + SINR) over the members
};

std::string_view to_string(CapacityMetric m);
// Accepts "min-sinr" / "sum-rate". Throws DomainError otherwise.
CapacityMetric parse_capacity_metric(std::string_view text);

// Initial STA-set size per RU: ceil(U/J) or floor(U/J), never below 1.
enum class SetSizeRule { kFloor, kCeil };

std::string_view to_string(SetSizeRule r);
SetSizeRule parse_set_size_rule(std::string_view text);
int initial_set_size(int num_stas, int num_rus, SetSizeRule rule);

// How one RU settles on a set size. Within a size the capacity metric picks
// the set; across sizes kBestThroughput compares the summed Shannon rate, so
// reuse is only committed when it beats serving fewer STAs alone.
enum class SizeSearch {
  kFirstFeasible,   // the largest size with any admissible set wins
  kBestThroughput,  // try every size down to 1 and keep the highest RU rate
};

std::string_view to_string(SizeSearch s);
SizeSearch parse_size_search(std::string_view text);

struct HeuristicConfig {
  // (P_min, P_mid, P_max), strictly increasing.
  std::array<double, 3> power_levels_mw{5.0, 10.0, 15.0};
  double sinr_threshold_linear = 1.584893192461113;
  CapacityMetric capacity_metric = CapacityMetric::kMinSinr;
  // Maximum number of STA sets enumerated per attempt on one RU.
  int candidate_beam_width = 64;
  SetSizeRule set_size_rule = SetSizeRule::kCeil;
  SizeSearch size_search = SizeSearch::kBestThroughput;

  // P_max and the SINR threshold taken from the network; P_min / P_mid
  // default to 5 / 10 mW. When P_max <= p_mid the middle level becomes the
  // midpoint of P_min and P_max so the three levels stay distinct.
  static HeuristicConfig from_params(const NetworkParams& params,
                                     double p_min_mw = 5.0,
                                     double p_mid_mw = 10.0);

  void validate(const NetworkParams& params) const;
};

struct MemberPower {
  StaIndex sta;
  double power_mw;

  friend bool operator==(const MemberPower&, const MemberPower&) = default;
};

// The STAs sharing one RU and their powers.
struct RuDecision {
  RuIndex ru;
  std::vector<MemberPower> members;
  double metric;
};

// Best power assignment for one STA set.
struct PowerChoice {
  std::vector<double> powers_mw;  // aligned with the STA set
  std::vector<double> sinr;       // intra-set SINR of each member
  double metric = 0.0;
  double total_power_mw = 0.0;
};

// STAs by gain to their own AP, descending; ties by index.
std::vector<StaIndex> sort_stas_by_gain(const Scenario& scenario,
                                        const GainMatrix& gains);

// STA sets of exactly `size` members: first_sta plus one STA from each of
// size - 1 distinct other APs. APs are preferred by ascending gain towards
// first_sta (least interfering first), STAs inside an AP by descending own
// gain; sets come out in lexicographic preference order, at most
// candidate_beam_width of them. Empty when not enough other APs still have
// unallocated STAs.
std::vector<std::vector<StaIndex>> candidate_sets(
    const Scenario& scenario, const GainMatrix& gains, StaIndex first_sta,
    std::span<const StaIndex> unallocated, int size,
    const HeuristicConfig& config);

// SINR of each member when only the members interfere with each other.
std::vector<double> intra_set_sinr(const Scenario& scenario,
                                   const GainMatrix& gains,
                                   std::span<const StaIndex> sta_set,
                                   std::span<const double> powers_mw);

// Exhaustive search over power_levels^|set|. Assignments whose minimum
// member SINR falls below the threshold, or where a member's power exceeds
// its AP's remaining budget (when ap_budget_left_mw is non-empty), are
// discarded. Ties: lower total power, then lexicographically smaller
// power vector. nullopt when nothing survives.
std::optional<PowerChoice> best_combo(
    const Scenario& scenario, const GainMatrix& gains,
    std::span<const StaIndex> sta_set, const HeuristicConfig& config,
    std::span<const double> ap_budget_left_mw = {});

struct HeuristicResult {
  Allocation allocation;             // ungrouped
  std::vector<RuDecision> decisions;  // one per non-empty RU, in RU order
  // One line per RU:
  //   ru <j> sizes <G,...> set <sta>@<mW>,... metric <value>
  //   ru <j> sizes <G,...> empty
  std::vector<std::string> trace;
};

HeuristicResult run_heuristic_detailed(const Scenario& scenario,
                                       const GainMatrix& gains,
                                       const HeuristicConfig& config);

Allocation run_heuristic(const Scenario& scenario, const GainMatrix& gains,
                         const HeuristicConfig& config);

void write_trace(const HeuristicResult& result, std::ostream& out);

}  // namespace mapc

#endif  // MAPC_HEURISTIC_HPP_
