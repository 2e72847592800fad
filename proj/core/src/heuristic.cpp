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

#include "mapc/heuristic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include "mapc/error.hpp"
#include "mapc/evaluation.hpp"

namespace mapc {

std::string_view to_string(CapacityMetric m) {
  return m == CapacityMetric::kMinSinr ? "min-sinr" : "sum-rate";
}

CapacityMetric parse_capacity_metric(std::string_view text) {
  if (text == "min-sinr") return CapacityMetric::kMinSinr;
  if (text == "sum-rate") return CapacityMetric::kSumRate;
  throw DomainError("unknown capacity metric '" + std::string(text) +
                    "' (expected min-sinr or sum-rate)");
}

std::string_view to_string(SetSizeRule r) {
  return r == SetSizeRule::kFloor ? "floor" : "ceil";
}

SetSizeRule parse_set_size_rule(std::string_view text) {
  if (text == "floor") return SetSizeRule::kFloor;
  if (text == "ceil") return SetSizeRule::kCeil;
  throw DomainError("unknown set size rule '" + std::string(text) +
                    "' (expected floor or ceil)");
}

std::string_view to_string(SizeSearch s) {
  return s == SizeSearch::kFirstFeasible ? "first-feasible" : "best-throughput";
}

SizeSearch parse_size_search(std::string_view text) {
  if (text == "first-feasible") return SizeSearch::kFirstFeasible;
  if (text == "best-throughput") return SizeSearch::kBestThroughput;
  throw DomainError("unknown size search '" + std::string(text) +
                    "' (expected first-feasible or best-throughput)");
}

int initial_set_size(int num_stas, int num_rus, SetSizeRule rule) {
  if (num_rus < 1) throw DomainError("need at least one RU");
  const int g = rule == SetSizeRule::kFloor
                    ? num_stas / num_rus
                    : (num_stas + num_rus - 1) / num_rus;
  return std::max(1, g);
}

HeuristicConfig HeuristicConfig::from_params(const NetworkParams& params,
                                             double p_min_mw, double p_mid_mw) {
  HeuristicConfig c;
  const double p_max = params.p_max_sta_mw;
  if (p_mid_mw >= p_max) p_mid_mw = 0.5 * (p_min_mw + p_max);
  c.power_levels_mw = {p_min_mw, p_mid_mw, p_max};
  c.sinr_threshold_linear = params.sinr_threshold_linear;
  return c;
}

void HeuristicConfig::validate(const NetworkParams& params) const {
  const auto& [lo, mid, hi] = power_levels_mw;
  if (!(lo > 0.0 && lo < mid && mid < hi && hi <= params.p_max_sta_mw)) {
    throw DomainError(
        "heuristic power levels must satisfy 0 < P_min < P_mid < P_max <= "
        "per-STA cap");
  }
  if (candidate_beam_width < 1) {
    throw DomainError("candidate_beam_width must be at least 1");
  }
  if (!(sinr_threshold_linear >= 0.0)) {
    throw DomainError("SINR threshold must be non-negative");
  }
}

std::vector<StaIndex> sort_stas_by_gain(const Scenario& scenario,
                                        const GainMatrix& gains) {
  std::vector<StaIndex> order(static_cast<std::size_t>(scenario.num_stas()));
  for (std::size_t u = 0; u < order.size(); ++u) {
    order[u] = static_cast<StaIndex>(u);
  }
  std::stable_sort(order.begin(), order.end(), [&](StaIndex a, StaIndex b) {
    return gains(a, scenario.ap_of(a)) > gains(b, scenario.ap_of(b));
  });
  return order;
}

std::vector<std::vector<StaIndex>> candidate_sets(
    const Scenario& scenario, const GainMatrix& gains, StaIndex first_sta,
    std::span<const StaIndex> unallocated, int size,
    const HeuristicConfig& config) {
  if (size < 1) return {};
  if (size == 1) return {{first_sta}};

  const ApIndex home = scenario.ap_of(first_sta);
  // Unallocated STAs per other AP, best own gain first.
  std::vector<std::vector<StaIndex>> by_ap(
      static_cast<std::size_t>(scenario.num_aps()));
  for (StaIndex u : unallocated) {
    if (u != first_sta && scenario.ap_of(u) != home) {
      by_ap[static_cast<std::size_t>(scenario.ap_of(u))].push_back(u);
    }
  }
  std::vector<ApIndex> aps;
  for (ApIndex n = 0; n < scenario.num_aps(); ++n) {
    auto& stas = by_ap[static_cast<std::size_t>(n)];
    if (stas.empty()) continue;
    std::stable_sort(stas.begin(), stas.end(), [&](StaIndex a, StaIndex b) {
      if (gains(a, n) != gains(b, n)) return gains(a, n) > gains(b, n);
      return a < b;
    });
    aps.push_back(n);
  }
  std::stable_sort(aps.begin(), aps.end(), [&](ApIndex a, ApIndex b) {
    return gains(first_sta, a) < gains(first_sta, b);
  });

  const auto others = static_cast<std::size_t>(size - 1);
  if (aps.size() < others) return {};

  const auto beam = static_cast<std::size_t>(config.candidate_beam_width);
  std::vector<std::vector<StaIndex>> sets;
  std::vector<StaIndex> current{first_sta};

  // Depth-first over (AP rank, STA rank) pairs with strictly increasing AP
  // rank, which visits sets in lexicographic preference order.
  auto extend = [&](auto&& self, std::size_t next_rank) -> void {
    if (sets.size() >= beam) return;
    if (current.size() == others + 1) {
      sets.push_back(current);
      return;
    }
    const std::size_t still_needed = others + 1 - current.size();
    for (std::size_t r = next_rank; r + still_needed <= aps.size(); ++r) {
      for (StaIndex u : by_ap[static_cast<std::size_t>(aps[r])]) {
        current.push_back(u);
        self(self, r + 1);
        current.pop_back();
        if (sets.size() >= beam) return;
      }
    }
  };
  extend(extend, 0);
  return sets;
}

std::vector<double> intra_set_sinr(const Scenario& scenario,
                                   const GainMatrix& gains,
                                   std::span<const StaIndex> sta_set,
                                   std::span<const double> powers_mw) {
  std::vector<double> sinr(sta_set.size(), 0.0);
  for (std::size_t i = 0; i < sta_set.size(); ++i) {
    const StaIndex u = sta_set[i];
    double interference = 0.0;
    for (std::size_t k = 0; k < sta_set.size(); ++k) {
      if (k != i) interference += powers_mw[k] * gains(u, scenario.ap_of(sta_set[k]));
    }
    sinr[i] = powers_mw[i] * gains(u, scenario.ap_of(u)) /
              (interference + scenario.params.noise_power_mw);
  }
  return sinr;
}

namespace {

double score(CapacityMetric metric, std::span<const double> sinr) {
  if (metric == CapacityMetric::kMinSinr) {
    return std::log2(1.0 + *std::min_element(sinr.begin(), sinr.end()));
  }
  double sum = 0.0;
  for (double s : sinr) sum += std::log2(1.0 + s);
  return sum;
}

// Budget comparisons tolerate rounding in accumulated sums.
constexpr double kBudgetSlack = 1e-9;

}  // namespace

std::optional<PowerChoice> best_combo(const Scenario& scenario,
                                      const GainMatrix& gains,
                                      std::span<const StaIndex> sta_set,
                                      const HeuristicConfig& config,
                                      std::span<const double> ap_budget_left_mw) {
  if (sta_set.empty()) return std::nullopt;
  const std::size_t m = sta_set.size();
  const auto& levels = config.power_levels_mw;

  std::vector<std::size_t> digit(m, 0);
  std::vector<double> powers(m);
  std::optional<PowerChoice> best;

  for (;;) {
    bool within_budget = true;
    double total = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      powers[i] = levels[digit[i]];
      total += powers[i];
      if (!ap_budget_left_mw.empty()) {
        const double left = ap_budget_left_mw[static_cast<std::size_t>(
            scenario.ap_of(sta_set[i]))];
        if (powers[i] > left + kBudgetSlack) within_budget = false;
      }
    }
    if (within_budget) {
      std::vector<double> sinr = intra_set_sinr(scenario, gains, sta_set, powers);
      const double worst = *std::min_element(sinr.begin(), sinr.end());
      if (worst >= config.sinr_threshold_linear) {
        const double metric = score(config.capacity_metric, sinr);
        // Odometer order is lexicographic in the power vector, so an exact
        // tie on metric and total power keeps the earlier (smaller) vector.
        const bool better =
            !best || metric > best->metric ||
            (metric == best->metric && total < best->total_power_mw);
        if (better) best = PowerChoice{powers, std::move(sinr), metric, total};
      }
    }

    std::size_t pos = m;
    while (pos > 0) {
      --pos;
      if (++digit[pos] < levels.size()) break;
      digit[pos] = 0;
      if (pos == 0) return best;
    }
  }
}

namespace {

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

HeuristicResult run_heuristic_detailed(const Scenario& scenario,
                                       const GainMatrix& gains,
                                       const HeuristicConfig& config) {
  scenario.validate();
  config.validate(scenario.params);
  if (gains.num_stas() != scenario.num_stas() ||
      gains.num_aps() != scenario.num_aps()) {
    throw StructuralError("gain matrix does not match the scenario");
  }

  const NetworkParams& params = scenario.params;
  const int n_stas = scenario.num_stas();
  const int n_rus = params.num_rus;
  const double p_min = config.power_levels_mw[0];

  HeuristicResult result;
  result.allocation = Allocation::unassigned(n_stas);

  std::vector<StaIndex> pool = sort_stas_by_gain(scenario, gains);
  std::vector<double> spent(static_cast<std::size_t>(scenario.num_aps()), 0.0);
  const int initial_size =
      initial_set_size(n_stas, n_rus, config.set_size_rule);

  for (RuIndex j = 0; j < n_rus; ++j) {
    int size = initial_size;
    std::string sizes;
    std::optional<RuDecision> decision;
    double decision_rate = 0.0;

    while (!pool.empty() && size > 0) {
      if (!sizes.empty()) sizes += ',';
      sizes += std::to_string(size);

      std::vector<double> budget_left(spent.size());
      for (std::size_t n = 0; n < spent.size(); ++n) {
        budget_left[n] = params.p_max_ap_mw - spent[n];
      }

      const StaIndex head = pool.front();
      std::optional<PowerChoice> best_choice;
      std::vector<StaIndex> best_set;
      for (const auto& set :
           candidate_sets(scenario, gains, head, pool, size, config)) {
        auto choice = best_combo(scenario, gains, set, config, budget_left);
        if (choice && (!best_choice || choice->metric > best_choice->metric)) {
          best_choice = std::move(choice);
          best_set = set;
        }
      }

      if (best_choice) {
        double rate = 0.0;
        for (double s : best_choice->sinr) rate += std::log2(1.0 + s);
        if (!decision || rate > decision_rate) {
          RuDecision d{j, {}, best_choice->metric};
          for (std::size_t i = 0; i < best_set.size(); ++i) {
            d.members.push_back({best_set[i], best_choice->powers_mw[i]});
          }
          decision = std::move(d);
          decision_rate = rate;
        }
        if (config.size_search == SizeSearch::kFirstFeasible) break;
      }
      --size;
    }

    std::string line = "ru " + std::to_string(j) + " sizes " +
                       (sizes.empty() ? std::string("-") : sizes);
    if (!decision) {
      result.trace.push_back(line + " empty");
      continue;
    }

    line += " set ";
    for (std::size_t i = 0; i < decision->members.size(); ++i) {
      const auto& [u, p] = decision->members[i];
      if (i > 0) line += ',';
      line += std::to_string(u) + "@" + format_number(p);
      result.allocation.assign(u, j, p);
      spent[static_cast<std::size_t>(scenario.ap_of(u))] += p;
      std::erase(pool, u);
    }
    line += " metric " + format_number(decision->metric);
    result.trace.push_back(std::move(line));

    for (ApIndex n = 0; n < scenario.num_aps(); ++n) {
      if (params.p_max_ap_mw - spent[static_cast<std::size_t>(n)] <= p_min) {
        std::erase_if(pool, [&](StaIndex u) { return scenario.ap_of(u) == n; });
      }
    }
    result.decisions.push_back(std::move(*decision));
  }
  return result;
}

Allocation run_heuristic(const Scenario& scenario, const GainMatrix& gains,
                         const HeuristicConfig& config) {
  return run_heuristic_detailed(scenario, gains, config).allocation;
}

void write_trace(const HeuristicResult& result, std::ostream& out) {
  for (const auto& line : result.trace) out << line << '\n';
}

}  // namespace mapc
