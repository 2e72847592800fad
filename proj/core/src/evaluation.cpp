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

#include "mapc/evaluation.hpp"

#include <cmath>
#include <string>

#include "mapc/error.hpp"

namespace mapc {

void check_structure(const Scenario& scenario, const Allocation& alloc) {
  const auto n_stas = static_cast<std::size_t>(scenario.num_stas());
  if (scenario.association.size() != n_stas) {
    throw StructuralError("scenario association does not cover every STA");
  }
  if (alloc.ru_of_sta.size() != n_stas ||
      alloc.power_of_sta_mw.size() != n_stas) {
    throw StructuralError("allocation covers " +
                          std::to_string(alloc.ru_of_sta.size()) + " STAs, "
                          "scenario has " + std::to_string(n_stas));
  }
  if (alloc.is_grouped() &&
      alloc.group_of_ap.size() != static_cast<std::size_t>(scenario.num_aps())) {
    throw StructuralError("allocation groups " +
                          std::to_string(alloc.group_of_ap.size()) +
                          " APs, scenario has " +
                          std::to_string(scenario.num_aps()));
  }
  for (std::size_t u = 0; u < n_stas; ++u) {
    const RuIndex j = alloc.ru_of_sta[u];
    if (j != kUnassigned && (j < 0 || j >= scenario.params.num_rus)) {
      throw StructuralError("STA " + std::to_string(u) + " is on RU " +
                            std::to_string(j) + " outside [0, " +
                            std::to_string(scenario.params.num_rus) + ")");
    }
    if (!std::isfinite(alloc.power_of_sta_mw[u])) {
      throw StructuralError("STA " + std::to_string(u) +
                            " has a non-finite power");
    }
  }
}

void check_structure(const Scenario& scenario, const GainMatrix& gains,
                     const Allocation& alloc) {
  if (gains.num_stas() != scenario.num_stas() ||
      gains.num_aps() != scenario.num_aps()) {
    throw StructuralError("gain matrix is " + std::to_string(gains.num_stas()) +
                          "x" + std::to_string(gains.num_aps()) +
                          ", scenario needs " +
                          std::to_string(scenario.num_stas()) + "x" +
                          std::to_string(scenario.num_aps()));
  }
  check_structure(scenario, alloc);
}

namespace {

// Assumes structure has been checked.
double sinr_unchecked(const Scenario& scenario, const GainMatrix& gains,
                      const Allocation& alloc, StaIndex u) {
  const auto su = static_cast<std::size_t>(u);
  const RuIndex j = alloc.ru_of_sta[su];
  const double p = alloc.power_of_sta_mw[su];
  if (j == kUnassigned || p <= 0.0) return 0.0;

  double interference = 0.0;
  for (StaIndex k = 0; k < scenario.num_stas(); ++k) {
    const auto sk = static_cast<std::size_t>(k);
    if (k == u || alloc.ru_of_sta[sk] != j) continue;
    interference += alloc.power_of_sta_mw[sk] * gains(u, scenario.ap_of(k));
  }
  return p * gains(u, scenario.ap_of(u)) /
         (interference + scenario.params.noise_power_mw);
}

}  // namespace

double compute_sinr(const Scenario& scenario, const GainMatrix& gains,
                    const Allocation& alloc, StaIndex u) {
  check_structure(scenario, gains, alloc);
  if (u < 0 || u >= scenario.num_stas()) {
    throw StructuralError("STA index " + std::to_string(u) + " out of range");
  }
  return sinr_unchecked(scenario, gains, alloc, u);
}

double ru_throughput_bps(const NetworkParams& params, double sinr) {
  return params.ru_bandwidth_hz * std::log2(1.0 + sinr);
}

EvaluationResult evaluate(const Scenario& scenario, const GainMatrix& gains,
                          const Allocation& alloc) {
  check_structure(scenario, gains, alloc);
  const auto n_stas = static_cast<std::size_t>(scenario.num_stas());

  EvaluationResult result;
  result.sinr_of_sta.assign(n_stas, 0.0);
  result.throughput_of_sta_bps.assign(n_stas, 0.0);
  result.power_used_by_ap_mw.assign(
      static_cast<std::size_t>(scenario.num_aps()), 0.0);

  for (StaIndex u = 0; u < scenario.num_stas(); ++u) {
    const auto su = static_cast<std::size_t>(u);
    if (!alloc.is_assigned(u)) continue;
    const double sinr = sinr_unchecked(scenario, gains, alloc, u);
    result.sinr_of_sta[su] = sinr;
    result.throughput_of_sta_bps[su] = ru_throughput_bps(scenario.params, sinr);
    result.power_used_by_ap_mw[static_cast<std::size_t>(scenario.ap_of(u))] +=
        alloc.power_of_sta_mw[su];
  }
  for (double t : result.throughput_of_sta_bps) result.total_throughput_bps += t;
  return result;
}

double throughput_gain(double test_total_bps, double baseline_total_bps) {
  if (!(baseline_total_bps > 0.0)) {
    throw UndefinedGainError("throughput gain is undefined for a baseline of " +
                             std::to_string(baseline_total_bps) + " bit/s");
  }
  return 100.0 * (test_total_bps - baseline_total_bps) / baseline_total_bps;
}

double throughput_gain(const EvaluationResult& test,
                       const EvaluationResult& baseline) {
  return throughput_gain(test.total_throughput_bps,
                         baseline.total_throughput_bps);
}

}  // namespace mapc
