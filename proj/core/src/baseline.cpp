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

#include "mapc/baseline.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "mapc/error.hpp"
#include "mapc/propagation.hpp"
#include "mapc/rng.hpp"

namespace mapc {

std::string_view to_string(CapMode m) {
  return m == CapMode::kScale ? "scale" : "truncate";
}

CapMode parse_cap_mode(std::string_view text) {
  if (text == "scale") return CapMode::kScale;
  if (text == "truncate") return CapMode::kTruncate;
  throw DomainError("unknown cap mode '" + std::string(text) +
                    "' (expected scale or truncate)");
}

Allocation non_coordinated_allocate(const Scenario& scenario,
                                    const BaselineConfig& config) {
  scenario.validate();
  const NetworkParams& params = scenario.params;
  const auto n_rus = static_cast<std::size_t>(params.num_rus);

  Allocation alloc = Allocation::unassigned(scenario.num_stas());
  alloc.group_of_ap.assign(static_cast<std::size_t>(scenario.num_aps()), 0);
  alloc.active_groups = {0};

  for (ApIndex n = 0; n < scenario.num_aps(); ++n) {
    Rng rng(derive_seed(config.seed, static_cast<std::uint64_t>(n)));
    std::vector<StaIndex> stas = scenario.stas_of(n);
    shuffle(stas.begin(), stas.end(), rng);
    stas.resize(std::min(stas.size(), n_rus));

    std::vector<RuIndex> rus(n_rus);
    std::iota(rus.begin(), rus.end(), 0);
    shuffle(rus.begin(), rus.end(), rng);

    double power = params.p_max_sta_mw;
    const double total = power * static_cast<double>(stas.size());
    if (total > params.p_max_ap_mw) {
      if (config.cap_mode == CapMode::kScale) {
        power = params.p_max_ap_mw / static_cast<double>(stas.size());
      } else {
        // Weakest link = farthest STA; ties keep the lower index.
        const Point& ap = scenario.ap_positions[static_cast<std::size_t>(n)];
        std::vector<std::size_t> by_gain(stas.size());
        std::iota(by_gain.begin(), by_gain.end(), 0);
        std::stable_sort(by_gain.begin(), by_gain.end(), [&](std::size_t a, std::size_t b) {
          const double da = distance(scenario.sta_positions[static_cast<std::size_t>(stas[a])], ap);
          const double db = distance(scenario.sta_positions[static_cast<std::size_t>(stas[b])], ap);
          if (da != db) return da < db;
          return stas[a] < stas[b];
        });
        const auto keep = static_cast<std::size_t>(params.p_max_ap_mw / power);
        std::vector<StaIndex> kept_stas;
        std::vector<RuIndex> kept_rus;
        std::vector<std::size_t> kept(by_gain.begin(),
                                      by_gain.begin() + static_cast<std::ptrdiff_t>(keep));
        std::sort(kept.begin(), kept.end());
        for (std::size_t i : kept) {
          kept_stas.push_back(stas[i]);
          kept_rus.push_back(rus[i]);
        }
        stas = std::move(kept_stas);
        rus = std::move(kept_rus);
      }
    }
    for (std::size_t i = 0; i < stas.size(); ++i) {
      alloc.assign(stas[i], rus[i], power);
    }
  }
  return alloc;
}

}  // namespace mapc
