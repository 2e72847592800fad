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

#ifndef MAPC_BASELINE_HPP_
#define MAPC_BASELINE_HPP_

#include <cstdint>
#include <string_view>

#include "mapc/types.hpp"

namespace mapc {

// What an AP does when its STAs at full power exceed its budget.
enum class CapMode {
  kScale,     // scale every STA of the AP down uniformly to the budget
  kTruncate,  // drop the weakest-gain STAs until the budget holds
};

std::string_view to_string(CapMode m);
CapMode parse_cap_mode(std::string_view text);

struct BaselineConfig {
  std::uint64_t seed = 1;
  CapMode cap_mode = CapMode::kScale;
};

// Non-coordinated operation: every AP independently serves a uniformly
// random subset of min(|STAs|, J) of its STAs on distinct uniformly random
// RUs at the per-STA power cap. All APs share one group, so RU collisions
// across BSSs are allowed and simply interfere. AP n draws from the
// sub-stream derive_seed(seed, n).
Allocation non_coordinated_allocate(const Scenario& scenario,
                                    const BaselineConfig& config);

}  // namespace mapc

#endif  // MAPC_BASELINE_HPP_
