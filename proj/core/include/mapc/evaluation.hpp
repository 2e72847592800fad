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

#ifndef MAPC_EVALUATION_HPP_
#define MAPC_EVALUATION_HPP_

#include "mapc/types.hpp"

namespace mapc {

// Throws StructuralError unless the allocation and gain matrix match the
// scenario's dimensions and every assigned RU index lies in [0, num_rus).
void check_structure(const Scenario& scenario, const GainMatrix& gains,
                     const Allocation& alloc);
void check_structure(const Scenario& scenario, const Allocation& alloc);

// Downlink SINR of STA u on its RU, counting every other STA on the same RU
// as an interferer through the gain from that STA's serving AP to u.
// Unassigned STAs (and STAs with zero power) have SINR 0.
double compute_sinr(const Scenario& scenario, const GainMatrix& gains,
                    const Allocation& alloc, StaIndex u);

// Per-STA SINR and Shannon throughput (RU bandwidth x log2(1 + SINR)),
// their sum, and the power each AP spends.
EvaluationResult evaluate(const Scenario& scenario, const GainMatrix& gains,
                          const Allocation& alloc);

// Shannon rate of one RU in bit/s.
double ru_throughput_bps(const NetworkParams& params, double sinr);

// 100 * (test - baseline) / baseline. Throws UndefinedGainError when the
// baseline total is not positive.
double throughput_gain(const EvaluationResult& test,
                       const EvaluationResult& baseline);
double throughput_gain(double test_total_bps, double baseline_total_bps);

}  // namespace mapc

#endif  // MAPC_EVALUATION_HPP_
