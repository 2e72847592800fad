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

#ifndef MAPC_IO_HPP_
#define MAPC_IO_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "mapc/exact.hpp"
#include "mapc/experiments.hpp"
#include "mapc/feasibility.hpp"
#include "mapc/propagation.hpp"
#include "mapc/types.hpp"

// JSON interchange. STA / AP indices are object keys ("0", "1", ...),
// powers are mW, throughputs bit/s, positions metres. Malformed documents
// raise DomainError; file problems raise IoError.
namespace mapc {

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

// Missing keys keep their defaults.
NetworkParams network_params_from_json(const std::string& text);
std::string network_params_to_json(const NetworkParams& params);
PlacementConfig placement_config_from_json(const std::string& text);

std::string scenario_to_json(const Scenario& scenario);
Scenario scenario_from_json(const std::string& text);

// "sta,x_m,y_m,ap" and "ap,x_m,y_m,-1" rows for plotting elsewhere.
std::string positions_csv(const Scenario& scenario);

std::string allocation_to_json(const Allocation& alloc);
Allocation allocation_from_json(const std::string& text);

std::string evaluation_to_json(const EvaluationResult& result);
std::string feasibility_to_json(const FeasibilityReport& report);

// Everything `solve` prints for one scenario and one solver.
struct SolveReport {
  std::string solver;
  Allocation allocation;
  EvaluationResult evaluation;
  FeasibilityReport feasibility;
  std::optional<ExactSolution> exact;  // search statistics
  std::vector<std::string> trace;      // heuristic trace lines
};
std::string solve_report_to_json(const SolveReport& report);

// Sweep configuration file. Only "kind" and "points" are required.
SweepSpec sweep_spec_from_json(const std::string& text);

}  // namespace mapc

#endif  // MAPC_IO_HPP_
