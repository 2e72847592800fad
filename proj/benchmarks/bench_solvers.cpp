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

#include <benchmark/benchmark.h>

#include "mapc/baseline.hpp"
#include "mapc/evaluation.hpp"
#include "mapc/exact.hpp"
#include "mapc/heuristic.hpp"
#include "mapc/propagation.hpp"

namespace {

mapc::Scenario scenario(int n_aps, int n_stas, int n_rus, std::uint64_t seed) {
  auto p = mapc::NetworkParams::reference();
  p.num_rus = n_rus;
  mapc::PlacementConfig pc;
  pc.seed = seed;
  return mapc::generate_scenario(n_aps, n_stas, p, pc);
}

void BM_Heuristic(benchmark::State& state) {
  const auto s = scenario(4, static_cast<int>(state.range(0)), 10, 7);
  const auto g = mapc::build_gain_matrix(s);
  auto cfg = mapc::HeuristicConfig::from_params(s.params);
  cfg.size_search = state.range(1) ? mapc::SizeSearch::kBestThroughput
                                   : mapc::SizeSearch::kFirstFeasible;
  for (auto _ : state) benchmark::DoNotOptimize(mapc::run_heuristic(s, g, cfg));
}
BENCHMARK(BM_Heuristic)->ArgsProduct({{8, 16, 24}, {0, 1}})->Unit(benchmark::kMicrosecond);

void BM_Baseline(benchmark::State& state) {
  const auto s = scenario(4, static_cast<int>(state.range(0)), 10, 7);
  std::uint64_t seed = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(mapc::non_coordinated_allocate(s, {++seed, mapc::CapMode::kScale}));
}
BENCHMARK(BM_Baseline)->Arg(8)->Arg(24);

void BM_Evaluate(benchmark::State& state) {
  const auto s = scenario(4, 24, 10, 7);
  const auto g = mapc::build_gain_matrix(s);
  const auto a = mapc::non_coordinated_allocate(s, {1, mapc::CapMode::kScale});
  for (auto _ : state) benchmark::DoNotOptimize(mapc::evaluate(s, g, a));
}
BENCHMARK(BM_Evaluate);

// Exact search on the largest default-limit shapes.
void BM_Exact(benchmark::State& state) {
  const auto s = scenario(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)),
                          static_cast<int>(state.range(2)), 3);
  const auto g = mapc::build_gain_matrix(s);
  mapc::ExactConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(mapc::solve_exact(s, g, cfg));
}
BENCHMARK(BM_Exact)
    ->Args({2, 4, 2})
    ->Args({3, 6, 3})
    ->Args({4, 8, 4})
    ->Unit(benchmark::kMillisecond);

}  // namespace
