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

#include "mapc/experiments.hpp"

namespace {

// The STA-count sweep at full size: 9 points x 20 instances.
void BM_StaCountSweep(benchmark::State& state) {
  mapc::SweepSpec spec;
  for (int u = 8; u <= 24; u += 2) spec.points.push_back(u);
  spec.workers = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mapc::run_sweep(spec));
}
BENCHMARK(BM_StaCountSweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_FormatOutputs(benchmark::State& state) {
  mapc::SweepSpec spec;
  for (int u = 8; u <= 24; u += 2) spec.points.push_back(u);
  const auto rows = mapc::run_sweep(spec);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mapc::format_csv(rows));
    benchmark::DoNotOptimize(mapc::render_plot_svg(rows));
  }
}
BENCHMARK(BM_FormatOutputs);

}  // namespace

BENCHMARK_MAIN();
