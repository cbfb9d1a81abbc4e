/*
 * Copyright (c) 2026 The sta-beam Authors.
 * SPDX-License-Identifier: Apache-2.0
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include "stabeam/beamform.hpp"
#include "stabeam/config.hpp"
#include "stabeam/pipeline.hpp"
#include "stabeam/postproc.hpp"

using namespace stabeam;

namespace {

const RunConfig& config() {
  static const RunConfig c = [] {
    RunConfig r;
    r.simulation.noise_std = 20.0;
    return r;
  }();
  return c;
}

const RfDataSet& dataset(SequenceMode mode) {
  static const RfDataSet sta = simulate_for(config(), SequenceMode::kSta);
  static const RfDataSet pa = simulate_for(config(), SequenceMode::kPa);
  return mode == SequenceMode::kPa ? pa : sta;
}

void BM_Simulate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(simulate_for(config(), SequenceMode::kSta));
}

void BM_Lri(benchmark::State& state) {
  const auto& rf = dataset(SequenceMode::kSta);
  const auto threads = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(beamform_lri(rf, 0, config().imaging.grid, Apodization::kRectangular, threads));
  state.SetItemsProcessed(state.iterations() * config().imaging.grid.pixel_count());
}

void BM_Hri(benchmark::State& state) {
  const auto& rf = dataset(SequenceMode::kSta);
  for (auto _ : state)
    benchmark::DoNotOptimize(synthesize_hri(beamform_all_lris(rf, config().imaging.grid)));
}

void BM_Pa(benchmark::State& state) {
  const auto& rf = dataset(SequenceMode::kPa);
  for (auto _ : state) benchmark::DoNotOptimize(beamform_pa(rf, config().imaging.grid));
}

void BM_Envelope(benchmark::State& state) {
  const auto hri = synthesize_hri(beamform_all_lris(dataset(SequenceMode::kSta), config().imaging.grid));
  for (auto _ : state) benchmark::DoNotOptimize(envelope(hri));
}

}  // namespace

BENCHMARK(BM_Simulate)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Lri)->Arg(1)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Hri)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Pa)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Envelope)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
