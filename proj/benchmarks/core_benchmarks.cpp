// Copyright 2026 The cheshire Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <numbers>

#include "cheshire/duality.hpp"
#include "cheshire/ite.hpp"
#include "cheshire/optics.hpp"
#include "cheshire/rng.hpp"
#include "cheshire/shots.hpp"
#include "cheshire/tomography.hpp"

namespace {

using namespace cheshire;

constexpr double kAlpha = std::numbers::pi / 4;

void BM_ClosedFormWeakValues(benchmark::State& state) {
  double a = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(closed_form_weak_values(a));
    a = a < 1.4 ? a + 1e-9 : 0.1;
  }
}
BENCHMARK(BM_ClosedFormWeakValues);

void BM_WeakValueExact(benchmark::State& state) {
  const PureState psi_i = preselection(DualityParams(kAlpha));
  const PureState psi_f = postselection();
  const auto obs = observable(PathSide::R, Attribute::Particle);
  for (auto _ : state) {
    benchmark::DoNotOptimize(weak_value_exact(obs.op, psi_i, psi_f));
  }
}
BENCHMARK(BM_WeakValueExact);

void BM_NormalizedIncidence(benchmark::State& state) {
  const PureState psi_i = preselection(DualityParams(kAlpha));
  const PureState psi_f = postselection();
  const auto obs = observable(PathSide::R, Attribute::Particle);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        normalized_incidence(psi_i, psi_f, obs.op, 0.01));
  }
}
BENCHMARK(BM_NormalizedIncidence);

void BM_BuildSetup(benchmark::State& state) {
  const DualityParams params(kAlpha);
  const NdTarget nd{PathSide::R, Attribute::Particle, 0.95};
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_setup(params, nd));
  }
}
BENCHMARK(BM_BuildSetup);

void BM_RunCircuit(benchmark::State& state) {
  const DualityParams params(kAlpha);
  const Circuit c =
      build_setup(params, NdTarget{PathSide::R, Attribute::Particle, 0.95});
  const PureState input = toolbox_input(params);
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_circuit(c, input));
  }
}
BENCHMARK(BM_RunCircuit);

void BM_CircuitToJson(benchmark::State& state) {
  const Circuit c = build_setup(
      DualityParams(kAlpha), NdTarget{PathSide::R, Attribute::Particle, 0.95});
  for (auto _ : state) {
    benchmark::DoNotOptimize(c.to_json());
  }
}
BENCHMARK(BM_CircuitToJson);

void BM_SamplePoisson(benchmark::State& state) {
  const double lambda = double(state.range(0));
  Rng rng(42);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_counts(0.5, lambda, seed++));
  }
  state.SetLabel(lambda < 20 ? "inversion" : "rejection");
}
BENCHMARK(BM_SamplePoisson)->Arg(5)->Arg(1000000);

void BM_RunTrialPoisson(benchmark::State& state) {
  const DualityParams params(kAlpha);
  const auto obs = observable(PathSide::R, Attribute::Particle);
  const auto schedule = AttenuationSchedule::default_schedule();
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        run_trial(params, obs, schedule, 1e6, seed++, SamplingMode::Poisson));
  }
}
BENCHMARK(BM_RunTrialPoisson);

void BM_MonteCarloError(benchmark::State& state) {
  const auto records = run_trial(
      DualityParams(kAlpha), observable(PathSide::R, Attribute::Particle),
      AttenuationSchedule::default_schedule(), 1e6, 3, SamplingMode::Poisson);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(monte_carlo_error(records, 200, seed++));
  }
}
BENCHMARK(BM_MonteCarloError);

void BM_TomographyReconstruct(benchmark::State& state) {
  const PureState psi = bs2_output_state(DualityParams(kAlpha)).normalized();
  const auto settings =
      simulate_tomography(DensityMatrix::from_pure(psi), 1e6, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(reconstruct_linear(settings));
  }
}
BENCHMARK(BM_TomographyReconstruct);

}  // namespace

BENCHMARK_MAIN();
