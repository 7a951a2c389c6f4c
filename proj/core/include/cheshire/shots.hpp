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

#ifndef CHESHIRE_SHOTS_HPP
#define CHESHIRE_SHOTS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cheshire/duality.hpp"
#include "cheshire/fit.hpp"
#include "cheshire/ite.hpp"
#include "cheshire/rng.hpp"

namespace cheshire {

/// Detector counts at one attenuation setting. reference_counts is the
/// undisturbed (no filter) tally n0, disturbed_counts the filtered tally n;
/// incidence is the ordinate fed to the line fit: n/n0 for sampled counts,
/// the exact probability ratio in exact mode.
struct CountRecord {
  std::string observable;
  double transmission;
  double interaction_time;
  std::uint64_t reference_counts;
  std::uint64_t disturbed_counts;
  double incidence;
  /// Expected detected photons per acquisition window. Not stored in the
  /// CSV form; parsed records carry 0 here.
  double mean_flux;
};

enum class SamplingMode {
  /// Counts are rounded expectations and incidence is the exact probability
  /// ratio; no randomness, seed ignored.
  Exact,
  /// Counts are Poisson draws and incidence is n/n0.
  Poisson,
};

/// One Poisson(lambda * prob) draw from a stream seeded with seed.
/// Throws std::invalid_argument for prob outside [0,1] or lambda <= 0.
std::uint64_t sample_counts(double prob, double lambda, std::uint64_t seed);

/// Simulates one attenuation sweep for one observable: per transmission,
/// tally a reference acquisition (no filter) and a disturbed one (filter
/// inserted), both with expected flux lambda times the click probability.
/// Records are ordered by ascending interaction time. Identical arguments
/// give bit-identical records. Throws ZeroReference if a reference tally
/// comes out 0 (lambda far too small for the readout to make sense).
std::vector<CountRecord> run_trial(const DualityParams& params,
                                   const PathAttributeObservable& obs,
                                   const AttenuationSchedule& schedule, double lambda,
                                   std::uint64_t seed,
                                   SamplingMode mode = SamplingMode::Poisson);

/// Ordinary least squares over the records' (interaction_time, incidence).
FitResult fit_records(const std::vector<CountRecord>& records);

/// -slope/2 of fit_records, with the fit's slope error halved alongside.
WeakValueEstimate weak_value_from_records(const std::vector<CountRecord>& records);

/// Parametric bootstrap of the weak-value estimate: each count is resampled
/// as Poisson with mean equal to the observed count, the line is refitted,
/// and the standard deviation across resamples (ddof 1) is returned.
/// Requires resamples >= 100. Throws ZeroReference if a resampled reference
/// tally is 0.
double monte_carlo_error(const std::vector<CountRecord>& records, int resamples,
                         std::uint64_t seed);

/// CSV with header `observable,transmission,t,n0,n,N`, one row per record,
/// one trailing newline. parse(emit(x)) re-emits byte-identically.
std::string records_to_csv(const std::vector<CountRecord>& records);
std::vector<CountRecord> records_from_csv(std::string_view csv);

}  // namespace cheshire

#endif
