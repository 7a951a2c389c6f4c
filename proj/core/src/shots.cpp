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

#include "cheshire/shots.hpp"

#include <cmath>
#include <stdexcept>

#include "cheshire/errors.hpp"
#include "cheshire/textio.hpp"

namespace cheshire {

namespace {

constexpr std::string_view kCsvHeader = "observable,transmission,t,n0,n,N";

std::vector<DataPoint> to_points(const std::vector<CountRecord>& records) {
  std::vector<DataPoint> pts;
  pts.reserve(records.size());
  for (const auto& r : records) {
    pts.push_back({r.interaction_time, r.incidence});
  }
  return pts;
}

}  // namespace

std::uint64_t sample_counts(double prob, double lambda, std::uint64_t seed) {
  if (!(prob >= 0.0 && prob <= 1.0)) {
    throw std::invalid_argument("probability must lie in [0, 1]");
  }
  if (!(lambda > 0.0)) {
    throw std::invalid_argument("mean flux must be positive");
  }
  Rng rng(seed);
  return sample_poisson(rng, lambda * prob);
}

std::vector<CountRecord> run_trial(const DualityParams& params,
                                   const PathAttributeObservable& obs,
                                   const AttenuationSchedule& schedule, double lambda,
                                   std::uint64_t seed, SamplingMode mode) {
  if (!(lambda > 0.0)) {
    throw std::invalid_argument("mean flux must be positive");
  }
  const PureState psi_i = preselection(params);
  const PureState psi_f = postselection();
  const double p_ref = std::norm(inner_product(psi_f, psi_i));

  Rng rng(seed);
  std::vector<CountRecord> records;
  records.reserve(schedule.size());
  const auto& transmissions = schedule.transmissions();
  const auto times = schedule.times();
  for (std::size_t i = 0; i < transmissions.size(); ++i) {
    const double t = times[i];
    const double ratio = normalized_incidence(psi_i, psi_f, obs.op, t);
    const double p_dist = ratio * p_ref;
    CountRecord rec{obs.id(), transmissions[i], t, 0, 0, 0.0, lambda};
    if (mode == SamplingMode::Exact) {
      rec.reference_counts = std::uint64_t(std::llround(lambda * p_ref));
      rec.disturbed_counts = std::uint64_t(std::llround(lambda * p_dist));
      rec.incidence = ratio;
    } else {
      rec.reference_counts = sample_poisson(rng, lambda * p_ref);
      rec.disturbed_counts = sample_poisson(rng, lambda * p_dist);
      if (rec.reference_counts == 0) {
        throw ZeroReference("reference tally is 0; increase the mean flux");
      }
      rec.incidence = double(rec.disturbed_counts) / double(rec.reference_counts);
    }
    records.push_back(std::move(rec));
  }
  return records;
}

FitResult fit_records(const std::vector<CountRecord>& records) {
  return least_squares_line(to_points(records));
}

WeakValueEstimate weak_value_from_records(const std::vector<CountRecord>& records) {
  return weak_value_estimate(fit_records(records));
}

double monte_carlo_error(const std::vector<CountRecord>& records, int resamples,
                         std::uint64_t seed) {
  if (resamples < 100) {
    throw std::invalid_argument("need at least 100 resamples");
  }
  const Rng master(seed);
  std::vector<DataPoint> pts(records.size());
  double sum = 0.0, sum_sq = 0.0;
  for (int r = 0; r < resamples; ++r) {
    Rng rng = master.child(std::uint64_t(r));
    for (std::size_t i = 0; i < records.size(); ++i) {
      const std::uint64_t n0 = sample_poisson(rng, double(records[i].reference_counts));
      const std::uint64_t n = sample_poisson(rng, double(records[i].disturbed_counts));
      if (n0 == 0) {
        throw ZeroReference("resampled reference tally is 0");
      }
      pts[i] = {records[i].interaction_time, double(n) / double(n0)};
    }
    const double w = weak_value_estimate(least_squares_line(pts)).value;
    sum += w;
    sum_sq += w * w;
  }
  const double n = resamples;
  const double var = (sum_sq - sum * sum / n) / (n - 1);
  return std::sqrt(var > 0.0 ? var : 0.0);
}

std::string records_to_csv(const std::vector<CountRecord>& records) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& r : records) {
    out += r.observable;
    out += ',';
    out += format_double(r.transmission);
    out += ',';
    out += format_double(r.interaction_time);
    out += ',';
    out += format_u64(r.reference_counts);
    out += ',';
    out += format_u64(r.disturbed_counts);
    out += ',';
    out += format_double(r.incidence);
    out += '\n';
  }
  return out;
}

std::vector<CountRecord> records_from_csv(std::string_view csv) {
  const auto lines = split_lines(csv);
  if (lines.empty() || lines[0] != kCsvHeader) {
    throw std::invalid_argument("count CSV must start with header " +
                                std::string(kCsvHeader));
  }
  std::vector<CountRecord> records;
  records.reserve(lines.size() - 1);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto fields = split_fields(lines[i]);
    if (fields.size() != 6) {
      throw std::invalid_argument("count CSV row needs 6 fields");
    }
    records.push_back(CountRecord{std::string(fields[0]), parse_double(fields[1]),
                                  parse_double(fields[2]), parse_u64(fields[3]),
                                  parse_u64(fields[4]), parse_double(fields[5]), 0.0});
  }
  return records;
}

}  // namespace cheshire
