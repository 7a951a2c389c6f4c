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

#include "cheshire/ite.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "cheshire/errors.hpp"

namespace cheshire {

AttenuationSchedule::AttenuationSchedule(std::vector<double> transmissions)
    : transmissions_(std::move(transmissions)) {
  if (transmissions_.size() < 2) {
    throw std::invalid_argument("schedule needs at least 2 transmissions");
  }
  for (double t : transmissions_) {
    if (!(t > 0.0 && t <= 1.0)) {
      throw std::invalid_argument("transmissions must lie in (0, 1]");
    }
  }
  std::sort(transmissions_.begin(), transmissions_.end(), std::greater<>());
  if (std::adjacent_find(transmissions_.begin(), transmissions_.end()) !=
      transmissions_.end()) {
    throw std::invalid_argument("transmissions must be distinct");
  }
}

AttenuationSchedule AttenuationSchedule::default_schedule() {
  return AttenuationSchedule({0.984, 0.988, 0.992, 0.996, 1.0});
}

std::vector<double> AttenuationSchedule::times() const {
  std::vector<double> out;
  out.reserve(transmissions_.size());
  for (double t : transmissions_) {
    out.push_back(transmission_to_time(t));
  }
  return out;
}

double transmission_to_time(double transmission) {
  if (!(transmission > 0.0 && transmission <= 1.0)) {
    throw std::domain_error("transmission must lie in (0, 1]");
  }
  const double t = -std::log(transmission) / 2;
  return t == 0.0 ? 0.0 : t;  // -log(1)/2 is -0.0; keep times signless
}

double normalized_incidence(const PureState& psi_i, const PureState& psi_f,
                            const LinearOperator& projector, double t) {
  if (t < 0.0) {
    throw std::domain_error("interaction time must be non-negative");
  }
  const Complex reference = inner_product(psi_f, psi_i);
  if (std::abs(reference) < 1e-14) {
    throw OrthogonalSelection("pre- and post-selection overlap is numerically zero");
  }
  const PureState evolved = apply(projector_exponential(projector, t), psi_i);
  const Complex disturbed = inner_product(psi_f, evolved);
  return std::norm(disturbed) / std::norm(reference);
}

double analytic_incidence(Complex weak_value, double t) {
  return std::norm(1.0 + std::expm1(-t) * weak_value);
}

double slope_at_origin(const PureState& psi_i, const PureState& psi_f,
                       const LinearOperator& projector) {
  constexpr double h = 1e-6;
  const double n0 = normalized_incidence(psi_i, psi_f, projector, 0.0);
  const double n1 = normalized_incidence(psi_i, psi_f, projector, h);
  const double n2 = normalized_incidence(psi_i, psi_f, projector, 2 * h);
  return (4 * n1 - 3 * n0 - n2) / (2 * h);
}

IteCurve exact_curve(const PureState& psi_i, const PureState& psi_f,
                     const PathAttributeObservable& obs,
                     const AttenuationSchedule& schedule) {
  IteCurve curve{obs, {}};
  curve.points.reserve(schedule.size());
  for (double t : schedule.times()) {
    curve.points.push_back({t, normalized_incidence(psi_i, psi_f, obs.op, t)});
  }
  return curve;
}

}  // namespace cheshire
