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

#ifndef CHESHIRE_ITE_HPP
#define CHESHIRE_ITE_HPP

#include <vector>

#include "cheshire/duality.hpp"
#include "cheshire/qstate.hpp"

namespace cheshire {

// Weak values are read out through imaginary-time evolution: attenuating the
// projected component by e^{-A t} multiplies the post-selection rate by
// N(t) = |1 + (e^{-t} - 1) w|^2 where w is the weak value of A, so
// w = -(dN/dt)/2 at t = 0 for real w. An intensity transmission T realizes
// interaction time t through T = e^{-2t}.

/// The attenuation settings of one sweep. Transmissions are validated into
/// (0, 1], deduplicated nowhere (duplicates rejected), and stored sorted
/// descending so the corresponding times ascend.
class AttenuationSchedule {
 public:
  /// Throws std::invalid_argument unless every T is in (0, 1] and there are
  /// at least 2 distinct values.
  explicit AttenuationSchedule(std::vector<double> transmissions);

  /// Five transmissions {0.984, 0.988, 0.992, 0.996, 1.0}. Kept within 1.6%
  /// of unity so a straight line fits N(t) to well under the 1% bias the
  /// slope readout tolerates.
  static AttenuationSchedule default_schedule();

  /// Sorted descending, so index i pairs with times()[i].
  const std::vector<double>& transmissions() const { return transmissions_; }

  /// transmission_to_time of each entry; ascending.
  std::vector<double> times() const;

  std::size_t size() const { return transmissions_.size(); }

 private:
  std::vector<double> transmissions_;
};

struct ItePoint {
  double t;
  double incidence;
};

/// Exact normalized-incidence curve for one observable. Points ascend in t;
/// when t = 0 is present its incidence is exactly 1.
struct IteCurve {
  PathAttributeObservable observable;
  std::vector<ItePoint> points;
};

/// t = -ln(T)/2. Throws std::domain_error outside (0, 1]. T = 1 gives +0.0.
double transmission_to_time(double transmission);

/// |<psi_f| e^{-A t} |psi_i>|^2 / |<psi_f|psi_i>|^2 for projector A.
/// Exactly 1 at t = 0. Throws OrthogonalSelection on zero overlap and
/// std::domain_error for t < 0 or non-projector A.
double normalized_incidence(const PureState& psi_i, const PureState& psi_f,
                            const LinearOperator& projector, double t);

/// |1 + (e^{-t} - 1) w|^2, the closed form of normalized_incidence when w is
/// the weak value of the projector. Its t-derivative at 0 is -2 Re(w).
double analytic_incidence(Complex weak_value, double t);

/// dN/dt at t = 0, by a second-order one-sided difference with step 1e-6
/// (N is only defined for t >= 0, so the stencil cannot straddle 0).
/// The weak value is -slope/2.
double slope_at_origin(const PureState& psi_i, const PureState& psi_f,
                       const LinearOperator& projector);

/// Exact (noise-free) curve over the schedule, ascending in t.
IteCurve exact_curve(const PureState& psi_i, const PureState& psi_f,
                     const PathAttributeObservable& obs,
                     const AttenuationSchedule& schedule);

}  // namespace cheshire

#endif
