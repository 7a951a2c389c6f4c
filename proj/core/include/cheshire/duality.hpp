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

#ifndef CHESHIRE_DUALITY_HPP
#define CHESHIRE_DUALITY_HPP

#include <array>
#include <string>

#include "cheshire/qstate.hpp"

namespace cheshire {

// The abstract stage of the separation protocol lives on the 4-dim space
// {path L, R} x {attribute Particle, Wave}, basis ordered {LP, LW, RP, RW}.
// A photon is pre-selected in (|L> + |R>)(cos a |P> + sin a |W>)/sqrt(2),
// post-selected on (|L>|W> + |R>|P>)/sqrt(2), and the four projectors
// |path><path| (x) |attr><attr| are probed through their weak values.

enum class PathSide { L, R };
enum class Attribute { Particle, Wave };

/// Protocol parameters. alpha sets the particle/wave mixture of the input;
/// phi1 and phi2 are the encoding phases of the wave and particle
/// polarization states. Weak values must not depend on phi1, phi2; they are
/// carried everywhere so that independence is testable instead of assumed.
class DualityParams {
 public:
  /// Throws std::domain_error unless alpha in [0, pi/2] and phi1, phi2 in
  /// [0, 2*pi). alpha outside the closed interval is rejected, not wrapped:
  /// the closed-form denominator cos a + sin a changes sign beyond it.
  explicit DualityParams(double alpha, double phi1 = 0.0, double phi2 = 0.0);

  double alpha() const { return alpha_; }
  double phi1() const { return phi1_; }
  double phi2() const { return phi2_; }

 private:
  double alpha_;
  double phi1_;
  double phi2_;
};

/// One of the four path (x) attribute projectors.
struct PathAttributeObservable {
  PathSide path;
  Attribute attribute;
  LinearOperator op;

  /// Two-letter id, attribute first: "PL", "PR", "WL", "WR".
  std::string id() const;
};

/// Basis {"LP", "LW", "RP", "RW"}, the ordering used by every 4-dim value.
const Basis& duality_basis();

const Basis& path_basis();       // {"L", "R"}
const Basis& attribute_basis();  // {"P", "W"}

/// Polarization ket the wave attribute is encoded into on the down rail:
/// e^{i phi1/2} (cos(phi1/2) |Hd> - i sin(phi1/2) |Vd>). Unit norm.
PureState wave_state(double phi1);

/// Polarization ket the particle attribute is encoded into on the up rail:
/// (|Hu> + e^{i phi2} |Vu>)/sqrt(2). Both components weigh 1/2 for every
/// phi2, which is what makes the attribute particle-like.
PureState particle_state(double phi2);

/// (|L> + |R>)(cos a |P> + sin a |W>)/sqrt(2).
PureState preselection(const DualityParams& p);

/// (|L>|W> + |R>|P>)/sqrt(2).
PureState postselection();

PathAttributeObservable observable(PathSide path, Attribute attr);

/// All four projectors in id order PL, PR, WL, WR.
std::array<PathAttributeObservable, 4> all_observables();

/// The evolution gate applied between the beam splitters: identity on the
/// |L> block, particle <-> wave exchange on the |R> block. Unitary,
/// Hermitian, self-inverse.
LinearOperator attribute_swap_on_right();

/// The abstract half of the recombining beam splitter: Hadamard on the path
/// qubit, identity on the attribute.
LinearOperator path_beam_splitter();

/// The post-selected port after the recombiner: photons exiting in
/// |L> (x) |W>. Detecting there is equivalent to projecting the
/// pre-beam-splitter state onto postselection().
PureState success_port_state();

/// Checks the post-selection by running the detection chain backwards:
/// a wave-attribute photon at the success detector, pulled back through the
/// recombining beam splitter and the swap gate, must land on postselection()
/// up to global phase (within 1e-12).
bool verify_postselection_backward();

/// Same check with a caller-supplied swap gate, for counterfactual tests
/// (an identity gate must fail the check).
bool verify_postselection_backward(const LinearOperator& swap_gate);

/// State in the success output port of the recombining beam splitter,
/// i.e. path_beam_splitter() * attribute_swap_on_right() * preselection().
/// This is the 2-qubit state the tomography stage measures.
PureState bs2_output_state(const DualityParams& p);

/// <psi_f|A|psi_i> / <psi_f|psi_i>. Throws OrthogonalSelection when
/// |<psi_f|psi_i>| < 1e-14. Anomalous (outside [0,1], complex) results are
/// legitimate for general inputs.
Complex weak_value_exact(const LinearOperator& a, const PureState& psi_i,
                         const PureState& psi_f);

/// The four weak values in id order. For this protocol all are real:
/// w_PL = w_WR = 0, w_PR = cos a/(cos a + sin a), w_WL = sin a/(cos a + sin a).
struct ClosedFormWeakValues {
  double particle_left;
  double particle_right;
  double wave_left;
  double wave_right;

  double by_id(const std::string& id) const;
};

/// Throws std::domain_error outside [0, pi/2]. Evaluated via tan a, with
/// wave_left as the exact complement of particle_right, so the four values
/// sum to 1 exactly and alpha = pi/4 returns exactly 0.5 for both nonzero
/// components.
ClosedFormWeakValues closed_form_weak_values(double alpha);

}  // namespace cheshire

#endif
