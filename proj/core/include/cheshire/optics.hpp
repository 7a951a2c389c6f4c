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

#ifndef CHESHIRE_OPTICS_HPP
#define CHESHIRE_OPTICS_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cheshire/duality.hpp"
#include "cheshire/qstate.hpp"

namespace cheshire {

// Physical layer: a single photon over 8 optical modes, indexed
// side (L/R) x rail (up/down) x polarization (H/V). The 4-dim protocol
// space embeds here by storing each path amplitude in its side and each
// attribute in a (rail, polarization ket) pair: particle in the up rail
// with polarization enc_P, wave in the down rail with enc_W.
//
// Mapping from bench elements to this model:
//   beam displacer / PBS  -> V hops rails, H stays (permutation)
//   waveplates            -> 2x2 Jones matrix on one rail's {H, V}
//   path beam splitter    -> 2x2 mixing of L and R per (rail, pol)
//   ND filter             -> sqrt(T) amplitude scaling, remainder is loss
//   exchange gate         -> swaps (up, enc_P) <-> (down, enc_W) on one side
// The final routing stage (displacers and a PBS fanning the two rails out
// onto separate detectors) only permutes modes within a fixed detector's
// subset, so the simulated circuit routes rails to detectors directly.

enum class Rail { Up, Down };
enum class Polarization { H, V };

struct ModeLabel {
  PathSide side;
  Rail rail;
  Polarization pol;
};

/// Canonical index: side*4 + rail*2 + pol with L,up,H = 0.
int mode_index(PathSide side, Rail rail, Polarization pol);
int mode_index(const ModeLabel& m);
ModeLabel mode_at(int index);

/// Three-letter label, e.g. "LuH", "RdV".
std::string mode_name(int index);

/// The 8 labels in index order.
const Basis& optics_basis();

/// Which beam-splitter matrix the path-mixing elements use. Final
/// probabilities are convention-independent as long as both splitters agree;
/// the convention decides which output port interferes constructively.
enum class BsConvention {
  Hadamard,        // (1/sqrt2) [[1, 1], [1, -1]]
  SymmetricPhase,  // (1/sqrt2) [[1, i], [i, 1]]
};

/// Output port that carries the post-selected (constructive) signal.
PathSide success_side(BsConvention conv);

enum class ElementKind { Hwp, Qwp, Bd, Bs, Pbs, Nd, SwapU };

/// One element of the optical train, with enough parameters to expand into
/// its full 8x8 mode action.
class OpticalElement {
 public:
  static OpticalElement hwp(PathSide side, Rail rail, double theta);
  static OpticalElement qwp(PathSide side, Rail rail, double theta);
  /// Routes V between rails on one side; H passes through.
  static OpticalElement beam_displacer(PathSide side);
  /// Mixes L and R for every (rail, pol).
  static OpticalElement beam_splitter(BsConvention conv);
  /// Same mode action as the displacer (H transmits, V reflects); kept as a
  /// distinct kind because it plays a different role in a bench layout.
  static OpticalElement polarizing_beam_splitter(PathSide side);
  /// Amplitude sqrt(transmission) on the listed modes. The only non-unitary
  /// element. Throws for T outside (0, 1] or bad mode indices.
  static OpticalElement nd_filter(std::vector<int> modes, double transmission);
  /// The evolution gate on one side: exchanges the up-rail particle
  /// encoding with the down-rail wave encoding (and their orthogonal
  /// complements), unitary and self-inverse.
  static OpticalElement swap_u(PathSide side, double phi1, double phi2);

  ElementKind kind() const { return kind_; }
  /// Modes the element acts non-trivially on.
  const std::vector<int>& targets() const { return targets_; }
  double theta() const { return theta_; }
  double transmission() const { return transmission_; }
  BsConvention convention() const { return convention_; }

  /// Full 8x8 action (identity outside targets()).
  Eigen::MatrixXcd expanded() const;

  /// True for every kind except Nd with T < 1.
  bool is_unitary(double tol = kStructuralTol) const;

 private:
  OpticalElement() = default;

  ElementKind kind_{};
  PathSide side_{};
  Rail rail_{};
  double theta_ = 0.0;
  double transmission_ = 1.0;
  double phi1_ = 0.0;
  double phi2_ = 0.0;
  BsConvention convention_ = BsConvention::Hadamard;
  std::vector<int> targets_;

  friend class Circuit;
};

/// Assignment of modes to the three detectors, in order D1, D2, D3.
struct DetectorMap {
  std::array<std::vector<int>, 3> modes;
};

struct DetectionProbabilities {
  double d1;
  double d2;
  double d3;
  /// Weight that reached no detector (absorbed by a filter).
  double loss;
};

class Circuit {
 public:
  /// Throws std::invalid_argument if detector subsets overlap or name
  /// invalid modes.
  Circuit(std::vector<OpticalElement> elements, DetectorMap detectors);

  const std::vector<OpticalElement>& elements() const { return elements_; }
  const DetectorMap& detectors() const { return detectors_; }

  /// Product of all element actions, last element leftmost.
  Eigen::MatrixXcd transfer_matrix() const;

  /// JSON document describing elements (kind, angles in degrees, target
  /// modes) and the detector map. Byte-deterministic; parseable back by
  /// standard JSON tooling.
  std::string to_json() const;

 private:
  std::vector<OpticalElement> elements_;
  DetectorMap detectors_;
};

/// Jones matrices over basis {"H", "V"}, theta in radians.
/// hwp: [[cos 2t, sin 2t], [sin 2t, -cos 2t]].
LinearOperator jones_hwp(double theta);
/// qwp: e^{-i pi/4} [[cos^2 t + i sin^2 t, (1-i) sin t cos t],
///                   [(1-i) sin t cos t, sin^2 t + i cos^2 t]].
LinearOperator jones_qwp(double theta);

/// The polarization-in-rail encoding of the 4-dim protocol space.
class Encoding {
 public:
  Encoding(double phi1, double phi2);

  /// Polarization ket carrying the particle attribute (up rail):
  /// (e^{-i phi2/2}, e^{+i phi2/2})/sqrt(2). Equals particle_state(phi2) up
  /// to the global phase e^{-i phi2/2}, which is what the preparation
  /// waveplates actually emit (up to one circuit-global factor).
  Eigen::Vector2cd particle_polarization() const;
  /// Wave attribute ket (down rail): (cos(phi1/2), -i sin(phi1/2)).
  Eigen::Vector2cd wave_polarization() const;

  /// Isometry from the {LP, LW, RP, RW} space into the 8 modes.
  PureState embed(const PureState& abstract) const;
  /// Inverse on the encoded subspace. Throws std::domain_error when the
  /// residual outside the subspace exceeds 1e-10 in norm.
  PureState project(const PureState& physical) const;

  double phi1() const { return phi1_; }
  double phi2() const { return phi2_; }

 private:
  double phi1_;
  double phi2_;
};

/// Attenuation target: which path (x) attribute component the filter sits
/// on, i.e. which side and rail it blocks.
struct NdTarget {
  PathSide path;
  Attribute attribute;
  double transmission;
};

/// The full simulated bench for given protocol parameters, in element
/// order: displacer splitting the toolbox input into rails; per-rail
/// preparation waveplates; first path splitter; optional ND filter over the
/// targeted component's two modes; exchange gate on the right side; second
/// path splitter. Detectors: D1 = success-port down rail (post-selection),
/// D3 = success-port up rail, D2 = everything on the other port.
Circuit build_setup(const DualityParams& p, std::optional<NdTarget> nd = std::nullopt,
                    BsConvention conv = BsConvention::Hadamard);

/// cos(alpha)|LuH> + sin(alpha)|LuV>, the state entering the first
/// displacer.
PureState toolbox_input(const DualityParams& p);

/// Applies every element in order.
PureState propagate(const Circuit& c, const PureState& input);

/// Detector weights of the propagated state. Input must be normalized
/// (within 1e-12); probabilities plus loss sum to 1 within 1e-12.
DetectionProbabilities run_circuit(const Circuit& c, const PureState& input);

}  // namespace cheshire

#endif
