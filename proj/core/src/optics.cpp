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

#include "cheshire/optics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace cheshire {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

double to_degrees(double radians) { return radians * 180.0 / kPi; }

void check_mode(int index) {
  if (index < 0 || index >= 8) {
    throw std::invalid_argument("mode index out of range");
  }
}

Eigen::Matrix2cd bs_matrix(BsConvention conv) {
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  Eigen::Matrix2cd b;
  if (conv == BsConvention::Hadamard) {
    b << 1.0, 1.0, 1.0, -1.0;
  } else {
    b << 1.0, kI, kI, 1.0;
  }
  return inv_sqrt2 * b;
}

const char* kind_name(ElementKind kind) {
  switch (kind) {
    case ElementKind::Hwp: return "HWP";
    case ElementKind::Qwp: return "QWP";
    case ElementKind::Bd: return "BD";
    case ElementKind::Bs: return "BS";
    case ElementKind::Pbs: return "PBS";
    case ElementKind::Nd: return "ND";
    case ElementKind::SwapU: return "SWAP_U";
  }
  return "?";
}

}  // namespace

int mode_index(PathSide side, Rail rail, Polarization pol) {
  return (side == PathSide::L ? 0 : 4) + (rail == Rail::Up ? 0 : 2) +
         (pol == Polarization::H ? 0 : 1);
}

int mode_index(const ModeLabel& m) { return mode_index(m.side, m.rail, m.pol); }

ModeLabel mode_at(int index) {
  check_mode(index);
  return ModeLabel{index < 4 ? PathSide::L : PathSide::R,
                   (index & 2) ? Rail::Down : Rail::Up,
                   (index & 1) ? Polarization::V : Polarization::H};
}

std::string mode_name(int index) {
  const ModeLabel m = mode_at(index);
  std::string s;
  s += m.side == PathSide::L ? 'L' : 'R';
  s += m.rail == Rail::Up ? 'u' : 'd';
  s += m.pol == Polarization::H ? 'H' : 'V';
  return s;
}

const Basis& optics_basis() {
  static const Basis basis = [] {
    Basis b;
    for (int k = 0; k < 8; ++k) {
      b.push_back(mode_name(k));
    }
    return b;
  }();
  return basis;
}

PathSide success_side(BsConvention conv) {
  // With the Hadamard matrix the two-splitter chain is the identity on the
  // path qubit, so the signal interferes back into L; with the symmetric
  // matrix the chain is i*X and the signal lands on R.
  return conv == BsConvention::Hadamard ? PathSide::L : PathSide::R;
}

OpticalElement OpticalElement::hwp(PathSide side, Rail rail, double theta) {
  OpticalElement e;
  e.kind_ = ElementKind::Hwp;
  e.side_ = side;
  e.rail_ = rail;
  e.theta_ = theta;
  const int base = mode_index(side, rail, Polarization::H);
  e.targets_ = {base, base + 1};
  return e;
}

OpticalElement OpticalElement::qwp(PathSide side, Rail rail, double theta) {
  OpticalElement e = hwp(side, rail, theta);
  e.kind_ = ElementKind::Qwp;
  return e;
}

OpticalElement OpticalElement::beam_displacer(PathSide side) {
  OpticalElement e;
  e.kind_ = ElementKind::Bd;
  e.side_ = side;
  e.targets_ = {mode_index(side, Rail::Up, Polarization::V),
                mode_index(side, Rail::Down, Polarization::V)};
  return e;
}

OpticalElement OpticalElement::beam_splitter(BsConvention conv) {
  OpticalElement e;
  e.kind_ = ElementKind::Bs;
  e.convention_ = conv;
  e.targets_ = {0, 1, 2, 3, 4, 5, 6, 7};
  return e;
}

OpticalElement OpticalElement::polarizing_beam_splitter(PathSide side) {
  OpticalElement e = beam_displacer(side);
  e.kind_ = ElementKind::Pbs;
  return e;
}

OpticalElement OpticalElement::nd_filter(std::vector<int> modes, double transmission) {
  if (!(transmission > 0.0 && transmission <= 1.0)) {
    throw std::invalid_argument("transmission must lie in (0, 1]");
  }
  if (modes.empty()) {
    throw std::invalid_argument("filter needs at least one mode");
  }
  std::sort(modes.begin(), modes.end());
  for (int m : modes) {
    check_mode(m);
  }
  if (std::adjacent_find(modes.begin(), modes.end()) != modes.end()) {
    throw std::invalid_argument("filter modes must be distinct");
  }
  OpticalElement e;
  e.kind_ = ElementKind::Nd;
  e.transmission_ = transmission;
  e.targets_ = std::move(modes);
  return e;
}

OpticalElement OpticalElement::swap_u(PathSide side, double phi1, double phi2) {
  OpticalElement e;
  e.kind_ = ElementKind::SwapU;
  e.side_ = side;
  e.phi1_ = phi1;
  e.phi2_ = phi2;
  const int base = mode_index(side, Rail::Up, Polarization::H);
  e.targets_ = {base, base + 1, base + 2, base + 3};
  return e;
}

Eigen::MatrixXcd OpticalElement::expanded() const {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(8, 8);
  switch (kind_) {
    case ElementKind::Hwp:
    case ElementKind::Qwp: {
      const LinearOperator j = kind_ == ElementKind::Hwp ? jones_hwp(theta_) : jones_qwp(theta_);
      const int base = targets_[0];
      m.block<2, 2>(base, base) = j.matrix();
      break;
    }
    case ElementKind::Bd:
    case ElementKind::Pbs: {
      const int a = targets_[0];
      const int b = targets_[1];
      m(a, a) = m(b, b) = 0.0;
      m(a, b) = m(b, a) = 1.0;
      break;
    }
    case ElementKind::Bs: {
      const Eigen::Matrix2cd b = bs_matrix(convention_);
      for (int k = 0; k < 4; ++k) {
        m(k, k) = b(0, 0);
        m(k, 4 + k) = b(0, 1);
        m(4 + k, k) = b(1, 0);
        m(4 + k, 4 + k) = b(1, 1);
      }
      break;
    }
    case ElementKind::Nd: {
      const double amp = std::sqrt(transmission_);
      for (int k : targets_) {
        m(k, k) = amp;
      }
      break;
    }
    case ElementKind::SwapU: {
      const Encoding enc(phi1_, phi2_);
      const Eigen::Vector2cd p = enc.particle_polarization();
      const Eigen::Vector2cd w = enc.wave_polarization();
      const Eigen::Vector2cd p_perp(p(0), -p(1));
      const Eigen::Vector2cd w_perp(-std::conj(w(1)), std::conj(w(0)));
      const Eigen::Matrix2cd a = w * p.adjoint() + w_perp * p_perp.adjoint();
      const int base = targets_[0];
      m.block<2, 2>(base, base).setZero();
      m.block<2, 2>(base + 2, base + 2).setZero();
      m.block<2, 2>(base + 2, base) = a;
      m.block<2, 2>(base, base + 2) = a.adjoint();
      break;
    }
  }
  return m;
}

bool OpticalElement::is_unitary(double tol) const {
  const Eigen::MatrixXcd e = expanded();
  return (e.adjoint() * e - Eigen::MatrixXcd::Identity(8, 8)).norm() <= tol;
}

Circuit::Circuit(std::vector<OpticalElement> elements, DetectorMap detectors)
    : elements_(std::move(elements)), detectors_(std::move(detectors)) {
  std::set<int> seen;
  for (const auto& subset : detectors_.modes) {
    for (int m : subset) {
      check_mode(m);
      if (!seen.insert(m).second) {
        throw std::invalid_argument("detector subsets must be disjoint");
      }
    }
  }
}

Eigen::MatrixXcd Circuit::transfer_matrix() const {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(8, 8);
  for (const auto& e : elements_) {
    m = e.expanded() * m;
  }
  return m;
}

std::string Circuit::to_json() const {
  nlohmann::ordered_json doc;
  doc["elements"] = nlohmann::ordered_json::array();
  for (const auto& e : elements_) {
    nlohmann::ordered_json je;
    je["kind"] = kind_name(e.kind_);
    switch (e.kind_) {
      case ElementKind::Hwp:
      case ElementKind::Qwp:
        je["theta_deg"] = to_degrees(e.theta_);
        break;
      case ElementKind::Bs:
        je["convention"] =
            e.convention_ == BsConvention::Hadamard ? "hadamard" : "symmetric_phase";
        break;
      case ElementKind::Nd:
        je["transmission"] = e.transmission_;
        break;
      case ElementKind::SwapU:
        je["phi1_deg"] = to_degrees(e.phi1_);
        je["phi2_deg"] = to_degrees(e.phi2_);
        break;
      default:
        break;
    }
    auto names = nlohmann::ordered_json::array();
    for (int m : e.targets_) {
      names.push_back(mode_name(m));
    }
    je["targets"] = std::move(names);
    doc["elements"].push_back(std::move(je));
  }
  const char* det_names[3] = {"D1", "D2", "D3"};
  doc["detectors"] = nlohmann::ordered_json::object();
  for (int d = 0; d < 3; ++d) {
    auto names = nlohmann::ordered_json::array();
    for (int m : detectors_.modes[d]) {
      names.push_back(mode_name(m));
    }
    doc["detectors"][det_names[d]] = std::move(names);
  }
  return doc.dump(2) + "\n";
}

LinearOperator jones_hwp(double theta) {
  const double c = std::cos(2 * theta);
  const double s = std::sin(2 * theta);
  Eigen::MatrixXcd m(2, 2);
  m << c, s, s, -c;
  return LinearOperator({"H", "V"}, std::move(m));
}

LinearOperator jones_qwp(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const Complex phase = std::exp(-kI * (kPi / 4));
  const Complex off = (1.0 - kI) * s * c;
  Eigen::MatrixXcd m(2, 2);
  m << c * c + kI * s * s, off, off, s * s + kI * c * c;
  return LinearOperator({"H", "V"}, phase * m);
}

Encoding::Encoding(double phi1, double phi2) : phi1_(phi1), phi2_(phi2) {}

Eigen::Vector2cd Encoding::particle_polarization() const {
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  return Eigen::Vector2cd(std::exp(-kI * (phi2_ / 2)) * inv_sqrt2,
                          std::exp(kI * (phi2_ / 2)) * inv_sqrt2);
}

Eigen::Vector2cd Encoding::wave_polarization() const {
  return Eigen::Vector2cd(std::cos(phi1_ / 2), -kI * std::sin(phi1_ / 2));
}

PureState Encoding::embed(const PureState& abstract) const {
  if (abstract.basis() != duality_basis()) {
    throw std::invalid_argument("embed expects the {LP, LW, RP, RW} basis");
  }
  const Eigen::Vector2cd p = particle_polarization();
  const Eigen::Vector2cd w = wave_polarization();
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(8);
  for (int side = 0; side < 2; ++side) {
    out.segment<2>(side * 4) = abstract.amplitude(side * 2) * p;
    out.segment<2>(side * 4 + 2) = abstract.amplitude(side * 2 + 1) * w;
  }
  return PureState(optics_basis(), std::move(out));
}

PureState Encoding::project(const PureState& physical) const {
  if (physical.basis() != optics_basis()) {
    throw std::invalid_argument("project expects the 8-mode basis");
  }
  const Eigen::Vector2cd p = particle_polarization();
  const Eigen::Vector2cd w = wave_polarization();
  Eigen::VectorXcd abstract(4);
  for (int side = 0; side < 2; ++side) {
    abstract(side * 2) = p.dot(physical.amplitudes().segment<2>(side * 4));
    abstract(side * 2 + 1) = w.dot(physical.amplitudes().segment<2>(side * 4 + 2));
  }
  PureState result(duality_basis(), std::move(abstract));
  const Eigen::VectorXcd residual = physical.amplitudes() - embed(result).amplitudes();
  if (residual.norm() > 1e-10) {
    throw std::domain_error("state leaks outside the encoded subspace");
  }
  return result;
}

Circuit build_setup(const DualityParams& p, std::optional<NdTarget> nd, BsConvention conv) {
  std::vector<OpticalElement> elems;
  elems.push_back(OpticalElement::beam_displacer(PathSide::L));
  // Preparation plates. Outputs (up to one circuit-global phase e^{-i pi/4})
  // are exactly the encoding kets: up rail |H> -> particle_polarization,
  // down rail |V> -> wave_polarization.
  elems.push_back(OpticalElement::hwp(PathSide::L, Rail::Up, (p.phi2() + kPi / 2) / 4));
  elems.push_back(OpticalElement::qwp(PathSide::L, Rail::Up, kPi / 4));
  elems.push_back(OpticalElement::hwp(PathSide::L, Rail::Down, kPi / 4 - p.phi1() / 4));
  elems.push_back(OpticalElement::qwp(PathSide::L, Rail::Down, 0.0));
  elems.push_back(OpticalElement::beam_splitter(conv));
  if (nd.has_value()) {
    const Rail rail = nd->attribute == Attribute::Particle ? Rail::Up : Rail::Down;
    elems.push_back(OpticalElement::nd_filter(
        {mode_index(nd->path, rail, Polarization::H), mode_index(nd->path, rail, Polarization::V)},
        nd->transmission));
  }
  elems.push_back(OpticalElement::swap_u(PathSide::R, p.phi1(), p.phi2()));
  elems.push_back(OpticalElement::beam_splitter(conv));

  const PathSide succ = success_side(conv);
  const PathSide other = succ == PathSide::L ? PathSide::R : PathSide::L;
  DetectorMap det;
  det.modes[0] = {mode_index(succ, Rail::Down, Polarization::H),
                  mode_index(succ, Rail::Down, Polarization::V)};
  det.modes[1] = {mode_index(other, Rail::Up, Polarization::H),
                  mode_index(other, Rail::Up, Polarization::V),
                  mode_index(other, Rail::Down, Polarization::H),
                  mode_index(other, Rail::Down, Polarization::V)};
  det.modes[2] = {mode_index(succ, Rail::Up, Polarization::H),
                  mode_index(succ, Rail::Up, Polarization::V)};
  return Circuit(std::move(elems), std::move(det));
}

PureState toolbox_input(const DualityParams& p) {
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(8);
  amps(mode_index(PathSide::L, Rail::Up, Polarization::H)) = std::cos(p.alpha());
  amps(mode_index(PathSide::L, Rail::Up, Polarization::V)) = std::sin(p.alpha());
  return PureState(optics_basis(), std::move(amps));
}

PureState propagate(const Circuit& c, const PureState& input) {
  if (input.basis() != optics_basis()) {
    throw std::invalid_argument("circuit input must live on the 8-mode basis");
  }
  Eigen::VectorXcd amps = input.amplitudes();
  for (const auto& e : c.elements()) {
    amps = e.expanded() * amps;
  }
  return PureState(optics_basis(), std::move(amps));
}

DetectionProbabilities run_circuit(const Circuit& c, const PureState& input) {
  if (std::abs(input.norm() - 1.0) > 1e-12) {
    throw std::invalid_argument("circuit input must be normalized");
  }
  const PureState out = propagate(c, input);
  double probs[3] = {0.0, 0.0, 0.0};
  for (int d = 0; d < 3; ++d) {
    for (int m : c.detectors().modes[d]) {
      probs[d] += std::norm(out.amplitude(m));
    }
  }
  const double loss = 1.0 - probs[0] - probs[1] - probs[2];
  return DetectionProbabilities{probs[0], probs[1], probs[2], std::max(0.0, loss)};
}

}  // namespace cheshire
