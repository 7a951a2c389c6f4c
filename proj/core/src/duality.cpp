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

#include "cheshire/duality.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cheshire/errors.hpp"

namespace cheshire {

namespace {

constexpr double kOrthogonalTol = 1e-14;
constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

}  // namespace

DualityParams::DualityParams(double alpha, double phi1, double phi2)
    : alpha_(alpha), phi1_(phi1), phi2_(phi2) {
  if (!(alpha >= 0.0 && alpha <= kPi / 2)) {
    throw std::domain_error("alpha must lie in [0, pi/2]");
  }
  if (!(phi1 >= 0.0 && phi1 < 2 * kPi) || !(phi2 >= 0.0 && phi2 < 2 * kPi)) {
    throw std::domain_error("phi1 and phi2 must lie in [0, 2*pi)");
  }
}

std::string PathAttributeObservable::id() const {
  std::string s;
  s += attribute == Attribute::Particle ? 'P' : 'W';
  s += path == PathSide::L ? 'L' : 'R';
  return s;
}

const Basis& duality_basis() {
  static const Basis basis{"LP", "LW", "RP", "RW"};
  return basis;
}

const Basis& path_basis() {
  static const Basis basis{"L", "R"};
  return basis;
}

const Basis& attribute_basis() {
  static const Basis basis{"P", "W"};
  return basis;
}

PureState wave_state(double phi1) {
  const double half = phi1 / 2;
  const Complex prefactor = std::exp(kI * half);
  Eigen::VectorXcd amps(2);
  amps << prefactor * std::cos(half), prefactor * (-kI) * std::sin(half);
  return PureState({"Hd", "Vd"}, std::move(amps));
}

PureState particle_state(double phi2) {
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  Eigen::VectorXcd amps(2);
  amps << inv_sqrt2, std::exp(kI * phi2) * inv_sqrt2;
  return PureState({"Hu", "Vu"}, std::move(amps));
}

PureState preselection(const DualityParams& p) {
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  Eigen::VectorXcd path(2);
  path << inv_sqrt2, inv_sqrt2;
  Eigen::VectorXcd attr(2);
  attr << std::cos(p.alpha()), std::sin(p.alpha());
  return tensor_product(PureState(path_basis(), std::move(path)),
                        PureState(attribute_basis(), std::move(attr)));
}

PureState postselection() {
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  Eigen::VectorXcd amps(4);
  amps << 0.0, inv_sqrt2, inv_sqrt2, 0.0;
  return PureState(duality_basis(), std::move(amps));
}

PathAttributeObservable observable(PathSide path, Attribute attr) {
  const Eigen::Index k = (path == PathSide::L ? 0 : 2) + (attr == Attribute::Particle ? 0 : 1);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(4, 4);
  m(k, k) = 1.0;
  return PathAttributeObservable{path, attr, LinearOperator(duality_basis(), std::move(m))};
}

std::array<PathAttributeObservable, 4> all_observables() {
  return {observable(PathSide::L, Attribute::Particle),
          observable(PathSide::R, Attribute::Particle),
          observable(PathSide::L, Attribute::Wave),
          observable(PathSide::R, Attribute::Wave)};
}

LinearOperator attribute_swap_on_right() {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(4, 4);
  m(0, 0) = 1.0;
  m(1, 1) = 1.0;
  m(2, 3) = 1.0;
  m(3, 2) = 1.0;
  return LinearOperator(duality_basis(), std::move(m));
}

LinearOperator path_beam_splitter() {
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  Eigen::MatrixXcd h(2, 2);
  h << inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2;
  return tensor_product(LinearOperator(path_basis(), std::move(h)),
                        LinearOperator::identity(attribute_basis()));
}

PureState success_port_state() {
  return PureState::basis_vector(duality_basis(), 1);  // |L> (x) |W>
}

bool verify_postselection_backward(const LinearOperator& swap_gate) {
  const PureState pulled_back = apply(
      swap_gate.adjoint(), apply(path_beam_splitter().adjoint(), success_port_state()));
  return equal_up_to_global_phase(pulled_back, postselection(), 1e-12);
}

bool verify_postselection_backward() {
  return verify_postselection_backward(attribute_swap_on_right());
}

PureState bs2_output_state(const DualityParams& p) {
  return apply(path_beam_splitter(), apply(attribute_swap_on_right(), preselection(p)));
}

Complex weak_value_exact(const LinearOperator& a, const PureState& psi_i,
                         const PureState& psi_f) {
  const Complex overlap = inner_product(psi_f, psi_i);
  if (std::abs(overlap) < kOrthogonalTol) {
    throw OrthogonalSelection("pre- and post-selection overlap is numerically zero");
  }
  return inner_product(psi_f, apply(a, psi_i)) / overlap;
}

double ClosedFormWeakValues::by_id(const std::string& id) const {
  if (id == "PL") return particle_left;
  if (id == "PR") return particle_right;
  if (id == "WL") return wave_left;
  if (id == "WR") return wave_right;
  throw std::invalid_argument("unknown observable id: " + id);
}

ClosedFormWeakValues closed_form_weak_values(double alpha) {
  if (!(alpha >= 0.0 && alpha <= kPi / 2)) {
    throw std::domain_error("alpha must lie in [0, pi/2]");
  }
  // cos a/(cos a + sin a) rewritten as 1/(1 + tan a): algebraically equal,
  // and exact at a = pi/4 where the two-term form picks up a 1 ulp error.
  // The complement is computed by subtraction so the pair sums to 1 exactly
  // (t/(1 + t) alone rounds to 0.5 - 2^-54 at the symmetric point).
  const double tan_a = std::tan(alpha);
  const double particle_right = 1.0 / (1.0 + tan_a);
  return ClosedFormWeakValues{0.0, particle_right, 1.0 - particle_right, 0.0};
}

}  // namespace cheshire
