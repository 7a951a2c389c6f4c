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

#include "cheshire/qstate.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_set>
#include <utility>

#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

namespace cheshire {

namespace {

void check_labels(const Basis& basis) {
  std::unordered_set<std::string> seen;
  for (const auto& label : basis) {
    if (!seen.insert(label).second) {
      throw std::invalid_argument("basis label repeats: " + label);
    }
  }
}

void check_same_basis(const Basis& a, const Basis& b, const char* who) {
  if (a != b) {
    throw std::invalid_argument(std::string(who) + ": operands live on different bases");
  }
}

Basis concat_labels(const Basis& a, const Basis& b) {
  Basis out;
  out.reserve(a.size() * b.size());
  for (const auto& la : a) {
    for (const auto& lb : b) {
      out.push_back(la + lb);
    }
  }
  return out;
}

}  // namespace

PureState::PureState(Basis basis, Eigen::VectorXcd amplitudes)
    : basis_(std::move(basis)), amplitudes_(std::move(amplitudes)) {
  if (static_cast<Eigen::Index>(basis_.size()) != amplitudes_.size()) {
    throw std::invalid_argument("state dimension does not match basis size");
  }
  if (basis_.empty()) {
    throw std::invalid_argument("state needs a nonempty basis");
  }
  if (!amplitudes_.allFinite()) {
    throw std::invalid_argument("state amplitudes must be finite");
  }
  check_labels(basis_);
}

PureState PureState::basis_vector(Basis basis, Eigen::Index k) {
  const auto dim = static_cast<Eigen::Index>(basis.size());
  if (k < 0 || k >= dim) {
    throw std::invalid_argument("basis_vector index out of range");
  }
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(dim);
  amps(k) = 1.0;
  return PureState(std::move(basis), std::move(amps));
}

PureState PureState::normalized() const {
  const double n = norm();
  if (n == 0.0) {
    throw std::domain_error("cannot normalize the zero vector");
  }
  return PureState(basis_, amplitudes_ / n);
}

PureState PureState::scaled(Complex factor) const {
  return PureState(basis_, amplitudes_ * factor);
}

LinearOperator::LinearOperator(Basis basis, Eigen::MatrixXcd matrix)
    : basis_(std::move(basis)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols()) {
    throw std::invalid_argument("operator matrix must be square");
  }
  if (static_cast<Eigen::Index>(basis_.size()) != matrix_.rows()) {
    throw std::invalid_argument("operator dimension does not match basis size");
  }
  if (basis_.empty()) {
    throw std::invalid_argument("operator needs a nonempty basis");
  }
  if (!matrix_.allFinite()) {
    throw std::invalid_argument("operator entries must be finite");
  }
  check_labels(basis_);
}

LinearOperator LinearOperator::identity(Basis basis) {
  const auto dim = static_cast<Eigen::Index>(basis.size());
  return LinearOperator(std::move(basis), Eigen::MatrixXcd::Identity(dim, dim));
}

LinearOperator LinearOperator::adjoint() const {
  return LinearOperator(basis_, matrix_.adjoint());
}

bool LinearOperator::is_projector(double tol) const {
  const double hermitian_defect = (matrix_ - matrix_.adjoint()).norm();
  const double idempotent_defect = (matrix_ * matrix_ - matrix_).norm();
  return hermitian_defect <= tol && idempotent_defect <= tol;
}

bool LinearOperator::is_unitary(double tol) const {
  const Eigen::MatrixXcd gram = matrix_.adjoint() * matrix_;
  return (gram - Eigen::MatrixXcd::Identity(dim(), dim())).norm() <= tol;
}

LinearOperator operator*(const LinearOperator& a, const LinearOperator& b) {
  check_same_basis(a.basis(), b.basis(), "operator composition");
  return LinearOperator(a.basis(), a.matrix() * b.matrix());
}

PureState tensor_product(const PureState& a, const PureState& b) {
  Eigen::VectorXcd amps = Eigen::kroneckerProduct(a.amplitudes(), b.amplitudes());
  return PureState(concat_labels(a.basis(), b.basis()), std::move(amps));
}

LinearOperator tensor_product(const LinearOperator& a, const LinearOperator& b) {
  Eigen::MatrixXcd m = Eigen::kroneckerProduct(a.matrix(), b.matrix());
  return LinearOperator(concat_labels(a.basis(), b.basis()), std::move(m));
}

Complex inner_product(const PureState& bra, const PureState& ket) {
  check_same_basis(bra.basis(), ket.basis(), "inner_product");
  return bra.amplitudes().dot(ket.amplitudes());
}

PureState apply(const LinearOperator& op, const PureState& s) {
  check_same_basis(op.basis(), s.basis(), "apply");
  return PureState(s.basis(), op.matrix() * s.amplitudes());
}

LinearOperator projector_exponential(const LinearOperator& p, double t) {
  if (!p.is_projector()) {
    throw std::domain_error("projector_exponential: operator is not a projector");
  }
  const double shrink = std::expm1(-t);  // e^{-t} - 1, exact at t = 0
  Eigen::MatrixXcd m =
      Eigen::MatrixXcd::Identity(p.dim(), p.dim()) + shrink * p.matrix();
  return LinearOperator(p.basis(), std::move(m));
}

LinearOperator matrix_exponential(const LinearOperator& a) {
  return LinearOperator(a.basis(), a.matrix().exp());
}

bool equal_up_to_global_phase(const PureState& a, const PureState& b, double tol) {
  if (a.basis() != b.basis()) {
    return false;
  }
  Eigen::Index pivot = 0;
  const double amax = a.amplitudes().cwiseAbs().maxCoeff(&pivot);
  const double bmax = b.amplitudes().cwiseAbs().maxCoeff();
  if (amax == 0.0 || bmax == 0.0) {
    return amax <= tol && bmax <= tol;
  }
  const Complex phase = b.amplitude(pivot) / a.amplitude(pivot);
  const double mag = std::abs(phase);
  if (std::abs(mag - 1.0) > tol) {
    return false;
  }
  return (b.amplitudes() - (phase / mag) * a.amplitudes()).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace cheshire
