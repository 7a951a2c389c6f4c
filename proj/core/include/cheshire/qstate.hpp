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

#ifndef CHESHIRE_QSTATE_HPP
#define CHESHIRE_QSTATE_HPP

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace cheshire {

using Complex = std::complex<double>;

/// Ordered list of basis labels. Labels are unique within a space; tensor
/// products concatenate them, so composite bases stay human-readable
/// ("L" x "P" -> "LP").
using Basis = std::vector<std::string>;

/// Tolerance used by the structural predicates (is_projector, is_unitary).
inline constexpr double kStructuralTol = 1e-12;

/// A ket with complex amplitudes over a fixed labeled basis.
///
/// States are plain amplitude carriers. No operation renormalizes silently;
/// callers that need a unit vector ask for normalized() explicitly.
class PureState {
 public:
  /// Throws std::invalid_argument if sizes mismatch, labels repeat, or any
  /// amplitude is non-finite.
  PureState(Basis basis, Eigen::VectorXcd amplitudes);

  /// The k-th computational basis vector of the given basis.
  static PureState basis_vector(Basis basis, Eigen::Index k);

  Eigen::Index dim() const { return amplitudes_.size(); }
  const Basis& basis() const { return basis_; }
  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
  Complex amplitude(Eigen::Index k) const { return amplitudes_(k); }

  double norm() const { return amplitudes_.norm(); }
  double norm_squared() const { return amplitudes_.squaredNorm(); }

  /// Unit-norm copy. Throws std::domain_error on the zero vector.
  PureState normalized() const;

  /// Copy with every amplitude multiplied by factor.
  PureState scaled(Complex factor) const;

 private:
  Basis basis_;
  Eigen::VectorXcd amplitudes_;
};

/// A square matrix acting on a fixed labeled basis.
class LinearOperator {
 public:
  /// Throws std::invalid_argument if the matrix is not square over the basis
  /// or contains non-finite entries.
  LinearOperator(Basis basis, Eigen::MatrixXcd matrix);

  static LinearOperator identity(Basis basis);

  Eigen::Index dim() const { return matrix_.rows(); }
  const Basis& basis() const { return basis_; }
  const Eigen::MatrixXcd& matrix() const { return matrix_; }

  LinearOperator adjoint() const;

  /// Hermitian and idempotent within tol (operator norm bounded by the
  /// Frobenius norm used here).
  bool is_projector(double tol = kStructuralTol) const;
  bool is_unitary(double tol = kStructuralTol) const;

 private:
  Basis basis_;
  Eigen::MatrixXcd matrix_;
};

/// Composition (a then applied after b: (a*b)|s> = a(b|s>)). Bases must match.
LinearOperator operator*(const LinearOperator& a, const LinearOperator& b);

/// Kronecker products. Labels concatenate left-to-right: the left factor is
/// the slower-varying index.
PureState tensor_product(const PureState& a, const PureState& b);
LinearOperator tensor_product(const LinearOperator& a, const LinearOperator& b);

/// <bra|ket>, conjugate-linear in the first argument. Bases must match.
Complex inner_product(const PureState& bra, const PureState& ket);

/// op|s>. Bases must match.
PureState apply(const LinearOperator& op, const PureState& s);

/// exp(-p t) for an orthogonal projector p, via the closed form
/// I + (e^{-t} - 1) p. Throws std::domain_error if p fails is_projector;
/// callers with general generators use matrix_exponential instead.
LinearOperator projector_exponential(const LinearOperator& p, double t);

/// exp(a) for an arbitrary square operator (scaling-and-squaring Pade).
LinearOperator matrix_exponential(const LinearOperator& a);

/// True when b == e^{i phi} a for some real phi, within tol per component.
bool equal_up_to_global_phase(const PureState& a, const PureState& b, double tol = 1e-10);

}  // namespace cheshire

#endif
