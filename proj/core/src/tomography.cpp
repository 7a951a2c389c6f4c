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

#include "cheshire/tomography.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

#include "cheshire/errors.hpp"
#include "cheshire/textio.hpp"

namespace cheshire {

namespace {

constexpr double kDensityTol = 1e-10;
constexpr Complex kI{0.0, 1.0};

const Eigen::Matrix2cd& pauli(PauliAxis axis) {
  static const Eigen::Matrix2cd z = (Eigen::Matrix2cd() << 1, 0, 0, -1).finished();
  static const Eigen::Matrix2cd x = (Eigen::Matrix2cd() << 0, 1, 1, 0).finished();
  static const Eigen::Matrix2cd y = (Eigen::Matrix2cd() << 0, -kI, kI, 0).finished();
  switch (axis) {
    case PauliAxis::Z: return z;
    case PauliAxis::X: return x;
    default: return y;
  }
}

/// Eigenvector of pauli(axis) with eigenvalue +1 (sign 0) or -1 (sign 1).
Eigen::Vector2cd eigenvector(PauliAxis axis, int sign) {
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  switch (axis) {
    case PauliAxis::Z:
      return sign == 0 ? Eigen::Vector2cd(1, 0) : Eigen::Vector2cd(0, 1);
    case PauliAxis::X:
      return sign == 0 ? Eigen::Vector2cd(inv_sqrt2, inv_sqrt2)
                       : Eigen::Vector2cd(inv_sqrt2, -inv_sqrt2);
    default:
      return sign == 0 ? Eigen::Vector2cd(inv_sqrt2, kI * inv_sqrt2)
                       : Eigen::Vector2cd(inv_sqrt2, -kI * inv_sqrt2);
  }
}

constexpr PauliAxis kAxes[3] = {PauliAxis::Z, PauliAxis::X, PauliAxis::Y};

double outcome_sign_a(int outcome) { return outcome & 2 ? -1.0 : 1.0; }
double outcome_sign_b(int outcome) { return outcome & 1 ? -1.0 : 1.0; }

DensityMatrix reconstruct_from_frequencies(const std::array<std::array<double, 4>, 9>& freq) {
  // Pauli expectation values: correlators from their own setting, singles
  // averaged over the 3 settings that measure the axis.
  double corr[3][3];
  double singles_a[3] = {0, 0, 0};
  double singles_b[3] = {0, 0, 0};
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      const auto& p = freq[3 * a + b];
      double e_ab = 0, e_a = 0, e_b = 0;
      for (int k = 0; k < 4; ++k) {
        e_ab += outcome_sign_a(k) * outcome_sign_b(k) * p[k];
        e_a += outcome_sign_a(k) * p[k];
        e_b += outcome_sign_b(k) * p[k];
      }
      corr[a][b] = e_ab;
      singles_a[a] += e_a / 3.0;
      singles_b[b] += e_b / 3.0;
    }
  }

  const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Identity();
  for (int a = 0; a < 3; ++a) {
    rho += singles_a[a] * Eigen::kroneckerProduct(pauli(kAxes[a]), id).eval();
    rho += singles_b[a] * Eigen::kroneckerProduct(id, pauli(kAxes[a])).eval();
    for (int b = 0; b < 3; ++b) {
      rho += corr[a][b] *
             Eigen::kroneckerProduct(pauli(kAxes[a]), pauli(kAxes[b])).eval();
    }
  }
  return DensityMatrix(rho / 4.0);
}

}  // namespace

DensityMatrix::DensityMatrix(Eigen::Matrix4cd m) : matrix_(std::move(m)) {
  if (!matrix_.allFinite()) {
    throw std::invalid_argument("density matrix entries must be finite");
  }
  if ((matrix_ - matrix_.adjoint()).norm() > kDensityTol) {
    throw std::invalid_argument("density matrix must be Hermitian");
  }
  if (std::abs(matrix_.trace() - Complex(1.0)) > kDensityTol) {
    throw std::invalid_argument("density matrix must have unit trace");
  }
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  if (psi.dim() != 4) {
    throw std::invalid_argument("two-qubit tomography needs a 4-dim state");
  }
  return DensityMatrix(psi.amplitudes() * psi.amplitudes().adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed() {
  return DensityMatrix(Eigen::Matrix4cd::Identity() / 4.0);
}

double DensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(matrix_);
  return solver.eigenvalues().minCoeff();
}

std::string DensityMatrix::to_json() const {
  std::string out = "[";
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      if (r != 0 || c != 0) {
        out += ",";
      }
      out += "[" + format_double(matrix_(r, c).real()) + "," +
             format_double(matrix_(r, c).imag()) + "]";
    }
  }
  return out + "]";
}

std::array<double, 4> outcome_probabilities(const DensityMatrix& rho, PauliAxis a,
                                            PauliAxis b) {
  std::array<double, 4> probs{};
  for (int k = 0; k < 4; ++k) {
    const Eigen::Vector4cd v = Eigen::kroneckerProduct(
        eigenvector(a, (k >> 1) & 1), eigenvector(b, k & 1));
    probs[k] = std::real(Complex(v.dot(rho.matrix() * v)));
  }
  return probs;
}

std::array<std::array<double, 4>, 9> tomography_probabilities(const DensityMatrix& rho) {
  std::array<std::array<double, 4>, 9> out{};
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      out[3 * a + b] = outcome_probabilities(rho, kAxes[a], kAxes[b]);
    }
  }
  return out;
}

std::vector<TomographySetting> simulate_tomography(const DensityMatrix& rho,
                                                   double lambda, std::uint64_t seed) {
  if (!(lambda > 0.0)) {
    throw std::invalid_argument("mean flux must be positive");
  }
  Rng rng(seed);
  std::vector<TomographySetting> settings;
  settings.reserve(9);
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      const auto probs = outcome_probabilities(rho, kAxes[a], kAxes[b]);
      TomographySetting s{kAxes[a], kAxes[b], {}};
      for (int k = 0; k < 4; ++k) {
        // Tiny negative probabilities can appear at machine precision.
        s.counts[k] = sample_poisson(rng, lambda * std::max(0.0, probs[k]));
      }
      settings.push_back(s);
    }
  }
  return settings;
}

std::vector<TomographySetting> simulate_tomography(const PureState& psi, double lambda,
                                                   std::uint64_t seed) {
  return simulate_tomography(DensityMatrix::from_pure(psi), lambda, seed);
}

DensityMatrix reconstruct_linear(const std::vector<TomographySetting>& settings) {
  std::array<std::array<double, 4>, 9> freq{};
  std::array<bool, 9> seen{};
  for (const auto& s : settings) {
    const int idx = setting_index(s.basis_a, s.basis_b);
    if (seen[idx]) {
      throw std::invalid_argument("duplicated tomography setting");
    }
    seen[idx] = true;
    const double total = double(s.counts[0]) + double(s.counts[1]) +
                         double(s.counts[2]) + double(s.counts[3]);
    if (total <= 0.0) {
      throw MissingSetting("tomography setting has no counts");
    }
    for (int k = 0; k < 4; ++k) {
      freq[idx][k] = double(s.counts[k]) / total;
    }
  }
  for (int idx = 0; idx < 9; ++idx) {
    if (!seen[idx]) {
      throw MissingSetting("tomography needs all 9 basis settings");
    }
  }
  return reconstruct_from_frequencies(freq);
}

DensityMatrix reconstruct_linear(const std::array<std::array<double, 4>, 9>& probabilities) {
  std::array<std::array<double, 4>, 9> freq{};
  for (int idx = 0; idx < 9; ++idx) {
    const auto& p = probabilities[idx];
    const double total = p[0] + p[1] + p[2] + p[3];
    if (!(total > 0.0)) {
      throw MissingSetting("tomography setting has zero probability mass");
    }
    for (int k = 0; k < 4; ++k) {
      freq[idx][k] = p[k] / total;
    }
  }
  return reconstruct_from_frequencies(freq);
}

double fidelity(const DensityMatrix& rho, const PureState& psi) {
  if (psi.dim() != 4) {
    throw std::invalid_argument("fidelity target must be a 4-dim state");
  }
  const Eigen::Vector4cd v = psi.amplitudes();
  return std::real(Complex(v.dot(rho.matrix() * v)));
}

DensityMatrix depolarize(const DensityMatrix& rho, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error("depolarization strength must lie in [0, 1]");
  }
  return DensityMatrix((1.0 - p) * rho.matrix() +
                       (p / 4.0) * Eigen::Matrix4cd::Identity());
}

}  // namespace cheshire
