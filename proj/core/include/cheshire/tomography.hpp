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

#ifndef CHESHIRE_TOMOGRAPHY_HPP
#define CHESHIRE_TOMOGRAPHY_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cheshire/qstate.hpp"
#include "cheshire/rng.hpp"

namespace cheshire {

// Two-qubit tomography of the recombiner's output. Qubit A is the path
// (|L> = +1 eigenstate of Z), qubit B the attribute (|P> = +1), matching
// the {LP, LW, RP, RW} component order of the 4-dim protocol space.

/// A 4x4 density matrix. The constructor enforces Hermiticity and unit
/// trace (both within 1e-10); eigenvalue positivity is diagnosed, not
/// enforced, because linear-inversion reconstructions of noisy counts
/// legitimately dip slightly negative and silently fixing that would hide
/// the estimator's character.
class DensityMatrix {
 public:
  explicit DensityMatrix(Eigen::Matrix4cd m);

  /// |psi><psi| for a 4-dim state; the trace check rejects unnormalized
  /// input.
  static DensityMatrix from_pure(const PureState& psi);
  static DensityMatrix maximally_mixed();

  const Eigen::Matrix4cd& matrix() const { return matrix_; }

  double min_eigenvalue() const;

  /// Row-major JSON array of 16 [re, im] pairs.
  std::string to_json() const;

 private:
  Eigen::Matrix4cd matrix_;
};

enum class PauliAxis { Z, X, Y };

/// Counts of one measurement setting. Outcome index packs the two detector
/// signs as (a_minus << 1) | b_minus: 0 = (+,+), 1 = (+,-), 2 = (-,+),
/// 3 = (-,-).
struct TomographySetting {
  PauliAxis basis_a;
  PauliAxis basis_b;
  std::array<std::uint64_t, 4> counts;
};

/// Canonical setting order: A-axis major, {Z, X, Y} each; index 3*a + b.
inline constexpr int setting_index(PauliAxis a, PauliAxis b) {
  return 3 * int(a) + int(b);
}

/// Exact outcome probabilities of one setting.
std::array<double, 4> outcome_probabilities(const DensityMatrix& rho, PauliAxis a,
                                            PauliAxis b);

/// All 9 settings' probabilities in canonical order.
std::array<std::array<double, 4>, 9> tomography_probabilities(const DensityMatrix& rho);

/// Poisson counts with mean lambda * p(outcome) for each of the 36 cells,
/// settings in canonical order. Deterministic given seed.
std::vector<TomographySetting> simulate_tomography(const DensityMatrix& rho,
                                                   double lambda, std::uint64_t seed);
std::vector<TomographySetting> simulate_tomography(const PureState& psi, double lambda,
                                                   std::uint64_t seed);

/// Linear inversion: empirical frequencies give the 15 Pauli expectation
/// values (singles averaged over the 3 settings sharing the axis), and
/// rho = (1/4) sum <s_i (x) s_j> s_i (x) s_j. Hermitian and unit-trace by
/// construction. Throws MissingSetting unless all 9 settings appear with
/// positive total counts; duplicated settings are rejected too.
DensityMatrix reconstruct_linear(const std::vector<TomographySetting>& settings);

/// Same inversion from exact probabilities (the lambda -> infinity limit);
/// reconstructs pure inputs to machine precision.
DensityMatrix reconstruct_linear(const std::array<std::array<double, 4>, 9>& probabilities);

/// <psi|rho|psi>, returned raw (not clipped). The imaginary part vanishes
/// for Hermitian rho.
double fidelity(const DensityMatrix& rho, const PureState& psi);

/// (1-p) rho + p I/4. Throws std::domain_error for p outside [0, 1].
DensityMatrix depolarize(const DensityMatrix& rho, double p);

}  // namespace cheshire

#endif
