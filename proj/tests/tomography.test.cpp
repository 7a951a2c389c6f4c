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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cheshire/duality.hpp"
#include "cheshire/errors.hpp"
#include "cheshire/tomography.hpp"
#include "doctest.h"
#include "json.hpp"
#include "test_support.hpp"

using namespace cheshire;

namespace {

const double kPi = std::numbers::pi;

double frobenius_diff(const Eigen::Matrix4cd& a, const Eigen::Matrix4cd& b) {
  return (a - b).norm();
}

double correlator(const std::array<double, 4>& p) {
  return p[0] - p[1] - p[2] + p[3];
}

PureState random_state(std::uint64_t seed) {
  Rng rng(seed);
  Eigen::VectorXcd v(4);
  for (int k = 0; k < 4; k++) {
    v(k) = Complex(rng.next_double() - 0.5, rng.next_double() - 0.5);
  }
  return PureState(duality_basis(), v).normalized();
}

}  // namespace

TEST_CASE("density matrix validation") {
  Eigen::Matrix4cd not_hermitian = Eigen::Matrix4cd::Zero();
  not_hermitian(0, 1) = 1.0;
  not_hermitian(0, 0) = 1.0;
  CHECK_THROWS_AS(DensityMatrix{not_hermitian}, std::invalid_argument);

  Eigen::Matrix4cd wrong_trace = Eigen::Matrix4cd::Identity();
  CHECK_THROWS_AS(DensityMatrix{wrong_trace}, std::invalid_argument);

  CHECK_THROWS_AS(
      DensityMatrix::from_pure(preselection(DualityParams(0.3)).scaled(1.1)),
      std::invalid_argument);

  // Positivity is diagnosed, not enforced.
  Eigen::Matrix4cd indefinite = Eigen::Matrix4cd::Zero();
  indefinite(0, 0) = 1.02;
  indefinite(3, 3) = -0.02;
  DensityMatrix rho(indefinite);
  CHECK(rho.min_eigenvalue() == doctest::Approx(-0.02).epsilon(1e-12));

  CHECK(DensityMatrix::maximally_mixed().min_eigenvalue() ==
        doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("outcome probabilities of simple states") {
  // |LP> is the +1,+1 eigenstate of Z (x) Z.
  auto lp = DensityMatrix::from_pure(PureState::basis_vector(duality_basis(), 0));
  auto p = outcome_probabilities(lp, PauliAxis::Z, PauliAxis::Z);
  CHECK(p[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(p[1] + p[2] + p[3] <= 1e-14);

  // In the X basis on A it splits evenly.
  p = outcome_probabilities(lp, PauliAxis::X, PauliAxis::Z);
  CHECK(p[0] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(p[2] == doctest::Approx(0.5).epsilon(1e-14));

  auto mixed = DensityMatrix::maximally_mixed();
  for (auto a : {PauliAxis::Z, PauliAxis::X, PauliAxis::Y}) {
    for (auto b : {PauliAxis::Z, PauliAxis::X, PauliAxis::Y}) {
      for (double prob : outcome_probabilities(mixed, a, b)) {
        CHECK(prob == doctest::Approx(0.25).epsilon(1e-14));
      }
    }
  }
}

TEST_CASE("post-selection state has Bell correlations") {
  auto rho = DensityMatrix::from_pure(postselection());
  auto zz = outcome_probabilities(rho, PauliAxis::Z, PauliAxis::Z);
  CHECK(correlator(zz) == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(zz[0] <= 1e-14);
  CHECK(zz[3] <= 1e-14);
  auto xx = outcome_probabilities(rho, PauliAxis::X, PauliAxis::X);
  CHECK(correlator(xx) == doctest::Approx(1.0).epsilon(1e-14));
  auto yy = outcome_probabilities(rho, PauliAxis::Y, PauliAxis::Y);
  CHECK(correlator(yy) == doctest::Approx(1.0).epsilon(1e-14));
  // Singles are unpolarized.
  auto zx = outcome_probabilities(rho, PauliAxis::Z, PauliAxis::X);
  CHECK(zx[0] + zx[1] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("every setting's probabilities sum to one") {
  auto rho = DensityMatrix::from_pure(random_state(3));
  auto all = tomography_probabilities(rho);
  for (const auto& p : all) {
    double total = p[0] + p[1] + p[2] + p[3];
    CHECK(total == doctest::Approx(1.0).epsilon(1e-13));
    for (double v : p) {
      CHECK(v >= -1e-15);
    }
  }
}

TEST_CASE("setting order is canonical") {
  CHECK(setting_index(PauliAxis::Z, PauliAxis::Z) == 0);
  CHECK(setting_index(PauliAxis::Z, PauliAxis::Y) == 2);
  CHECK(setting_index(PauliAxis::X, PauliAxis::Z) == 3);
  CHECK(setting_index(PauliAxis::Y, PauliAxis::Y) == 8);
  auto settings = simulate_tomography(DensityMatrix::maximally_mixed(), 100.0, 1);
  REQUIRE(settings.size() == 9);
  for (int i = 0; i < 9; i++) {
    CHECK(setting_index(settings[i].basis_a, settings[i].basis_b) == i);
  }
}

TEST_CASE("exact probabilities reconstruct pure states to machine precision") {
  for (std::uint64_t seed : {1, 2, 3}) {
    auto psi = random_state(seed);
    auto rho = DensityMatrix::from_pure(psi);
    auto rec = reconstruct_linear(tomography_probabilities(rho));
    CHECK(frobenius_diff(rec.matrix(), rho.matrix()) <= 1e-12);
    CHECK(fidelity(rec, psi) == doctest::Approx(1.0).epsilon(1e-12));
  }
  for (double alpha : {0.0, 0.5, kPi / 4, kPi / 2}) {
    auto psi = bs2_output_state(DualityParams(alpha)).normalized();
    auto rho = DensityMatrix::from_pure(psi);
    auto rec = reconstruct_linear(tomography_probabilities(rho));
    CHECK(fidelity(rec, psi) == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("known mixed channels reconstruct exactly") {
  auto rho = depolarize(DensityMatrix::from_pure(random_state(9)), 0.1);
  auto rec = reconstruct_linear(tomography_probabilities(rho));
  CHECK(frobenius_diff(rec.matrix(), rho.matrix()) <= 1e-12);

  auto mixed = DensityMatrix::maximally_mixed();
  auto rec2 = reconstruct_linear(tomography_probabilities(mixed));
  CHECK(frobenius_diff(rec2.matrix(), mixed.matrix()) <= 1e-12);
}

TEST_CASE("partial trace of the reconstruction matches the oracle") {
  auto psi = bs2_output_state(DualityParams(0.8)).normalized();
  auto rho = DensityMatrix::from_pure(psi);
  auto rec = reconstruct_linear(tomography_probabilities(rho));
  auto reduced = cheshire::testing::reduced_first_qubit(rec.matrix());
  auto expected = cheshire::testing::reduced_first_qubit(rho.matrix());
  CHECK((reduced - expected).norm() <= 1e-12);
}

TEST_CASE("simulated counts are deterministic and distributed correctly") {
  auto rho = DensityMatrix::maximally_mixed();
  auto a = simulate_tomography(rho, 1e6, 7);
  auto b = simulate_tomography(rho, 1e6, 7);
  auto c = simulate_tomography(rho, 1e6, 8);
  bool same = true, diff = false;
  for (int i = 0; i < 9; i++) {
    same = same && a[i].counts == b[i].counts;
    diff = diff || a[i].counts != c[i].counts;
    for (auto n : a[i].counts) {
      // Poisson(2.5e5): 6 sigma is 3000.
      CHECK(std::abs(double(n) - 2.5e5) < 3000.0);
    }
  }
  CHECK(same);
  CHECK(diff);

  // Zero-probability outcomes draw zero counts.
  auto lp = DensityMatrix::from_pure(PureState::basis_vector(duality_basis(), 0));
  auto s = simulate_tomography(lp, 1e5, 3);
  CHECK(s[0].counts[0] > 0);
  CHECK(s[0].counts[1] == 0);
  CHECK(s[0].counts[2] == 0);
  CHECK(s[0].counts[3] == 0);
}

TEST_CASE("sampled counts reconstruct with high fidelity") {
  auto psi = bs2_output_state(DualityParams(kPi / 4)).normalized();
  auto settings = simulate_tomography(psi, 1e6, 11);
  auto rec = reconstruct_linear(settings);
  CHECK(fidelity(rec, psi) > 0.995);
  CHECK(rec.min_eigenvalue() > -0.05);
}

TEST_CASE("merging equal-weight count sets averages the reconstruction") {
  auto psi1 = PureState::basis_vector(duality_basis(), 0);
  auto psi2 = PureState::basis_vector(duality_basis(), 1);
  auto p1 = tomography_probabilities(DensityMatrix::from_pure(psi1));
  auto p2 = tomography_probabilities(DensityMatrix::from_pure(psi2));
  std::vector<TomographySetting> merged;
  for (int i = 0; i < 9; i++) {
    TomographySetting s;
    s.basis_a = PauliAxis(i / 3);
    s.basis_b = PauliAxis(i % 3);
    for (int k = 0; k < 4; k++) {
      s.counts[k] = std::uint64_t(std::llround(1e9 * p1[i][k])) +
                    std::uint64_t(std::llround(1e9 * p2[i][k]));
    }
    merged.push_back(s);
  }
  auto rec = reconstruct_linear(merged);
  Eigen::Matrix4cd expected =
      0.5 * DensityMatrix::from_pure(psi1).matrix() +
      0.5 * DensityMatrix::from_pure(psi2).matrix();
  CHECK(frobenius_diff(rec.matrix(), expected) <= 1e-6);
}

TEST_CASE("reconstruction input validation") {
  auto settings = simulate_tomography(DensityMatrix::maximally_mixed(), 1e4, 1);
  auto missing = settings;
  missing.pop_back();
  CHECK_THROWS_AS(reconstruct_linear(missing), MissingSetting);

  auto duplicated = settings;
  duplicated.push_back(settings[0]);
  CHECK_THROWS_AS(reconstruct_linear(duplicated), std::invalid_argument);

  auto zeroed = settings;
  zeroed[4].counts = {0, 0, 0, 0};
  CHECK_THROWS_AS(reconstruct_linear(zeroed), MissingSetting);
}

TEST_CASE("fidelity and depolarization") {
  auto psi = random_state(21);
  auto rho = DensityMatrix::from_pure(psi);
  CHECK(fidelity(rho, psi) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(fidelity(DensityMatrix::maximally_mixed(), psi) ==
        doctest::Approx(0.25).epsilon(1e-13));

  CHECK(frobenius_diff(depolarize(rho, 0.0).matrix(), rho.matrix()) == 0.0);
  CHECK(frobenius_diff(depolarize(rho, 1.0).matrix(),
                       DensityMatrix::maximally_mixed().matrix()) <= 1e-15);

  // Pure-state fidelity under depolarization is 1 - 3p/4.
  for (double p : {0.1, 0.5, 0.00733}) {
    CHECK(fidelity(depolarize(rho, p), psi) ==
          doctest::Approx(1.0 - 0.75 * p).epsilon(1e-12));
  }
  CHECK(fidelity(depolarize(rho, 0.00733), psi) ==
        doctest::Approx(0.9945025).epsilon(1e-12));

  CHECK_THROWS_AS(depolarize(rho, -0.1), std::domain_error);
  CHECK_THROWS_AS(depolarize(rho, 1.1), std::domain_error);
}

TEST_CASE("depolarized tomography at the published strength") {
  auto psi = bs2_output_state(DualityParams(kPi / 4)).normalized();
  auto noisy = depolarize(DensityMatrix::from_pure(psi), 0.00733);
  // Exact counts: fidelity is the channel fidelity itself.
  auto rec = reconstruct_linear(tomography_probabilities(noisy));
  CHECK(fidelity(rec, psi) == doctest::Approx(0.9945025).epsilon(1e-10));
  // Sampled counts stay close to it.
  auto sampled = reconstruct_linear(simulate_tomography(noisy, 1e6, 5));
  CHECK(std::abs(fidelity(sampled, psi) - 0.9945025) < 0.003);
}

TEST_CASE("density matrix json has 16 ordered [re, im] pairs") {
  auto rho = DensityMatrix::from_pure(postselection());
  auto doc = nlohmann::json::parse(rho.to_json());
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == 16);
  for (const auto& cell : doc) {
    REQUIRE(cell.is_array());
    REQUIRE(cell.size() == 2);
  }
  // Row-major: entry (1,1) = 1/2, entry (1,2) = 1/2.
  CHECK(doc[5][0].get<double>() == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(doc[6][0].get<double>() == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(doc[0][0].get<double>() == 0.0);
  CHECK(doc[5][1].get<double>() == 0.0);
  CHECK(rho.to_json() == rho.to_json());
}
