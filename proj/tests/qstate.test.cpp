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
#include "doctest.h"

#include <cmath>
#include <limits>

#include "cheshire/qstate.hpp"
#include "test_support.hpp"

using namespace cheshire;
using cheshire::testing::random_rank1_projector;
using cheshire::testing::random_vector;
using cheshire::testing::taylor_exp;

namespace {

PureState ket(Basis basis, std::initializer_list<Complex> amps) {
  Eigen::VectorXcd v(Eigen::Index(amps.size()));
  Eigen::Index k = 0;
  for (Complex a : amps) {
    v(k++) = a;
  }
  return PureState(std::move(basis), std::move(v));
}

}  // namespace

TEST_CASE("construction validates shape, labels, and finiteness") {
  CHECK_THROWS_AS(ket({"0", "1"}, {1.0}), std::invalid_argument);
  CHECK_THROWS_AS(ket({"0", "0"}, {1.0, 0.0}), std::invalid_argument);
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(ket({"0", "1"}, {inf, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(ket({"0", "1"}, {std::nan(""), 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(PureState({}, Eigen::VectorXcd()), std::invalid_argument);

  Eigen::MatrixXcd rect(2, 3);
  rect.setZero();
  CHECK_THROWS_AS(LinearOperator({"0", "1"}, rect), std::invalid_argument);
}

TEST_CASE("basis_vector picks one component") {
  const PureState s = PureState::basis_vector({"a", "b", "c"}, 1);
  CHECK(s.amplitude(0) == Complex(0.0));
  CHECK(s.amplitude(1) == Complex(1.0));
  CHECK(s.norm() == 1.0);
  CHECK_THROWS_AS(PureState::basis_vector({"a"}, 1), std::invalid_argument);
}

TEST_CASE("tensor product concatenates labels and orders amplitudes") {
  const PureState s = tensor_product(ket({"0", "1"}, {1.0, 0.0}), ket({"0", "1"}, {0.0, 1.0}));
  CHECK(s.basis() == Basis{"00", "01", "10", "11"});
  CHECK(s.amplitude(0) == Complex(0.0));
  CHECK(s.amplitude(1) == Complex(1.0));
  CHECK(s.amplitude(2) == Complex(0.0));
  CHECK(s.amplitude(3) == Complex(0.0));
}

TEST_CASE("tensor product of identities is the larger identity") {
  const LinearOperator id4 =
      tensor_product(LinearOperator::identity({"0", "1"}), LinearOperator::identity({"a", "b"}));
  CHECK((id4.matrix() - Eigen::MatrixXcd::Identity(4, 4)).norm() == 0.0);
}

TEST_CASE("tensor product of diagonal projectors places a single diagonal 1") {
  Eigen::MatrixXcd pr(2, 2), pp(2, 2);
  pr << 0, 0, 0, 1;
  pp << 1, 0, 0, 0;
  const LinearOperator proj =
      tensor_product(LinearOperator({"L", "R"}, pr), LinearOperator({"P", "W"}, pp));
  CHECK(proj.is_projector());
  CHECK(proj.matrix().trace() == Complex(1.0));
  CHECK(proj.matrix()(2, 2) == Complex(1.0));
  CHECK(proj.basis() == Basis{"LP", "LW", "RP", "RW"});
}

TEST_CASE("tensor product is associative up to label flattening") {
  Rng rng(11);
  const PureState a = PureState({"0", "1"}, random_vector(rng, 2));
  const PureState b = PureState({"x", "y"}, random_vector(rng, 2));
  const PureState c = PureState({"p", "q"}, random_vector(rng, 2));
  const PureState left = tensor_product(tensor_product(a, b), c);
  const PureState right = tensor_product(a, tensor_product(b, c));
  CHECK(left.basis() == right.basis());
  CHECK((left.amplitudes() - right.amplitudes()).cwiseAbs().maxCoeff() <= 1e-15);
}

TEST_CASE("inner product is conjugate-linear in the bra and Hermitian-symmetric") {
  Rng rng(7);
  const Basis basis{"0", "1", "2", "3"};
  const PureState a = PureState(basis, random_vector(rng, 4));
  const PureState b = PureState(basis, random_vector(rng, 4));

  CHECK(std::abs(inner_product(a.normalized(), a.normalized()) - Complex(1.0)) <= 1e-15);
  CHECK(std::abs(inner_product(a, b) - std::conj(inner_product(b, a))) <= 1e-15);
  CHECK(std::abs(inner_product(a.scaled(Complex(0, 2)), b) -
                 Complex(0, -2) * inner_product(a, b)) <= 1e-14);

  const PureState e0 = PureState::basis_vector(basis, 0);
  const PureState e1 = PureState::basis_vector(basis, 1);
  CHECK(inner_product(e0, e1) == Complex(0.0));

  CHECK_THROWS_AS(inner_product(e0, PureState::basis_vector({"a", "b"}, 0)),
                  std::invalid_argument);
}

TEST_CASE("overlap of the protocol's boundary states at alpha = pi/4") {
  const double c = std::cos(M_PI / 4), s = std::sin(M_PI / 4);
  const Basis basis{"LP", "LW", "RP", "RW"};
  const PureState psi_i =
      ket(basis, {c / std::sqrt(2.0), s / std::sqrt(2.0), c / std::sqrt(2.0), s / std::sqrt(2.0)});
  const PureState psi_f = ket(basis, {0.0, 1 / std::sqrt(2.0), 1 / std::sqrt(2.0), 0.0});
  CHECK(std::abs(inner_product(psi_f, psi_i) - Complex(std::sqrt(2.0) / 2)) <= 1e-15);
}

TEST_CASE("apply performs the matrix-vector product") {
  Rng rng(3);
  const Basis basis{"0", "1", "2"};
  const PureState s = PureState(basis, random_vector(rng, 3));
  const PureState same = apply(LinearOperator::identity(basis), s);
  CHECK((same.amplitudes() - s.amplitudes()).norm() == 0.0);

  const LinearOperator proj = LinearOperator(basis, random_rank1_projector(rng, 3));
  const PureState once = apply(proj, s);
  const PureState twice = apply(proj, once);
  CHECK((twice.amplitudes() - once.amplitudes()).norm() <= 1e-14);
}

TEST_CASE("attenuation shrinks the norm of states with projected weight") {
  Rng rng(5);
  const Basis basis{"0", "1", "2", "3"};
  for (int trial = 0; trial < 10; ++trial) {
    const PureState s = PureState(basis, random_vector(rng, 4)).normalized();
    const LinearOperator proj = LinearOperator(basis, random_rank1_projector(rng, 4));
    const PureState evolved = apply(projector_exponential(proj, 0.7), s);
    const double projected = apply(proj, s).norm();
    if (projected > 1e-6) {
      CHECK(evolved.norm() < s.norm());
    }
  }
}

TEST_CASE("projector_exponential closed form") {
  const Basis basis{"0", "1", "2"};
  const LinearOperator id = LinearOperator::identity(basis);

  SUBCASE("t = 0 is the identity exactly") {
    Rng rng(17);
    const LinearOperator proj = LinearOperator(basis, random_rank1_projector(rng, 3));
    CHECK((projector_exponential(proj, 0.0).matrix() - id.matrix()).norm() == 0.0);
  }

  SUBCASE("projector onto everything scales by e^{-t}") {
    const LinearOperator e = projector_exponential(id, 1.0);
    CHECK((e.matrix() - std::exp(-1.0) * Eigen::MatrixXcd::Identity(3, 3)).norm() <= 1e-15);
  }

  SUBCASE("matches the Taylor-series oracle on random rank-1 projectors") {
    Rng rng(23);
    for (int trial = 0; trial < 20; ++trial) {
      const Eigen::MatrixXcd p = random_rank1_projector(rng, 3);
      const LinearOperator closed = projector_exponential(LinearOperator(basis, p), 0.3);
      CHECK((closed.matrix() - taylor_exp(-0.3 * p)).norm() <= 1e-12);
    }
  }

  SUBCASE("semigroup property exp(-p t1) exp(-p t2) = exp(-p (t1+t2))") {
    Rng rng(29);
    const LinearOperator proj = LinearOperator(basis, random_rank1_projector(rng, 3));
    const LinearOperator combined =
        projector_exponential(proj, 0.4) * projector_exponential(proj, 0.9);
    CHECK((combined.matrix() - projector_exponential(proj, 1.3).matrix()).norm() <= 1e-12);
  }

  SUBCASE("rejects non-projectors") {
    Eigen::MatrixXcd not_proj = Eigen::MatrixXcd::Identity(3, 3) * 2.0;
    CHECK_THROWS_AS(projector_exponential(LinearOperator(basis, not_proj), 0.1),
                    std::domain_error);
  }
}

TEST_CASE("matrix_exponential agrees with the Taylor oracle on general matrices") {
  Rng rng(31);
  const Basis basis{"0", "1", "2", "3"};
  for (int trial = 0; trial < 10; ++trial) {
    Eigen::MatrixXcd a(4, 4);
    for (int r = 0; r < 4; ++r) {
      a.row(r) = random_vector(rng, 4).transpose();
    }
    const LinearOperator e = matrix_exponential(LinearOperator(basis, a));
    CHECK((e.matrix() - taylor_exp(a)).norm() <= 1e-11 * taylor_exp(a).norm());
  }
}

TEST_CASE("structural predicates") {
  const Basis basis{"0", "1"};
  Eigen::MatrixXcd h(2, 2);
  h << 1, 1, 1, -1;
  h /= std::sqrt(2.0);
  CHECK(LinearOperator(basis, h).is_unitary());
  CHECK_FALSE(LinearOperator(basis, h).is_projector());
  CHECK_FALSE(LinearOperator(basis, 2 * h).is_unitary());

  Eigen::MatrixXcd p(2, 2);
  p << 1, 0, 0, 0;
  CHECK(LinearOperator(basis, p).is_projector());
  Eigen::MatrixXcd skew(2, 2);
  skew << 1, 1, 0, 0;  // idempotent but not Hermitian
  CHECK((skew * skew - skew).norm() == 0.0);
  CHECK_FALSE(LinearOperator(basis, skew).is_projector());
}

TEST_CASE("normalized and scaled") {
  const PureState s = ket({"0", "1"}, {3.0, 4.0});
  CHECK(s.norm() == 5.0);
  CHECK(s.normalized().norm() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(s.scaled(Complex(0, 1)).amplitude(0) == Complex(0, 3));

  const PureState zero = ket({"0", "1"}, {0.0, 0.0});
  CHECK_THROWS_AS(zero.normalized(), std::domain_error);
}

TEST_CASE("equal_up_to_global_phase") {
  Rng rng(37);
  const PureState s = PureState({"0", "1", "2"}, random_vector(rng, 3)).normalized();
  CHECK(equal_up_to_global_phase(s, s.scaled(std::exp(Complex(0, 1.234))), 1e-12));
  CHECK_FALSE(equal_up_to_global_phase(s, s.scaled(Complex(2.0)), 1e-12));

  const PureState other = PureState({"0", "1", "2"}, random_vector(rng, 3)).normalized();
  CHECK_FALSE(equal_up_to_global_phase(s, other, 1e-10));
}
