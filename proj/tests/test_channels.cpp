// Copyright 2026 The evotomo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "evotomo/channels.hpp"
#include "evotomo/spectral.hpp"
#include "oracles.hpp"

using namespace evotomo;

namespace {

HermitianOperator sigma(int k) { return HermitianOperator(pauli(k)); }

}  // namespace

TEST_SUITE("channels") {

TEST_CASE("unitary channel acts as U^dagger X U") {
  Rng rng(21);
  for (int d = 2; d <= 4; ++d) {
    const CMatrix u = haar_unitary(d, rng);
    const SuperOperator t = unitary_channel(u);
    const HermitianOperator h = random_hermitian(d, rng);
    CHECK((apply(t, h).matrix() - u.adjoint() * h.matrix() * u).norm() < 1e-12);
    CHECK(t.unital());
    CHECK((t.transfer().transpose() * t.transfer() - RMatrix::Identity(d * d, d * d)).norm() < 1e-12);
    const ChannelReport r = validate_channel(t);
    CHECK(r.completely_positive);
    CHECK(r.trace_dual_preserving);
  }
}

TEST_CASE("non-unitary input is rejected") {
  CMatrix m = CMatrix::Identity(2, 2);
  m(0, 1) = 0.5;
  CHECK_THROWS_AS(unitary_channel(m), InvalidArgument);
}

TEST_CASE("dual, composition and powers") {
  Rng rng(22);
  const SuperOperator a = unitary_channel(haar_unitary(3, rng));
  const SuperOperator b = depolarizing_mixture(haar_unitary(3, rng), DensityOperator::maximally_mixed(3), 0.3);
  CHECK((a.dual().transfer() - a.transfer().transpose()).norm() == 0.0);
  const HermitianOperator h = random_hermitian(3, rng);
  CHECK((apply(a.compose(b), h).matrix() - apply(a, apply(b, h)).matrix()).norm() < 1e-12);
  CHECK((a.power(3).transfer() - a.transfer() * a.transfer() * a.transfer()).norm() < 1e-12);
  CHECK(a.power(0).transfer() == RMatrix::Identity(9, 9));
  // Dual of a unital CP map is trace preserving on states.
  const DensityOperator rho = random_density(3, rng);
  CHECK(apply(b.dual(), rho).trace() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("depolarizing mixture matches its defining formula") {
  Rng rng(23);
  for (int d = 2; d <= 4; ++d) {
    const CMatrix u = haar_unitary(d, rng);
    const DensityOperator sigma_state = random_density(d, rng);
    const double lambda = 0.37;
    const SuperOperator t = depolarizing_mixture(u, sigma_state, lambda);
    const HermitianOperator x = random_hermitian(d, rng);
    const CMatrix expected = (1.0 - lambda) * u.adjoint() * x.matrix() * u +
                             lambda * (x.matrix() * sigma_state.matrix()).trace() * CMatrix::Identity(d, d);
    CHECK((apply(t, x).matrix() - expected).norm() < 1e-12);
    CHECK(t.unital());
    CHECK(validate_channel(t).completely_positive);
  }
  CHECK_THROWS_AS(depolarizing_mixture(CMatrix::Identity(2, 2), DensityOperator::maximally_mixed(2), 1.2),
                  InvalidArgument);
}

TEST_CASE("qubit depolarizing rotation has the expected transfer matrix") {
  // T(X) = (1-p) U^dag X U + p tr(X) 1/2, U = diag(e^{i th/2}, e^{-i th/2}):
  // rotation by th in the (sigma_1, sigma_2) plane, damped by 1-p.
  const double p = 0.3;
  const double th = 1.0;
  RMatrix expected = RMatrix::Zero(4, 4);
  expected(0, 0) = 0.7 * std::cos(th);
  expected(1, 0) = 0.7 * std::sin(th);
  expected(0, 1) = -0.7 * std::sin(th);
  expected(1, 1) = 0.7 * std::cos(th);
  expected(2, 2) = 0.7;
  expected(3, 3) = 1.0;
  CHECK((qubit_dephasing_depolarizing(p, th).transfer() - expected).cwiseAbs().maxCoeff() < 1e-15);
  CHECK_THROWS_AS(qubit_dephasing_depolarizing(-0.1, 1.0), InvalidArgument);
  CHECK_THROWS_AS(qubit_dephasing_depolarizing(0.5, 4.0), InvalidArgument);
}

TEST_CASE("cyclic qubit unitary permutes the Pauli matrices") {
  const SuperOperator t = unitary_channel(cyclic_qubit_unitary());
  CHECK((apply(t, sigma(3)).matrix() - pauli(1)).norm() < 1e-14);
  CHECK((apply(t, sigma(1)).matrix() - pauli(2)).norm() < 1e-14);
  CHECK((apply(t, sigma(2)).matrix() - pauli(3)).norm() < 1e-14);
}

TEST_CASE("transpose map is positive but not completely positive") {
  RMatrix t = RMatrix::Identity(4, 4);
  t(1, 1) = -1.0;  // sigma_2 -> -sigma_2
  const ChannelReport r = validate_channel(SuperOperator(2, t));
  CHECK(r.unital);
  CHECK_FALSE(r.completely_positive);
  CHECK(r.choi_min_eigenvalue == doctest::Approx(-1.0));
}

TEST_CASE("Lindblad generator agrees with the Kraus-form oracle") {
  Rng rng(24);
  for (int d = 2; d <= 3; ++d) {
    const LindbladGenerator l = random_lindblad(d, rng, LindbladScales{0.5, 1.0});
    const oracle::Lindblad ref(d, l.p(), l.v_imag());
    for (int trial = 0; trial < 3; ++trial) {
      const CMatrix x = complex_gaussian(d, d, rng);
      CHECK((l.apply(x) - ref.apply(x)).norm() < 1e-12 * (1.0 + x.norm()));
    }
    CHECK(l.apply(CMatrix::Identity(d, d)).norm() < 1e-13);
    CHECK(l.transfer().col(d * d - 1).norm() < 1e-13);
  }
}

TEST_CASE("Choi matrix of a generator has the block form [[P, v], [v*, -tr P]]") {
  Rng rng(25);
  for (int d = 2; d <= 3; ++d) {
    const LindbladGenerator l = random_lindblad(d, rng, LindbladScales{0.7, 1.3});
    const int n = d * d - 1;
    const CMatrix c = l.choi_in_operator_basis();
    const CVector v = l.v();
    CHECK((c.topLeftCorner(n, n) - l.p()).norm() < 1e-12);
    CHECK((c.topRightCorner(n, 1) - v).norm() < 1e-12);
    CHECK((c.bottomLeftCorner(1, n) - v.adjoint()).norm() < 1e-12);
    CHECK(std::abs(c(n, n) + l.p().trace()) < 1e-12);
    CHECK((v.imag() - l.v_imag()).norm() < 1e-12);
  }
}

TEST_CASE("matrix exponential agrees with Taylor and eigendecomposition oracles") {
  Rng rng(26);
  for (int d = 2; d <= 3; ++d) {
    const LindbladGenerator l = random_lindblad(d, rng);
    const oracle::Lindblad ref(d, l.p(), l.v_imag());
    for (double t : {0.1, 1.0, 3.7}) {
      const SuperOperator e = exponentiate(l, t);
      CHECK((e.transfer() - exponentiate_by_eigendecomposition(l, t)).norm() < 1e-10);
      const CMatrix natural = oracle::expm_taylor(t * ref.natural());
      CHECK((e.natural_matrix() - natural).norm() < 1e-11);
    }
    CHECK(exponentiate(l, 0.0).transfer() == RMatrix::Identity(d * d, d * d));
    CHECK_THROWS_AS(exponentiate(l, -1.0), InvalidArgument);
  }
}

TEST_CASE("semigroup elements are unital channels") {
  Rng rng(27);
  for (int d = 2; d <= 3; ++d) {
    for (int trial = 0; trial < 5; ++trial) {
      const LindbladGenerator l = random_lindblad(d, rng, 0.5);
      for (double t : {0.05, 0.7, 4.0}) {
        const ChannelReport r = validate_channel(exponentiate(l, t));
        CHECK(r.unital);
        CHECK(r.trace_dual_preserving);
        CHECK(r.choi_min_eigenvalue > -1e-10);
      }
    }
  }
}

TEST_CASE("single-scale sampling uses one scale for both parts") {
  Rng a(28);
  Rng b(28);
  const LindbladGenerator x = random_lindblad(2, a, 0.4);
  const LindbladGenerator y = random_lindblad(2, b, LindbladScales{0.4, 0.4});
  CHECK(x.p() == y.p());
  CHECK(x.v_imag() == y.v_imag());
}

TEST_CASE("generator validation") {
  CMatrix p = CMatrix::Identity(3, 3);
  p(0, 0) = -1.0;
  CHECK_THROWS_AS(LindbladGenerator(2, p, RVector::Zero(3)), InvalidArgument);
  CHECK_THROWS_AS(LindbladGenerator(2, CMatrix::Identity(4, 4), RVector::Zero(3)), DimensionError);
  CHECK_THROWS_AS(LindbladGenerator(2, CMatrix::Identity(3, 3), RVector::Zero(2)), DimensionError);
}

TEST_CASE("restriction to the traceless block") {
  const SuperOperator t = qubit_dephasing_depolarizing(0.3, 1.0);
  const RMatrix q = restrict_traceless(t);
  CHECK(q.rows() == 3);
  CHECK(q(2, 2) == doctest::Approx(0.7));
  RMatrix nonunital = RMatrix::Identity(4, 4);
  nonunital(0, 3) = 0.1;
  CHECK_THROWS_AS(restrict_traceless(SuperOperator(2, nonunital)), InvalidArgument);
}

TEST_CASE("random generators have nondegenerate transfer spectra") {
  Rng rng(29);
  int degenerate = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int d = 2 + trial % 2;
    if (min_eigenvalue_gap(random_lindblad(d, rng).transfer()) < 1e-8) ++degenerate;
  }
  CHECK(degenerate == 0);
}

}  // TEST_SUITE
