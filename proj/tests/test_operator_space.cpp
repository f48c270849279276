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
#include <limits>

#include "doctest.h"
#include "evotomo/operator_space.hpp"
#include "evotomo/random.hpp"
#include "oracles.hpp"

using namespace evotomo;

TEST_SUITE("operator_space") {

TEST_CASE("basis is Hilbert-Schmidt orthonormal with the identity last") {
  for (int d = 2; d <= 5; ++d) {
    const OperatorBasis b = standard_basis(d);
    REQUIRE(b.size() == d * d);
    for (int i = 0; i < b.size(); ++i)
      for (int j = 0; j < b.size(); ++j)
        CHECK(std::abs((b.element(i).matrix() * b.element(j).matrix()).trace() - Complex(i == j ? 1.0 : 0.0)) <
              1e-14);
    CHECK((b.element(d * d - 1).matrix() - CMatrix::Identity(d, d) / std::sqrt(double(d))).norm() < 1e-15);
    for (int i = 0; i < d * d - 1; ++i) CHECK(std::abs(b.element(i).trace()) < 1e-14);
  }
}

TEST_CASE("basis matches the reference Gell-Mann construction") {
  for (int d = 2; d <= 4; ++d) {
    const auto ref = oracle::gell_mann(d);
    const OperatorBasis b = standard_basis(d);
    for (int k = 0; k < d * d; ++k) CHECK((b.element(k).matrix() - ref[static_cast<std::size_t>(k)]).norm() < 1e-15);
  }
}

TEST_CASE("qubit basis is the Pauli matrices over sqrt 2") {
  const OperatorBasis b = standard_basis(2);
  for (int k = 0; k < 3; ++k) CHECK((b.element(k).matrix() - pauli(k + 1) / std::sqrt(2.0)).norm() < 1e-15);
}

TEST_CASE("vectorize and devectorize are inverse") {
  Rng rng(11);
  for (int d = 2; d <= 5; ++d) {
    for (int trial = 0; trial < 10; ++trial) {
      const HermitianOperator h = random_hermitian(d, rng);
      const RVector v = vectorize(h);
      CHECK(v.size() == d * d);
      CHECK((devectorize(v).matrix() - h.matrix()).norm() < 1e-13);
      const RVector w = RVector::Random(d * d);
      CHECK((vectorize(devectorize(w)) - w).norm() < 1e-13);
    }
  }
}

TEST_CASE("vectorization is an isometry for the trace inner product") {
  Rng rng(12);
  for (int d = 2; d <= 4; ++d) {
    const HermitianOperator a = random_hermitian(d, rng);
    const HermitianOperator b = random_hermitian(d, rng);
    CHECK(hs_inner(a, b) == doctest::Approx((a.matrix() * b.matrix()).trace().real()).epsilon(1e-13));
    CHECK(vectorize(a).dot(vectorize(b)) == doctest::Approx(hs_inner(a, b)).epsilon(1e-12));
  }
}

TEST_CASE("identity vectorizes onto the last coordinate") {
  for (int d = 2; d <= 4; ++d) {
    RVector expected = RVector::Zero(d * d);
    expected(d * d - 1) = std::sqrt(double(d));
    CHECK((vectorize(HermitianOperator::identity(d)) - expected).norm() < 1e-14);
  }
}

TEST_CASE("traceless projection removes the identity component") {
  Rng rng(13);
  const HermitianOperator h = random_hermitian(3, rng);
  const HermitianOperator q = traceless_project(h);
  CHECK(std::abs(q.trace()) < 1e-14);
  CHECK(std::abs(vectorize(q)(8)) < 1e-14);
  CHECK((vectorize(q).head(8) - vectorize(h).head(8)).norm() < 1e-14);
}

TEST_CASE("Hermitian operator validation") {
  CMatrix m(2, 2);
  m << 1.0, Complex(0.0, 1.0), Complex(0.0, 1.0), 0.0;
  CHECK_THROWS_AS(HermitianOperator{m}, InvalidArgument);
  CHECK_THROWS_AS(HermitianOperator{CMatrix::Zero(2, 3)}, DimensionError);
  CMatrix nan = CMatrix::Identity(2, 2);
  nan(0, 0) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(HermitianOperator{nan}, InvalidArgument);
}

TEST_CASE("density operator validation") {
  CHECK_THROWS_AS(DensityOperator{CMatrix(CMatrix::Identity(2, 2))}, InvalidArgument);
  CMatrix neg(2, 2);
  neg << 1.5, 0.0, 0.0, -0.5;
  CHECK_THROWS_AS(DensityOperator{neg}, InvalidArgument);
  const DensityOperator mixed = DensityOperator::maximally_mixed(3);
  CHECK(mixed.trace() == doctest::Approx(1.0));
  CVector psi(2);
  psi << Complex(3.0, 0.0), Complex(0.0, 4.0);
  const DensityOperator pure = DensityOperator::pure(psi);
  CHECK(pure.trace() == doctest::Approx(1.0));
  CHECK((pure.matrix() * pure.matrix() - pure.matrix()).norm() < 1e-14);
}

TEST_CASE("random states are valid and seed-deterministic") {
  Rng a(5);
  Rng b(5);
  for (int d = 2; d <= 4; ++d) {
    const DensityOperator ra = random_density(d, a);
    const DensityOperator rb = random_density(d, b);
    CHECK(ra.matrix() == rb.matrix());
    CHECK(ra.eigenvalues()(0) > 0.0);
    const CMatrix u = haar_unitary(d, a);
    static_cast<void>(haar_unitary(d, b));
    CHECK((u.adjoint() * u - CMatrix::Identity(d, d)).norm() < 1e-13);
  }
  CHECK(derive_seed(1, 0) != derive_seed(1, 1));
  CHECK(derive_seed(1, 0) != derive_seed(2, 0));
}

TEST_CASE("dimension errors") {
  CHECK_THROWS_AS(standard_basis(1), DimensionError);
  CHECK_THROWS_AS(devectorize(RVector::Zero(5)), DimensionError);
  CHECK_THROWS_AS(devectorize(RVector::Zero(1)), DimensionError);
  CHECK_THROWS_AS(hs_inner(HermitianOperator::identity(2), HermitianOperator::identity(3)), DimensionError);
}

}  // TEST_SUITE
