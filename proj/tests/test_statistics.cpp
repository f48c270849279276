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
#include <numbers>

#include "doctest.h"
#include "evotomo/statistics.hpp"

using namespace evotomo;

namespace {

HermitianOperator sigma(int k) { return HermitianOperator(pauli(k)); }

HermitianOperator half_plus(int k) {
  return HermitianOperator((CMatrix::Identity(2, 2) + pauli(k)) / 2.0);
}

MeasurementMap sic_map() {
  MeasurementMap m;
  m.kind = MapKind::observable_beta;
  m.dim = 2;
  const auto sic = tetrahedral_sic();
  m.rows = RMatrix(4, 4);
  for (int i = 0; i < 4; ++i) m.rows.row(i) = vectorize(sic[static_cast<std::size_t>(i)]).transpose();
  m.times = {0, 1, 2, 3};
  return m;
}

}  // namespace

TEST_SUITE("statistics") {

TEST_CASE("sampling edge cases") {
  Rng rng(81);
  const DensityOperator rho = random_density(2, rng);
  const MeasurementPlan one = effect_plan({HermitianOperator::identity(2)}, 50);
  CHECK(sample_frequencies(one, rho, rng)(0) == 1.0);

  const MeasurementPlan half = effect_plan({HermitianOperator(CMatrix::Identity(2, 2) / 2.0)}, 1000000);
  CHECK(std::abs(sample_frequencies(half, rho, rng)(0) - 0.5) < 0.002);

  CVector up(2);
  up << 1.0, 0.0;
  const MeasurementPlan proj = effect_plan({half_plus(3)}, 100);
  CHECK(sample_frequencies(proj, DensityOperator::pure(up), rng)(0) == 1.0);

  CHECK_THROWS_AS(effect_plan({sigma(3)}, 10), InvalidArgument);
  CHECK_THROWS_AS(effect_plan({half_plus(3)}, 0), InvalidArgument);
  CHECK_THROWS_AS(sample_binomial_frequency(1.2, 10, rng), InvalidArgument);
}

TEST_CASE("eigenvalue sampling of a general observable") {
  Rng rng(82);
  const MeasurementPlan plan = observable_plan({HermitianOperator(2.0 * pauli(3))}, 200000);
  CHECK(plan.sampling == Sampling::eigenvalue);
  CHECK(plan.spectral_width == doctest::Approx(4.0));
  const DensityOperator rho = random_density(2, rng);
  const double mean = hs_inner(HermitianOperator(2.0 * pauli(3)), rho);
  CHECK(std::abs(sample_frequencies(plan, rho, rng)(0) - mean) < 0.03);
}

TEST_CASE("exact frequencies give an exact estimate") {
  Rng rng(83);
  const MeasurementMap alpha = build_alpha(unitary_channel(cyclic_qubit_unitary()), half_plus(3), 1, 3);
  const DensityOperator rho = random_density(2, rng);
  const EstimationResult r = estimate_state(alpha, alpha.evaluate(rho));
  CHECK((r.estimate.matrix() - rho.matrix()).norm() < 1e-12);
  CHECK(r.residual <= 1e-10);
  CHECK(r.min_eigenvalue > 0.0);

  const MeasurementMap beta = build_beta(qubit_dephasing_depolarizing(0.3, 1.0), landscape_probe_state(), 0, 3);
  const HermitianOperator h = random_hermitian(2, rng);
  const EstimationResult o = estimate_observable(beta, beta.evaluate(h));
  CHECK((o.estimate.matrix() - h.matrix()).norm() < 1e-10);
}

TEST_CASE("mse bound values") {
  const MeasurementMap alpha = build_alpha(unitary_channel(cyclic_qubit_unitary()), sigma(3), 1, 3);
  CHECK(mse_bound(alpha, 100) == doctest::Approx(3.75e-3).epsilon(1e-12));
  CHECK(mse_bound(alpha, 1000) == doctest::Approx(3.75e-4).epsilon(1e-12));
  CHECK(mse_bound(alpha, 100, 2.0) == doctest::Approx(1.5e-2).epsilon(1e-12));
  CHECK(mse_bound(sic_map(), 100) == doctest::Approx(1.5e-2).epsilon(1e-10));

  const MeasurementMap blind = build_beta(SuperOperator::identity(2), DensityOperator::maximally_mixed(2), 0, 3);
  CHECK(mse_bound(blind, 100) == std::numeric_limits<double>::infinity());
}

TEST_CASE("Monte-Carlo error stays within the bound") {
  const MseReport r =
      mse_experiment(unitary_channel(cyclic_qubit_unitary()), half_plus(3), DensityOperator::maximally_mixed(2),
                     MapKind::state_alpha, 1, 3, 1000, 400, 5);
  CHECK(r.within_bound);
  CHECK(r.ratio <= stochastic_slack(400));
  CHECK(r.bias_norm <= 3.0 * std::sqrt(r.bound) / std::sqrt(400.0));
  CHECK(r.max_variance <= stochastic_slack(400) / (4.0 * 1000));
  // Summing the realised variances gives a tighter bound that still holds.
  CHECK(r.variance_bound <= r.bound * stochastic_slack(400));
  CHECK(r.empirical_mse <= r.variance_bound * stochastic_slack(400));
}

TEST_CASE("beta experiment with the rotated depolarizing qubit") {
  const MseReport r = mse_experiment(qubit_dephasing_depolarizing(0.3, std::numbers::pi / 2), landscape_probe_state(),
                                     half_plus(1), MapKind::observable_beta, 0, 3, 500, 300, 6);
  CHECK(r.within_bound);
  CHECK(r.sigma_min > 0.0);
}

TEST_CASE("qutrit experiment") {
  Rng rng(84);
  const SuperOperator t = exponentiate(random_lindblad(3, rng), 1.0);
  HermitianOperator effect = random_hermitian(3, rng);
  const RVector ev = effect.eigenvalues();
  effect = HermitianOperator((effect.matrix() - ev(0) * CMatrix::Identity(3, 3)) / (ev(2) - ev(0)));
  const MseReport r = mse_experiment(t, effect, random_density(3, rng), MapKind::state_alpha, 0, 7, 1000, 200, 7);
  CHECK(r.within_bound);
}

TEST_CASE("experiment preconditions and determinism") {
  const SuperOperator t = unitary_channel(cyclic_qubit_unitary());
  CHECK_THROWS_AS(mse_experiment(t, HermitianOperator::identity(2), DensityOperator::maximally_mixed(2),
                                 MapKind::state_alpha, 1, 3, 100, 10, 1),
                  DegenerateProbe);
  CHECK_THROWS_AS(mse_experiment(SuperOperator::identity(2), half_plus(3), DensityOperator::maximally_mixed(2),
                                 MapKind::state_alpha, 1, 3, 100, 10, 1),
                  RankDeficientMap);
  const MseReport a = mse_experiment(t, half_plus(3), DensityOperator::maximally_mixed(2), MapKind::state_alpha, 1, 3,
                                     100, 20, 9);
  const MseReport b = mse_experiment(t, half_plus(3), DensityOperator::maximally_mixed(2), MapKind::state_alpha, 1, 3,
                                     100, 20, 9);
  CHECK(a.empirical_mse == b.empirical_mse);
}

}  // TEST_SUITE
