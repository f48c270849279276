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

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "evotomo/tomography.hpp"

namespace evotomo {

enum class Sampling {
  /// Two-outcome measurement of an effect 0 <= H <= 1; f = Binomial(n, tr(H rho)) / n.
  binomial,
  /// Projective measurement of a bounded observable; f is the mean of n
  /// sampled eigenvalues.
  eigenvalue,
};

/// Each operator measured `shots` times, independently.
struct MeasurementPlan {
  std::vector<HermitianOperator> operators;
  int shots = 1;
  /// Length of an interval holding every outcome: 1 for effects, the largest
  /// spectral width for general observables.
  double spectral_width = 1.0;
  Sampling sampling = Sampling::binomial;
};

/// Validates the effects (eigenvalues in [-1e-10, 1 + 1e-10]) and n >= 1.
MeasurementPlan effect_plan(std::vector<HermitianOperator> effects, int shots);
/// Any Hermitian operators; spectral_width from the true spectra.
MeasurementPlan observable_plan(std::vector<HermitianOperator> observables, int shots);

/// The evolved probes T^i(H0) of an alpha map, as operators.
std::vector<HermitianOperator> map_operators(const MeasurementMap& map);

/// f_i for each operator of the plan measured on rho.
RVector sample_frequencies(const MeasurementPlan& plan, const HermitianOperator& rho, Rng& rng);

/// Binomial(n, p) / n with p checked to lie in [-1e-10, 1 + 1e-10].
double sample_binomial_frequency(double p, int n, Rng& rng);

struct EstimationResult {
  RVector frequencies;
  HermitianOperator estimate = HermitianOperator::zero(2);
  std::optional<double> squared_error;
  double residual = 0.0;
  /// States only: smallest eigenvalue of the estimate (not projected).
  double min_eigenvalue = 0.0;
};

/// rho_hat = 1/d + alpha^{-1}(f - alpha(1/d)).
EstimationResult estimate_state(const MeasurementMap& alpha, const RVector& f);
/// H_hat = beta^{-1}(f).
EstimationResult estimate_observable(const MeasurementMap& beta, const RVector& f);

/// ||map^{-1}||^2 * width^2 * rows / (4 n); +inf for a rank-deficient map.
double mse_bound(const MeasurementMap& map, int shots, double spectral_width = 1.0);
double mse_bound(const MeasurementMap& map, const MeasurementPlan& plan);

struct MseReport {
  double empirical_mse = 0.0;
  double bound = 0.0;
  double ratio = 0.0;
  int trials = 0;
  int shots = 0;
  double sigma_min = 0.0;
  /// ||map^{-1}||^2 * sum_i (empirical Var f_i).
  double variance_bound = 0.0;
  /// max_i empirical Var f_i.
  double max_variance = 0.0;
  /// ||mean estimate - truth||_2.
  double bias_norm = 0.0;
  /// empirical_mse <= bound (1 + 5 / sqrt(trials)).
  bool within_bound = false;
};

double stochastic_slack(int trials);

/// Monte-Carlo check of the mean squared error of the linear estimator.
///
/// state_alpha: probe is the effect H0, truth the state; effects T^i(H0) are
/// measured on the truth. observable_beta: probe is the state rho0, truth the
/// effect H; H is measured on the evolved states T*^i(rho0). Indices t0..t1.
/// Trial k draws from an RNG seeded with derive_seed(seed, k).
MseReport mse_experiment(const SuperOperator& t, const HermitianOperator& probe, const HermitianOperator& truth,
                         MapKind kind, int t0, int t1, int shots, int trials, std::uint64_t seed);

}  // namespace evotomo
