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

#include "evotomo/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace evotomo {

namespace {

constexpr double kEffectTol = 1e-10;

void check_effect(const HermitianOperator& h, std::size_t index) {
  const RVector ev = h.eigenvalues();
  if (ev(0) < -kEffectTol || ev(ev.size() - 1) > 1.0 + kEffectTol)
    throw InvalidArgument("operator " + std::to_string(index) + " is not an effect: spectrum [" +
                          std::to_string(ev(0)) + ", " + std::to_string(ev(ev.size() - 1)) + "]");
}

void check_shots(int shots) {
  if (shots < 1) throw InvalidArgument("need at least one shot per operator");
}

double expectation(const HermitianOperator& h, const HermitianOperator& rho) { return hs_inner(h, rho); }

// Mean of n projective outcomes, with multinomial counts drawn as a chain of
// conditional binomials.
double sample_eigenvalue_mean(const HermitianOperator& h, const HermitianOperator& rho, int n, Rng& rng) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h.matrix());
  const RVector& values = es.eigenvalues();
  const CMatrix& vecs = es.eigenvectors();
  const Eigen::Index k = values.size();
  RVector probs(k);
  for (Eigen::Index j = 0; j < k; ++j)
    probs(j) = std::max(0.0, (vecs.col(j).adjoint() * rho.matrix() * vecs.col(j))(0).real());
  double remaining_mass = probs.sum();
  long remaining = n;
  double total = 0.0;
  for (Eigen::Index j = 0; j < k && remaining > 0; ++j) {
    long count = remaining;
    if (j + 1 < k) {
      const double q = remaining_mass > 0.0 ? std::clamp(probs(j) / remaining_mass, 0.0, 1.0) : 0.0;
      count = std::binomial_distribution<long>(remaining, q)(rng);
    }
    total += static_cast<double>(count) * values(j);
    remaining -= count;
    remaining_mass -= probs(j);
  }
  return total / n;
}

}  // namespace

MeasurementPlan effect_plan(std::vector<HermitianOperator> effects, int shots) {
  check_shots(shots);
  for (std::size_t i = 0; i < effects.size(); ++i) check_effect(effects[i], i);
  MeasurementPlan plan;
  plan.operators = std::move(effects);
  plan.shots = shots;
  plan.spectral_width = 1.0;
  plan.sampling = Sampling::binomial;
  return plan;
}

MeasurementPlan observable_plan(std::vector<HermitianOperator> observables, int shots) {
  check_shots(shots);
  MeasurementPlan plan;
  plan.spectral_width = 0.0;
  for (const auto& h : observables) {
    const RVector ev = h.eigenvalues();
    plan.spectral_width = std::max(plan.spectral_width, ev(ev.size() - 1) - ev(0));
  }
  plan.operators = std::move(observables);
  plan.shots = shots;
  plan.sampling = Sampling::eigenvalue;
  return plan;
}

std::vector<HermitianOperator> map_operators(const MeasurementMap& map) {
  std::vector<HermitianOperator> out;
  out.reserve(static_cast<std::size_t>(map.rows.rows()));
  for (Eigen::Index i = 0; i < map.rows.rows(); ++i) out.push_back(devectorize(RVector(map.rows.row(i).transpose())));
  return out;
}

double sample_binomial_frequency(double p, int n, Rng& rng) {
  check_shots(n);
  if (!(p >= -kEffectTol && p <= 1.0 + kEffectTol))
    throw InvalidArgument("outcome probability " + std::to_string(p) + " lies outside [0, 1]");
  const double q = std::clamp(p, 0.0, 1.0);
  return static_cast<double>(std::binomial_distribution<long>(n, q)(rng)) / n;
}

RVector sample_frequencies(const MeasurementPlan& plan, const HermitianOperator& rho, Rng& rng) {
  const DensityOperator state(rho);
  RVector f(static_cast<Eigen::Index>(plan.operators.size()));
  for (std::size_t i = 0; i < plan.operators.size(); ++i) {
    const HermitianOperator& h = plan.operators[i];
    if (h.dim() != state.dim()) throw DimensionError("operator dimension does not match state");
    f(static_cast<Eigen::Index>(i)) = plan.sampling == Sampling::binomial
                                          ? sample_binomial_frequency(expectation(h, state), plan.shots, rng)
                                          : sample_eigenvalue_mean(h, state, plan.shots, rng);
  }
  return f;
}

EstimationResult estimate_state(const MeasurementMap& alpha, const RVector& f) {
  const StateReconstruction r = reconstruct_state(alpha, f);
  EstimationResult out;
  out.frequencies = f;
  out.estimate = r.estimate;
  out.residual = r.residual;
  out.min_eigenvalue = r.min_eigenvalue;
  return out;
}

EstimationResult estimate_observable(const MeasurementMap& beta, const RVector& f) {
  EstimationResult out;
  out.frequencies = f;
  out.estimate = reconstruct_observable(beta, f);
  out.residual = (beta.evaluate(out.estimate) - f).norm();
  out.min_eigenvalue = out.estimate.eigenvalues()(0);
  return out;
}

double mse_bound(const MeasurementMap& map, int shots, double spectral_width) {
  check_shots(shots);
  const InjectivityCertificate cert = certify(map);
  if (!cert.injective()) return std::numeric_limits<double>::infinity();
  const double inv_sq = 1.0 / (cert.sigma_min * cert.sigma_min);
  return inv_sq * spectral_width * spectral_width * map.row_count() / (4.0 * shots);
}

double mse_bound(const MeasurementMap& map, const MeasurementPlan& plan) {
  return mse_bound(map, plan.shots, plan.spectral_width);
}

double stochastic_slack(int trials) { return 1.0 + 5.0 / std::sqrt(static_cast<double>(trials)); }

MseReport mse_experiment(const SuperOperator& t, const HermitianOperator& probe, const HermitianOperator& truth,
                         MapKind kind, int t0, int t1, int shots, int trials, std::uint64_t seed) {
  check_shots(shots);
  if (trials < 2) throw InvalidArgument("need at least two trials");
  const MeasurementMap map =
      kind == MapKind::state_alpha ? build_alpha(t, probe, t0, t1) : build_beta(t, probe, t0, t1);
  const InjectivityCertificate cert = certify(map);
  if (!cert.injective())
    throw RankDeficientMap("measurement map is rank deficient; the estimator is undefined", cert);

  // What is measured on what: effects on a fixed state (alpha), or a fixed
  // effect on evolved states (beta).
  const std::vector<HermitianOperator> orbit = map_operators(map);
  std::vector<HermitianOperator> states;
  HermitianOperator effect = truth;
  if (kind == MapKind::state_alpha) {
    effect_plan(orbit, shots);
    static_cast<void>(DensityOperator(truth));  // validates
  } else {
    effect_plan({truth}, shots);
    for (const auto& s : orbit) states.push_back(DensityOperator(s));
  }

  const int m = map.row_count();
  const int n = t.dim() * t.dim();
  RVector f_sum = RVector::Zero(m);
  RVector f_sq = RVector::Zero(m);
  RVector est_sum = RVector::Zero(n);
  double err_sum = 0.0;
  const RVector truth_vec = vectorize(truth);
  for (int k = 0; k < trials; ++k) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(k)));
    RVector f(m);
    for (int i = 0; i < m; ++i) {
      const double p = kind == MapKind::state_alpha ? expectation(orbit[static_cast<std::size_t>(i)], truth)
                                                    : expectation(effect, states[static_cast<std::size_t>(i)]);
      f(i) = sample_binomial_frequency(p, shots, rng);
    }
    const EstimationResult r = kind == MapKind::state_alpha ? estimate_state(map, f) : estimate_observable(map, f);
    const RVector e = vectorize(r.estimate);
    err_sum += (e - truth_vec).squaredNorm();
    est_sum += e;
    f_sum += f;
    f_sq += f.cwiseAbs2();
  }

  MseReport report;
  report.trials = trials;
  report.shots = shots;
  report.sigma_min = cert.sigma_min;
  report.empirical_mse = err_sum / trials;
  report.bound = mse_bound(map, shots, 1.0);
  report.ratio = report.empirical_mse / report.bound;
  const RVector mean_f = f_sum / trials;
  const RVector var_f = ((f_sq - trials * mean_f.cwiseAbs2()) / (trials - 1)).cwiseMax(0.0);
  report.max_variance = var_f.maxCoeff();
  report.variance_bound = var_f.sum() / (cert.sigma_min * cert.sigma_min);
  report.bias_norm = (est_sum / trials - truth_vec).norm();
  report.within_bound = report.empirical_mse <= report.bound * stochastic_slack(trials);
  return report;
}

}  // namespace evotomo
