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

#include <span>
#include <vector>

#include "evotomo/channels.hpp"
#include "evotomo/spectral.hpp"

namespace evotomo {

enum class TimeMode { discrete, continuous };

/// Expectation values a_i = tr(rho T^i(H0)) on consecutive integer indices,
/// or a(t_k) = tr(rho e^{t_k L}(H0)) on strictly increasing real times.
class TimeSeries {
 public:
  static TimeSeries discrete(int start, std::vector<double> values);
  static TimeSeries continuous(std::vector<double> times, std::vector<double> values);

  TimeMode mode() const noexcept { return mode_; }
  /// First index of a discrete series.
  int start() const noexcept { return start_; }
  int size() const noexcept { return static_cast<int>(values_.size()); }
  /// Indices (as reals) for discrete series, times for continuous ones.
  std::vector<double> times() const;
  const std::vector<double>& values() const noexcept { return values_; }
  double at(int k) const { return values_.at(static_cast<std::size_t>(k)); }

 private:
  TimeSeries(TimeMode mode, int start, std::vector<double> times, std::vector<double> values);

  TimeMode mode_;
  int start_ = 0;
  std::vector<double> times_;
  std::vector<double> values_;
};

/// a_i = tr(rho T^i(H0)) for i = t0 .. t0 + len - 1, by iterated application.
TimeSeries generate_discrete(const HermitianOperator& rho, const HermitianOperator& h0,
                             const SuperOperator& t, int t0, int len);

/// a(t_k) = tr(rho e^{t_k L}(H0)).
TimeSeries generate_continuous(const HermitianOperator& rho, const HermitianOperator& h0,
                               const LindbladGenerator& l, const std::vector<double>& times);

enum class ExtensionKind { linear, affine, continuous };

/// Maps a seed window of a series to its extension.
///
/// The discrete kinds store a dense coefficient table: output index
/// kappa + r equals offsets(r) + coefficients.row(r) . seed. The linear kind
/// depends only on the spectral profile; the affine kind also on (T, H0) via
/// the offsets. The continuous kind stores the spectrum of L and an LU factor
/// of Y_{jk} = e^{lambda_j t_k} and evaluates beta(t) per call.
class ExtensionOperator {
 public:
  ExtensionKind kind() const noexcept { return kind_; }
  int kappa() const noexcept { return kappa_; }
  int seed_start() const noexcept { return seed_start_; }
  int seed_length() const noexcept { return seed_length_; }
  int horizon() const noexcept { return horizon_; }
  const RMatrix& coefficients() const noexcept { return coefficients_; }
  const RVector& offsets() const noexcept { return offsets_; }
  /// Forward recursion a_{m+delta} = sum_i forward[i] a_{m+j0+i}.
  const RVector& forward_coefficients() const noexcept { return forward_; }
  /// Backward recursion a_n = sum_i backward[i] a_{n+1+i}.
  const RVector& backward_coefficients() const noexcept { return backward_; }
  /// Condition number of the coefficient table (discrete) or of Y (continuous).
  double condition_number() const noexcept { return condition_; }

  /// Discrete kinds: extended series on indices kappa .. horizon.
  TimeSeries apply(const TimeSeries& seed) const;

  /// Continuous kind.
  const std::vector<double>& sample_times() const noexcept { return sample_times_; }
  const CVector& generator_eigenvalues() const noexcept { return eigenvalues_; }
  struct Weights {
    RVector beta;
    double imag_residual = 0.0;
  };
  /// Solves Y beta(t) = z(t); beta is real up to imag_residual.
  Weights weights(double t) const;
  /// a(t) = sum_k beta_k(t) a(t_k).
  double evaluate(double t, std::span<const double> samples) const;
  TimeSeries evaluate(const TimeSeries& samples, const std::vector<double>& grid) const;

 private:
  friend ExtensionOperator build_linear_extension(const SpectralProfile&, int, int, int);
  friend ExtensionOperator build_affine_extension(const SuperOperator&, const HermitianOperator&, int,
                                                  int, int, double);
  friend ExtensionOperator build_continuous_extension(const LindbladGenerator&,
                                                      const std::vector<double>&, double);

  ExtensionKind kind_ = ExtensionKind::linear;
  int kappa_ = 0;
  int seed_start_ = 0;
  int seed_length_ = 0;
  int horizon_ = 0;
  RMatrix coefficients_;
  RVector offsets_;
  RVector forward_;
  RVector backward_;
  double condition_ = 1.0;
  std::vector<double> sample_times_;
  CVector eigenvalues_;
  Eigen::PartialPivLU<CMatrix> y_lu_;
};

/// Extension from the seed (a_i)_{i=t0}^{t0+t-1} to (a_i)_{i=kappa}^{horizon},
/// kappa = min(t0, j0). Requires t >= delta - kappa; throws InsufficientSeed
/// otherwise. With an ambiguous j0 only the kappa = t0 path is offered, and
/// only when t >= delta; else NumericalAmbiguity.
ExtensionOperator build_linear_extension(const SpectralProfile& profile, int t0, int t, int horizon);

/// Affine extension valid for unit-trace rho: a_i = gamma_i + sum_k B_ik a_k,
/// using the minimal polynomial of T_Q and reference rho0 = 1/d.
ExtensionOperator build_affine_extension(const SuperOperator& t, const HermitianOperator& h0, int t0,
                                         int seed_length, int horizon,
                                         double tol = kDefaultSpectralTol);

/// Continuous-time extension from d^2 distinct sample times. Needs a
/// nondegenerate generator spectrum (gap > gap_tol, else Unsupported) and
/// cond(Y) <= 1e12 (else IllConditioned).
ExtensionOperator build_continuous_extension(const LindbladGenerator& l,
                                             const std::vector<double>& sample_times,
                                             double gap_tol = 1e-8);

/// Numerical rank (rel. tol rank_tol) of `trials` stacked series windows
/// (a_0..a_{window-1}) for random density matrices and observables.
int series_subspace_rank(const SuperOperator& t, int trials, int window, Rng& rng,
                         double rank_tol = 1e-9);

}  // namespace evotomo
