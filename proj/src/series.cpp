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

#include "evotomo/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "evotomo/errors.hpp"

namespace evotomo {

namespace {

constexpr double kMaxConditionY = 1e12;

double condition_of(const RMatrix& m) {
  Eigen::JacobiSVD<RMatrix> svd(m);
  const RVector& s = svd.singularValues();
  return s(s.size() - 1) > 0.0 ? s(0) / s(s.size() - 1) : std::numeric_limits<double>::infinity();
}

void check_finite(const std::vector<double>& xs, const char* what) {
  for (double x : xs)
    if (!std::isfinite(x)) throw InvalidArgument(std::string(what) + " must be finite");
}

}  // namespace

TimeSeries::TimeSeries(TimeMode mode, int start, std::vector<double> times, std::vector<double> values)
    : mode_(mode), start_(start), times_(std::move(times)), values_(std::move(values)) {}

TimeSeries TimeSeries::discrete(int start, std::vector<double> values) {
  if (start < 0) throw InvalidArgument("discrete series must start at an index >= 0");
  check_finite(values, "series values");
  return TimeSeries(TimeMode::discrete, start, {}, std::move(values));
}

TimeSeries TimeSeries::continuous(std::vector<double> times, std::vector<double> values) {
  if (times.size() != values.size()) throw InvalidArgument("times and values differ in length");
  check_finite(times, "series times");
  check_finite(values, "series values");
  for (std::size_t i = 1; i < times.size(); ++i)
    if (!(times[i] > times[i - 1])) throw InvalidArgument("continuous times must be strictly increasing");
  return TimeSeries(TimeMode::continuous, 0, std::move(times), std::move(values));
}

std::vector<double> TimeSeries::times() const {
  if (mode_ == TimeMode::continuous) return times_;
  std::vector<double> idx(values_.size());
  for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = static_cast<double>(start_) + static_cast<double>(k);
  return idx;
}

TimeSeries generate_discrete(const HermitianOperator& rho, const HermitianOperator& h0, const SuperOperator& t,
                             int t0, int len) {
  if (rho.dim() != t.dim() || h0.dim() != t.dim())
    throw DimensionError("state/observable dimension does not match channel");
  if (t0 < 0 || len < 1) throw InvalidArgument("need t0 >= 0 and len >= 1");
  const RVector r = vectorize(rho);
  RVector h = vectorize(h0);
  for (int i = 0; i < t0; ++i) h = t.transfer() * h;
  std::vector<double> values(static_cast<std::size_t>(len));
  for (int k = 0; k < len; ++k) {
    values[static_cast<std::size_t>(k)] = r.dot(h);
    h = t.transfer() * h;
  }
  return TimeSeries::discrete(t0, std::move(values));
}

TimeSeries generate_continuous(const HermitianOperator& rho, const HermitianOperator& h0,
                               const LindbladGenerator& l, const std::vector<double>& times) {
  if (rho.dim() != l.dim() || h0.dim() != l.dim())
    throw DimensionError("state/observable dimension does not match generator");
  const RVector r = vectorize(rho);
  const RVector h = vectorize(h0);
  std::vector<double> values;
  values.reserve(times.size());
  for (double t : times) values.push_back(r.dot(exponentiate(l, t).transfer() * h));
  return TimeSeries::continuous(times, std::move(values));
}

TimeSeries ExtensionOperator::apply(const TimeSeries& seed) const {
  if (kind_ == ExtensionKind::continuous)
    throw InvalidArgument("continuous extensions are evaluated at times, not applied to windows");
  if (seed.mode() != TimeMode::discrete) throw InvalidArgument("seed must be a discrete series");
  if (seed.start() != seed_start_ || seed.size() != seed_length_)
    throw InvalidArgument("seed window [" + std::to_string(seed.start()) + ", +" +
                          std::to_string(seed.size()) + ") does not match the operator's [" +
                          std::to_string(seed_start_) + ", +" + std::to_string(seed_length_) + ")");
  const RVector s = Eigen::Map<const RVector>(seed.values().data(), seed.size());
  const RVector out = coefficients_ * s + offsets_;
  return TimeSeries::discrete(kappa_, std::vector<double>(out.data(), out.data() + out.size()));
}

ExtensionOperator::Weights ExtensionOperator::weights(double t) const {
  if (kind_ != ExtensionKind::continuous) throw InvalidArgument("weights are defined for continuous extensions");
  const CVector z = (eigenvalues_ * t).array().exp();
  const CVector beta = y_lu_.solve(z);
  Weights w;
  w.beta = beta.real();
  w.imag_residual = beta.imag().cwiseAbs().maxCoeff();
  return w;
}

double ExtensionOperator::evaluate(double t, std::span<const double> samples) const {
  if (samples.size() != sample_times_.size())
    throw InvalidArgument("expected one sample per extension time");
  const RVector beta = weights(t).beta;
  double sum = 0.0;
  for (std::size_t k = 0; k < samples.size(); ++k) sum += beta(static_cast<Eigen::Index>(k)) * samples[k];
  return sum;
}

TimeSeries ExtensionOperator::evaluate(const TimeSeries& samples, const std::vector<double>& grid) const {
  if (samples.mode() != TimeMode::continuous) throw InvalidArgument("samples must be a continuous series");
  const std::vector<double> times = samples.times();
  if (times.size() != sample_times_.size()) throw InvalidArgument("sample count does not match extension");
  for (std::size_t k = 0; k < times.size(); ++k)
    if (times[k] != sample_times_[k]) throw InvalidArgument("sample times do not match the extension's");
  std::vector<double> values;
  values.reserve(grid.size());
  for (double t : grid) values.push_back(evaluate(t, samples.values()));
  return TimeSeries::continuous(grid, std::move(values));
}

ExtensionOperator build_linear_extension(const SpectralProfile& profile, int t0, int t, int horizon) {
  if (t0 < 0 || t < 1) throw InvalidArgument("need t0 >= 0 and a seed of length >= 1");
  if (profile.ambiguous_delta)
    throw NumericalAmbiguity("minimal-polynomial degree is ambiguous at tolerance " +
                             std::to_string(profile.tolerance_used));
  const int delta = profile.delta;
  int j0 = profile.j0;
  int kappa = std::min(t0, j0);
  if (profile.ambiguous_j0) {
    if (t < delta)
      throw NumericalAmbiguity("zero Jordan block is ambiguous; a certified extension needs a seed of length " +
                               std::to_string(delta));
    // Forward recursion with the full polynomial, no backward steps.
    j0 = 0;
    kappa = t0;
  }
  const int required = delta - kappa;
  if (t < required)
    throw InsufficientSeed("seed of length " + std::to_string(t) + " is too short; at least " +
                               std::to_string(required) + " values are required",
                           required);
  if (horizon < kappa) throw InvalidArgument("horizon must be >= kappa");

  RVector p(delta + 1);
  for (int k = 0; k <= delta; ++k) p(k) = profile.minpoly(k).real();
  for (int k = 0; k < j0; ++k) p(k) = 0.0;

  const int span = delta - j0;
  ExtensionOperator op;
  op.kind_ = ExtensionKind::linear;
  op.kappa_ = kappa;
  op.seed_start_ = t0;
  op.seed_length_ = t;
  op.horizon_ = horizon;
  op.forward_.resize(span);
  for (int i = 0; i < span; ++i) op.forward_(i) = -p(j0 + i);
  if (t0 > kappa) {
    op.backward_.resize(span);
    for (int i = 0; i < span; ++i) op.backward_(i) = -p(j0 + 1 + i) / p(j0);
  }

  const int top = std::max(horizon, t0 + t - 1);
  RMatrix work = RMatrix::Zero(top - kappa + 1, t);
  auto row = [&](int index) { return work.row(index - kappa); };
  for (int k = 0; k < t; ++k) row(t0 + k)(k) = 1.0;
  for (int n = t0 + t; n <= top; ++n) {
    RVector acc = RVector::Zero(t);
    for (int i = 0; i < span; ++i) acc += op.forward_(i) * row(n - delta + j0 + i).transpose();
    row(n) = acc.transpose();
  }
  for (int n = t0 - 1; n >= kappa; --n) {
    RVector acc = RVector::Zero(t);
    for (int i = 0; i < span; ++i) acc += op.backward_(i) * row(n + 1 + i).transpose();
    row(n) = acc.transpose();
  }
  op.coefficients_ = work.topRows(horizon - kappa + 1);
  op.offsets_ = RVector::Zero(op.coefficients_.rows());
  op.condition_ = condition_of(op.coefficients_);
  return op;
}

ExtensionOperator build_affine_extension(const SuperOperator& t, const HermitianOperator& h0, int t0,
                                         int seed_length, int horizon, double tol) {
  if (h0.dim() != t.dim()) throw DimensionError("observable dimension does not match channel");
  const RMatrix tq = restrict_traceless(t);
  const SpectralProfile profile = spectral_profile(tq, tol);
  ExtensionOperator op = build_linear_extension(profile, t0, seed_length, horizon);
  op.kind_ = ExtensionKind::affine;

  // gamma_i = tr(rho0 T^i(H0)) with rho0 = 1/d: the identity component / sqrt(d).
  const int d = t.dim();
  const int top = std::max(horizon, t0 + seed_length - 1);
  RVector gamma(top + 1);
  RVector h = vectorize(h0);
  for (int i = 0; i <= top; ++i) {
    gamma(i) = h(d * d - 1) / std::sqrt(static_cast<double>(d));
    h = t.transfer() * h;
  }
  const RVector seed_gamma = gamma.segment(t0, seed_length);
  op.offsets_ = gamma.segment(op.kappa_, horizon - op.kappa_ + 1) - op.coefficients_ * seed_gamma;
  return op;
}

ExtensionOperator build_continuous_extension(const LindbladGenerator& l, const std::vector<double>& sample_times,
                                             double gap_tol) {
  const int n = l.dim() * l.dim();
  if (static_cast<int>(sample_times.size()) != n)
    throw InvalidArgument("continuous extension needs exactly d^2 = " + std::to_string(n) + " sample times");
  check_finite(sample_times, "sample times");
  std::vector<double> sorted = sample_times;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (!(sorted[i] > sorted[i - 1])) throw InvalidArgument("sample times must be distinct");
  if (!nondegenerate(l.transfer(), gap_tol))
    throw Unsupported("generator spectrum is degenerate; continuous extension needs distinct eigenvalues");

  ExtensionOperator op;
  op.kind_ = ExtensionKind::continuous;
  op.sample_times_ = sample_times;
  Eigen::EigenSolver<RMatrix> es(l.transfer(), false);
  op.eigenvalues_ = es.eigenvalues();
  CMatrix y(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) y(j, k) = std::exp(op.eigenvalues_(j) * sample_times[static_cast<std::size_t>(k)]);
  Eigen::JacobiSVD<CMatrix> svd(y);
  const RVector& s = svd.singularValues();
  op.condition_ = s(n - 1) > 0.0 ? s(0) / s(n - 1) : std::numeric_limits<double>::infinity();
  if (!(op.condition_ <= kMaxConditionY))
    throw IllConditioned("sample times give a near-singular exponential Vandermonde matrix; re-space the times",
                         op.condition_);
  op.y_lu_.compute(y);
  op.seed_length_ = n;
  return op;
}

int series_subspace_rank(const SuperOperator& t, int trials, int window, Rng& rng, double rank_tol) {
  const SpectralProfile profile = spectral_profile(t);
  if (window < profile.delta + 2)
    throw InvalidArgument("window must be >= delta + 2 = " + std::to_string(profile.delta + 2));
  if (trials < 1) throw InvalidArgument("need at least one trial");
  RMatrix stack(trials, window);
  for (int k = 0; k < trials; ++k) {
    const DensityOperator rho = random_density(t.dim(), rng);
    const HermitianOperator h0 = random_hermitian(t.dim(), rng);
    const TimeSeries a = generate_discrete(rho, h0, t, 0, window);
    for (int i = 0; i < window; ++i) stack(k, i) = a.at(i);
  }
  const int rank = numerical_rank(stack, rank_tol);
  if (rank > profile.delta)
    throw Error("series subspace rank " + std::to_string(rank) + " exceeds delta " +
                std::to_string(profile.delta));
  return rank;
}

}  // namespace evotomo
