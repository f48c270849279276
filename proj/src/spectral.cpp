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

#include "evotomo/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "evotomo/errors.hpp"

namespace evotomo {

namespace {

constexpr double kAmbiguityBand = 10.0;
// Eigenvalues closer than this (relative to max(1, ||T||)) are one cluster in
// the cross-check; normal matrices split repeated eigenvalues by ~1e-15.
constexpr double kClusterTol = 1e-6;

template <typename Matrix>
RVector singular_values(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues();
}

double spectral_norm(const RMatrix& t) {
  const RVector s = singular_values(t);
  return s.size() ? s(0) : 0.0;
}

int rank_of(const CMatrix& m, double threshold) {
  const RVector s = singular_values(m);
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > threshold) ++r;
  return r;
}

// Largest Jordan block at `lambda`, capped by the cluster multiplicity, from
// the point where rank((T - lambda)^k) stops decreasing.
int jordan_index(const RMatrix& t, Complex lambda, int multiplicity, double tol) {
  const Eigen::Index n = t.rows();
  const CMatrix shifted = t.cast<Complex>() - lambda * CMatrix::Identity(n, n);
  const double base = std::max(1.0, singular_values(shifted)(0));
  CMatrix power = CMatrix::Identity(n, n);
  int prev_rank = static_cast<int>(n);
  for (int k = 1; k <= multiplicity; ++k) {
    power = shifted * power;
    const int r = rank_of(power, tol * std::pow(base, k));
    if (r == prev_rank) return std::max(1, k - 1);
    prev_rank = r;
  }
  return multiplicity;
}

struct Cluster {
  Complex center;
  int multiplicity;
};

std::vector<Cluster> cluster_eigenvalues(const CVector& eig, double radius) {
  std::vector<Cluster> clusters;
  std::vector<bool> used(static_cast<std::size_t>(eig.size()), false);
  for (Eigen::Index i = 0; i < eig.size(); ++i) {
    if (used[static_cast<std::size_t>(i)]) continue;
    Complex sum = eig(i);
    int count = 1;
    used[static_cast<std::size_t>(i)] = true;
    for (Eigen::Index j = i + 1; j < eig.size(); ++j) {
      if (!used[static_cast<std::size_t>(j)] && std::abs(eig(j) - eig(i)) < radius) {
        used[static_cast<std::size_t>(j)] = true;
        sum += eig(j);
        ++count;
      }
    }
    clusters.push_back({sum / static_cast<double>(count), count});
  }
  return clusters;
}

}  // namespace

int numerical_rank(const RMatrix& m, double rel_tol) {
  if (m.size() == 0) return 0;
  const RVector s = singular_values(m);
  if (s(0) == 0.0) return 0;
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > rel_tol * s(0)) ++r;
  return r;
}

double min_eigenvalue_gap(const RMatrix& t) {
  Eigen::EigenSolver<RMatrix> es(t, false);
  const CVector eig = es.eigenvalues();
  double gap = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < eig.size(); ++i)
    for (Eigen::Index j = i + 1; j < eig.size(); ++j) gap = std::min(gap, std::abs(eig(i) - eig(j)));
  return gap;
}

bool nondegenerate(const RMatrix& t, double gap_tol) {
  if (!(gap_tol > 0.0)) throw InvalidArgument("gap tolerance must be positive");
  return min_eigenvalue_gap(t) > gap_tol;
}

bool nondegenerate(const SuperOperator& t, double gap_tol) { return nondegenerate(t.transfer(), gap_tol); }

SpectralProfile spectral_profile(const RMatrix& t, double tol) {
  if (t.rows() != t.cols() || t.rows() < 1) throw DimensionError("spectral profile needs a square matrix");
  if (!(tol > 0.0 && tol <= 1e-4)) throw InvalidArgument("tolerance must lie in (0, 1e-4]");
  const Eigen::Index n = t.rows();

  SpectralProfile profile;
  profile.tolerance_used = tol;
  Eigen::EigenSolver<RMatrix> es(t, false);
  profile.eigenvalues = es.eigenvalues();
  const double norm = spectral_norm(t);

  // Krylov stack of column-normalized vec(T^k).
  RMatrix stack(n * n, n + 1);
  RVector col_norms(n + 1);
  RMatrix power = RMatrix::Identity(n, n);
  int delta = -1;
  bool exact_zero_power = false;
  for (Eigen::Index k = 0; k <= n; ++k) {
    if (k > 0) power = t * power;
    const double cn = power.norm();
    col_norms(k) = cn;
    if (!(cn > 0.0)) {
      profile.krylov_ratios.push_back(0.0);
      delta = static_cast<int>(k);
      exact_zero_power = true;
      break;
    }
    stack.col(k) = power.reshaped() / cn;
    const RVector s = singular_values(RMatrix(stack.leftCols(k + 1)));
    const double ratio = s(s.size() - 1) / s(0);
    profile.krylov_ratios.push_back(ratio);
    if (ratio < tol) {
      delta = static_cast<int>(k);
      break;
    }
  }
  if (delta < 0) {
    // Cayley-Hamilton guarantees dependence at k = n; rounding can hide it.
    delta = static_cast<int>(n);
    profile.ambiguous_delta = true;
  }
  profile.delta = delta;

  const double r_at = profile.krylov_ratios.back();
  if (!exact_zero_power && r_at > tol / kAmbiguityBand) profile.ambiguous_delta = true;
  if (delta >= 1) {
    const double r_before = profile.krylov_ratios[static_cast<std::size_t>(delta - 1)];
    if (r_before < tol * kAmbiguityBand) profile.ambiguous_delta = true;
  }

  profile.minpoly = CVector::Zero(delta + 1);
  profile.minpoly(delta) = 1.0;
  if (!exact_zero_power && delta > 0) {
    const RMatrix lead = stack.leftCols(delta);
    const RVector rhs = -stack.col(delta) * col_norms(delta);
    const RVector c = lead.colPivHouseholderQr().solve(rhs);
    for (int k = 0; k < delta; ++k) profile.minpoly(k) = c(k) / col_norms(k);
  }

  // Zero cluster and its Jordan index.
  int zero_count = 0;
  int band_count = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double a = std::abs(profile.eigenvalues(i));
    if (a <= tol * norm) {
      ++zero_count;
    } else if (a < kAmbiguityBand * tol * norm) {
      ++band_count;
    }
  }
  if (band_count > 0) profile.ambiguous_j0 = true;
  if (zero_count > 0) {
    profile.j0 = std::min(jordan_index(t, Complex(0.0, 0.0), zero_count, tol), delta);
    for (int k = 0; k < profile.j0; ++k) profile.minpoly(k) = 0.0;
  }

  // Cross-check: degree of prod_c (x - lambda_c)^{j_c} over eigenvalue clusters.
  const double radius = kClusterTol * std::max(1.0, norm);
  const auto clusters = cluster_eigenvalues(profile.eigenvalues, radius);
  int clustered = 0;
  for (const Cluster& c : clusters) {
    if (std::abs(c.center) < tol * norm)
      clustered += profile.j0;
    else
      clustered += c.multiplicity == 1 ? 1 : jordan_index(t, c.center, c.multiplicity, tol);
  }
  profile.clustered_degree = clustered;
  if (clustered != delta) profile.ambiguous_delta = true;
  profile.distinct = static_cast<Eigen::Index>(clusters.size()) == n && delta == n;
  return profile;
}

SpectralProfile spectral_profile(const SuperOperator& t, double tol) {
  return spectral_profile(t.transfer(), tol);
}

double minpoly_residual(const SpectralProfile& profile, const RMatrix& t) {
  const Eigen::Index n = t.rows();
  const CMatrix tc = t.cast<Complex>();
  CMatrix acc = profile.minpoly(profile.delta) * CMatrix::Identity(n, n);
  for (int k = profile.delta - 1; k >= 0; --k)
    acc = (acc * tc).eval() + profile.minpoly(k) * CMatrix::Identity(n, n);
  return acc.norm();
}

DegreeBound degree_bound_check(const CMatrix& u, const DensityOperator& sigma, double lambda, double tol) {
  const SuperOperator t = depolarizing_mixture(u, sigma, lambda);
  const int d = t.dim();
  DegreeBound result;
  result.delta = spectral_profile(t, tol).delta;
  result.bound = d * d - d + 2 - (lambda == 0.0 ? 1 : 0);
  result.tight = result.delta == result.bound;
  if (result.delta > result.bound)
    throw Error("minimal polynomial degree " + std::to_string(result.delta) + " exceeds bound " +
                std::to_string(result.bound));
  return result;
}

}  // namespace evotomo
