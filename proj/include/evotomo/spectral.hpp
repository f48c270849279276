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

#include <vector>

#include "evotomo/channels.hpp"

namespace evotomo {

/// Spectral data that controls series extension.
///
/// `delta` is the degree of the minimal polynomial, found as the first k at
/// which {T^0, ..., T^k} becomes numerically dependent (smallest singular
/// value of the column-normalized Krylov stack below tol times the largest).
/// `minpoly` holds the monic coefficients p_0..p_delta, lowest degree first.
/// `j0` is the size of the largest Jordan block at eigenvalue zero.
struct SpectralProfile {
  CVector eigenvalues;
  int delta = 0;
  int j0 = 0;
  CVector minpoly;
  bool distinct = false;
  double tolerance_used = 0.0;
  /// The dependence ratio at delta, or the one just before it, lies within a
  /// factor 10 of the tolerance.
  bool ambiguous_delta = false;
  /// An eigenvalue lies in the band [tol, 10 tol] * ||T||, so the zero
  /// cluster (and j0) is not certified.
  bool ambiguous_j0 = false;
  /// sigma_min / sigma_max of the stack {T^0..T^k}, for k = 0..delta.
  std::vector<double> krylov_ratios;
  /// Degree of prod_c (x - lambda_c)^{j_c} from eigenvalue clustering.
  int clustered_degree = 0;

  bool ambiguous() const noexcept { return ambiguous_delta || ambiguous_j0; }
};

constexpr double kDefaultSpectralTol = 1e-8;

/// tol must lie in (0, 1e-4].
SpectralProfile spectral_profile(const RMatrix& t, double tol = kDefaultSpectralTol);
SpectralProfile spectral_profile(const SuperOperator& t, double tol = kDefaultSpectralTol);

/// ||p(T)||_F for the profile's minimal polynomial.
double minpoly_residual(const SpectralProfile& profile, const RMatrix& t);

struct DegreeBound {
  int delta = 0;
  int bound = 0;
  bool tight = false;
};

/// Minimal-polynomial degree of (1 - lambda) U^dagger . U + lambda 1 tr(. sigma)
/// against d^2 - d + 2 - [lambda == 0]. Throws Error if the bound is violated.
DegreeBound degree_bound_check(const CMatrix& u, const DensityOperator& sigma, double lambda,
                               double tol = kDefaultSpectralTol);

/// All pairwise eigenvalue gaps exceed gap_tol.
bool nondegenerate(const RMatrix& t, double gap_tol);
bool nondegenerate(const SuperOperator& t, double gap_tol);

/// Smallest pairwise distance between eigenvalues.
double min_eigenvalue_gap(const RMatrix& t);

/// Count of singular values above rel_tol * sigma_max.
int numerical_rank(const RMatrix& m, double rel_tol);

}  // namespace evotomo
