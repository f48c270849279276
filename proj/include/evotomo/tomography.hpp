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

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "evotomo/channels.hpp"
#include "evotomo/errors.hpp"

namespace evotomo {

enum class MapKind { state_alpha, observable_beta };

std::string to_string(MapKind kind);

/// Linear measurement map built from one evolving probe.
///
/// state_alpha:     alpha(rho)_i = tr(rho T^i(H0)),   row i = vec(T^i(H0)).
/// observable_beta: beta(H)_i    = tr(rho0 T^i(H)),   row i = vec(T*^i(rho0)).
///
/// alpha is inverted on unit-trace operators: only the traceless coordinates
/// (first d^2 - 1 columns) are unknown, the identity component is fixed.
struct MeasurementMap {
  MapKind kind = MapKind::state_alpha;
  int dim = 0;
  RMatrix rows;
  /// Integer indices i, or continuous times t_k.
  std::vector<double> times;
  bool continuous = false;
  RVector probe;

  int row_count() const { return static_cast<int>(rows.rows()); }
  /// rows * vec(x).
  RVector evaluate(const HermitianOperator& x) const;
  /// Columns that are unknown for this kind.
  RMatrix restricted_rows() const;
  /// d^2 - 1 for alpha, d^2 for beta.
  int ambient_dimension() const;
  /// alpha(1/d) for alpha maps, zero for beta maps.
  RVector reference_response() const;
};

enum class Verdict { injective, rank_deficient };

std::string to_string(Verdict verdict);

struct InjectivityCertificate {
  MapKind kind = MapKind::state_alpha;
  double sigma_min = 0.0;
  double sigma_max = 0.0;
  int rank = 0;
  int ambient = 0;
  Verdict verdict = Verdict::rank_deficient;
  /// 1 / sigma_min when injective, +inf otherwise.
  double lipschitz_inverse = 0.0;
  /// Full singular spectrum of the restricted map, descending.
  RVector singular_values;
  double tolerance = 0.0;

  bool injective() const noexcept { return verdict == Verdict::injective; }
};

/// A reconstruction was asked of a map with no unique inverse.
class RankDeficientMap : public Error {
 public:
  RankDeficientMap(const std::string& what, InjectivityCertificate certificate)
      : Error(what), certificate_(std::move(certificate)) {}
  const InjectivityCertificate& certificate() const noexcept { return certificate_; }

 private:
  InjectivityCertificate certificate_;
};

/// Probe gives a map that is blind by construction (H0 ~ 1, or tr rho0 = 0).
class DegenerateProbe : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Rows i = t0..t1. Rejects H0 with ||Q(H0)|| <= 1e-10.
MeasurementMap build_alpha(const SuperOperator& t, const HermitianOperator& h0, int t0, int t1);
/// Rows i = t0..t1 of the dual orbit. Rejects |tr rho0| <= 1e-10.
MeasurementMap build_beta(const SuperOperator& t, const HermitianOperator& rho0, int t0, int t1);
/// Rows from e^{t_k L}; times must be finite and pairwise distinct.
MeasurementMap continuous_maps(const LindbladGenerator& l, const HermitianOperator& probe,
                               const std::vector<double>& times, MapKind kind);

constexpr double kDefaultRankTol = 1e-9;

/// Singular values below tol * sigma_max count as zero.
InjectivityCertificate certify(const MeasurementMap& map, double tol = kDefaultRankTol);

struct StateReconstruction {
  HermitianOperator estimate = HermitianOperator::zero(2);
  double min_eigenvalue = 0.0;
  /// Smallest eigenvalue >= -1e-10. Positivity is reported, never imposed.
  bool positive = false;
  /// ||alpha(estimate) - data||_2.
  double residual = 0.0;
};

/// rho = 1/d + least-squares traceless correction. Throws RankDeficientMap.
StateReconstruction reconstruct_state(const MeasurementMap& map, const RVector& data,
                                      double tol = kDefaultRankTol);
/// Least squares on all d^2 coordinates. Throws RankDeficientMap.
HermitianOperator reconstruct_observable(const MeasurementMap& map, const RVector& data,
                                         double tol = kDefaultRankTol);

using StateSampler = std::function<DensityOperator(Rng&)>;

struct TakensResult {
  double min_ratio = 0.0;
  int collisions = 0;
  int pairs = 0;
};

constexpr double kCollisionRatio = 1e-8;

/// ||alpha_m(rho1) - alpha_m(rho2)|| / ||rho1 - rho2||_2 over sampled pairs,
/// with alpha_m using i = 1..m. An empirical probe only.
TakensResult takens_probe(const SuperOperator& t, const HermitianOperator& h0, int m,
                          const StateSampler& sampler, int pairs, Rng& rng);

/// ||map(rho1) - map(rho2)|| / ||rho1 - rho2||_2.
double discrimination_ratio(const MeasurementMap& map, const HermitianOperator& rho1,
                            const HermitianOperator& rho2);

/// Two states 1/d and 1/d + eps X with X along the weakest right-singular
/// direction of the restricted alpha map.
std::pair<DensityOperator, DensityOperator> kernel_state_pair(const MeasurementMap& alpha);

/// Probe state (2 + sqrt 2)|0> + (1 + i)|1>, normalized.
DensityOperator landscape_probe_state();

struct LandscapeCell {
  double p = 0.0;
  double theta = 0.0;
  double sigma_min = 0.0;
};

/// sigma_min of beta (i = 0..3) for the qubit channel at every (p, theta),
/// p-major order. Grids must lie in [0, 1] x [0, pi].
std::vector<LandscapeCell> qubit_landscape(const std::vector<double>& grid_p,
                                           const std::vector<double>& grid_theta);

/// Evenly spaced points lo..hi inclusive.
std::vector<double> linspace(double lo, double hi, int count);

struct ReferenceConstants {
  /// ||alpha^{-1}||^2 for observables with tr(H_i H_j) = d delta_ij.
  double pauli_alpha_invnorm_sq = 0.0;
  /// d = 2 only.
  std::optional<double> sic_beta_invnorm_sq;
  RVector sic_gram_eigenvalues;
};

ReferenceConstants reference_constants(int d);

/// The four tetrahedral qubit SIC states. Unsupported for d != 2.
std::vector<DensityOperator> tetrahedral_sic(int d = 2);

struct SearchResult {
  double best_sigma_min = 0.0;
  int samples = 0;
};

/// Random search over qubit channels e^L and pure probe states for the
/// largest sigma_min of beta (i = 0..3).
SearchResult qubit_sigma_min_search(int samples, Rng& rng);

}  // namespace evotomo
