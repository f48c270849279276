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

#include "evotomo/tomography.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace evotomo {

namespace {

constexpr double kProbeTol = 1e-10;
constexpr double kGridSlack = 1e-12;

void check_window(int t0, int t1) {
  if (t0 < 0 || t1 < t0) throw InvalidArgument("need 0 <= t0 <= t1");
}

void check_alpha_probe(const HermitianOperator& h0) {
  if (traceless_project(h0).norm() <= kProbeTol)
    throw DegenerateProbe("probe observable is proportional to the identity; alpha is constant on states");
}

void check_beta_probe(const HermitianOperator& rho0) {
  if (std::abs(rho0.trace()) <= kProbeTol)
    throw DegenerateProbe("probe state is traceless; beta cannot see the identity component");
}

RMatrix orbit_rows(const RMatrix& step, RVector v, int t0, int t1) {
  for (int i = 0; i < t0; ++i) v = step * v;
  RMatrix rows(t1 - t0 + 1, v.size());
  for (int i = t0; i <= t1; ++i) {
    rows.row(i - t0) = v.transpose();
    v = step * v;
  }
  return rows;
}

std::vector<double> index_range(int t0, int t1) {
  std::vector<double> out;
  for (int i = t0; i <= t1; ++i) out.push_back(static_cast<double>(i));
  return out;
}

RMatrix restricted(const MeasurementMap& map) { return map.restricted_rows(); }

InjectivityCertificate require_injective(const MeasurementMap& map, double tol) {
  InjectivityCertificate cert = certify(map, tol);
  if (!cert.injective())
    throw RankDeficientMap("measurement map is rank deficient (rank " + std::to_string(cert.rank) + " < " +
                               std::to_string(cert.ambient) + "); no unique reconstruction",
                           cert);
  return cert;
}

}  // namespace

std::string to_string(MapKind kind) {
  return kind == MapKind::state_alpha ? "alpha" : "beta";
}

std::string to_string(Verdict verdict) {
  return verdict == Verdict::injective ? "injective" : "rank_deficient";
}

RVector MeasurementMap::evaluate(const HermitianOperator& x) const {
  if (x.dim() != dim) throw DimensionError("operator dimension does not match map");
  return rows * vectorize(x);
}

RMatrix MeasurementMap::restricted_rows() const {
  return kind == MapKind::state_alpha ? RMatrix(rows.leftCols(dim * dim - 1)) : rows;
}

int MeasurementMap::ambient_dimension() const {
  return kind == MapKind::state_alpha ? dim * dim - 1 : dim * dim;
}

RVector MeasurementMap::reference_response() const {
  if (kind == MapKind::observable_beta) return RVector::Zero(rows.rows());
  return rows.col(dim * dim - 1) / std::sqrt(static_cast<double>(dim));
}

MeasurementMap build_alpha(const SuperOperator& t, const HermitianOperator& h0, int t0, int t1) {
  if (h0.dim() != t.dim()) throw DimensionError("probe dimension does not match channel");
  check_window(t0, t1);
  check_alpha_probe(h0);
  MeasurementMap map;
  map.kind = MapKind::state_alpha;
  map.dim = t.dim();
  map.probe = vectorize(h0);
  map.rows = orbit_rows(t.transfer(), map.probe, t0, t1);
  map.times = index_range(t0, t1);
  return map;
}

MeasurementMap build_beta(const SuperOperator& t, const HermitianOperator& rho0, int t0, int t1) {
  if (rho0.dim() != t.dim()) throw DimensionError("probe dimension does not match channel");
  check_window(t0, t1);
  check_beta_probe(rho0);
  MeasurementMap map;
  map.kind = MapKind::observable_beta;
  map.dim = t.dim();
  map.probe = vectorize(rho0);
  map.rows = orbit_rows(t.transfer().transpose(), map.probe, t0, t1);
  map.times = index_range(t0, t1);
  return map;
}

MeasurementMap continuous_maps(const LindbladGenerator& l, const HermitianOperator& probe,
                               const std::vector<double>& times, MapKind kind) {
  if (probe.dim() != l.dim()) throw DimensionError("probe dimension does not match generator");
  if (times.empty()) throw InvalidArgument("need at least one time");
  std::vector<double> sorted = times;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    if (!std::isfinite(sorted[k])) throw InvalidArgument("times must be finite");
    if (k > 0 && !(sorted[k] > sorted[k - 1])) throw InvalidArgument("times must be pairwise distinct");
  }
  if (kind == MapKind::state_alpha)
    check_alpha_probe(probe);
  else
    check_beta_probe(probe);
  MeasurementMap map;
  map.kind = kind;
  map.dim = l.dim();
  map.probe = vectorize(probe);
  map.times = times;
  map.continuous = true;
  map.rows.resize(static_cast<Eigen::Index>(times.size()), map.probe.size());
  for (std::size_t k = 0; k < times.size(); ++k) {
    const RMatrix e = exponentiate(l, times[k]).transfer();
    const RVector row = kind == MapKind::state_alpha ? RVector(e * map.probe) : RVector(e.transpose() * map.probe);
    map.rows.row(static_cast<Eigen::Index>(k)) = row.transpose();
  }
  return map;
}

InjectivityCertificate certify(const MeasurementMap& map, double tol) {
  if (!(tol > 0.0)) throw InvalidArgument("rank tolerance must be positive");
  const RMatrix r = restricted(map);
  Eigen::JacobiSVD<RMatrix> svd(r);
  InjectivityCertificate cert;
  cert.kind = map.kind;
  cert.tolerance = tol;
  cert.ambient = map.ambient_dimension();
  cert.singular_values = svd.singularValues();
  const RVector& s = cert.singular_values;
  cert.sigma_max = s.size() ? s(0) : 0.0;
  // Fewer rows than unknowns: the smallest singular value of the map is zero.
  cert.sigma_min = (r.rows() < r.cols() || s.size() == 0) ? 0.0 : s(s.size() - 1);
  cert.rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > tol * cert.sigma_max) ++cert.rank;
  cert.verdict = cert.rank == cert.ambient ? Verdict::injective : Verdict::rank_deficient;
  cert.lipschitz_inverse =
      cert.injective() ? 1.0 / cert.sigma_min : std::numeric_limits<double>::infinity();
  return cert;
}

StateReconstruction reconstruct_state(const MeasurementMap& map, const RVector& data, double tol) {
  if (map.kind != MapKind::state_alpha) throw InvalidArgument("reconstruct_state needs an alpha map");
  if (data.size() != map.rows.rows()) throw DimensionError("data length does not match map rows");
  require_injective(map, tol);
  const int n = map.dim * map.dim;
  const RMatrix r = map.restricted_rows();
  const RVector x = r.colPivHouseholderQr().solve(data - map.reference_response());
  RVector v(n);
  v.head(n - 1) = x;
  v(n - 1) = 1.0 / std::sqrt(static_cast<double>(map.dim));
  StateReconstruction out;
  out.estimate = devectorize(v);
  out.min_eigenvalue = out.estimate.eigenvalues()(0);
  out.positive = out.min_eigenvalue >= -1e-10;
  out.residual = (map.rows * v - data).norm();
  return out;
}

HermitianOperator reconstruct_observable(const MeasurementMap& map, const RVector& data, double tol) {
  if (map.kind != MapKind::observable_beta) throw InvalidArgument("reconstruct_observable needs a beta map");
  if (data.size() != map.rows.rows()) throw DimensionError("data length does not match map rows");
  require_injective(map, tol);
  return devectorize(RVector(map.rows.colPivHouseholderQr().solve(data)));
}

double discrimination_ratio(const MeasurementMap& map, const HermitianOperator& rho1,
                            const HermitianOperator& rho2) {
  const HermitianOperator diff = rho1 - rho2;
  const double denom = diff.norm();
  if (!(denom > 0.0)) throw InvalidArgument("states coincide");
  return map.evaluate(diff).norm() / denom;
}

TakensResult takens_probe(const SuperOperator& t, const HermitianOperator& h0, int m,
                          const StateSampler& sampler, int pairs, Rng& rng) {
  if (m < 1) throw InvalidArgument("need m >= 1 evolution steps");
  if (pairs < 1) throw InvalidArgument("need at least one pair");
  const MeasurementMap map = build_alpha(t, h0, 1, m);
  TakensResult result;
  result.pairs = pairs;
  result.min_ratio = std::numeric_limits<double>::infinity();
  for (int k = 0; k < pairs; ++k) {
    const DensityOperator a = sampler(rng);
    const DensityOperator b = sampler(rng);
    const double ratio = discrimination_ratio(map, a, b);
    result.min_ratio = std::min(result.min_ratio, ratio);
    if (ratio < kCollisionRatio) ++result.collisions;
  }
  return result;
}

std::pair<DensityOperator, DensityOperator> kernel_state_pair(const MeasurementMap& alpha) {
  if (alpha.kind != MapKind::state_alpha) throw InvalidArgument("kernel_state_pair needs an alpha map");
  const int d = alpha.dim;
  const int n = d * d;
  const RMatrix r = alpha.restricted_rows();
  Eigen::JacobiSVD<RMatrix> svd(r, Eigen::ComputeFullV);
  RVector v = RVector::Zero(n);
  v.head(n - 1) = svd.matrixV().col(n - 2);
  const HermitianOperator x = devectorize(v);
  const RVector ev = x.eigenvalues();
  const double op_norm = std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
  const double eps = 1.0 / (2.0 * d * op_norm);
  const DensityOperator base = DensityOperator::maximally_mixed(d);
  return {base, DensityOperator(base + x * eps)};
}

DensityOperator landscape_probe_state() {
  CVector psi(2);
  psi << Complex(2.0 + std::numbers::sqrt2, 0.0), Complex(1.0, 1.0);
  return DensityOperator::pure(psi);
}

std::vector<double> linspace(double lo, double hi, int count) {
  if (count < 1) throw InvalidArgument("grid needs at least one point");
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k)
    out[static_cast<std::size_t>(k)] = count == 1 ? lo : lo + (hi - lo) * k / (count - 1);
  return out;
}

std::vector<LandscapeCell> qubit_landscape(const std::vector<double>& grid_p,
                                           const std::vector<double>& grid_theta) {
  for (double p : grid_p)
    if (!(p >= -kGridSlack && p <= 1.0 + kGridSlack)) throw InvalidArgument("p grid must lie in [0, 1]");
  for (double th : grid_theta)
    if (!(th >= -kGridSlack && th <= std::numbers::pi + kGridSlack))
      throw InvalidArgument("theta grid must lie in [0, pi]");
  const DensityOperator psi = landscape_probe_state();
  std::vector<LandscapeCell> cells;
  cells.reserve(grid_p.size() * grid_theta.size());
  for (double p : grid_p) {
    for (double th : grid_theta) {
      const MeasurementMap beta = build_beta(qubit_dephasing_depolarizing(p, th), psi, 0, 3);
      cells.push_back({p, th, certify(beta).sigma_min});
    }
  }
  return cells;
}

std::vector<DensityOperator> tetrahedral_sic(int d) {
  if (d != 2) throw Unsupported("only the qubit tetrahedral SIC is available");
  const int signs[4][3] = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
  std::vector<DensityOperator> states;
  for (const auto& s : signs) {
    CMatrix m = CMatrix::Identity(2, 2);
    for (int a = 0; a < 3; ++a) m += pauli(a + 1) * (s[a] / std::sqrt(3.0));
    states.emplace_back(CMatrix(m * 0.5));
  }
  return states;
}

ReferenceConstants reference_constants(int d) {
  const OperatorBasis basis = standard_basis(d);
  const int n = d * d;
  // Traceless basis elements scaled to tr(H_i H_j) = d delta_ij.
  MeasurementMap alpha;
  alpha.kind = MapKind::state_alpha;
  alpha.dim = d;
  alpha.rows.resize(n - 1, n);
  for (int i = 0; i < n - 1; ++i)
    alpha.rows.row(i) = vectorize(basis.element(i) * std::sqrt(static_cast<double>(d))).transpose();
  const InjectivityCertificate ca = certify(alpha);
  ReferenceConstants out;
  out.pauli_alpha_invnorm_sq = 1.0 / (ca.sigma_min * ca.sigma_min);
  if (d == 2) {
    const auto sic = tetrahedral_sic(2);
    MeasurementMap beta;
    beta.kind = MapKind::observable_beta;
    beta.dim = 2;
    beta.rows.resize(4, 4);
    for (int i = 0; i < 4; ++i) beta.rows.row(i) = vectorize(sic[static_cast<std::size_t>(i)]).transpose();
    const InjectivityCertificate cb = certify(beta);
    out.sic_beta_invnorm_sq = 1.0 / (cb.sigma_min * cb.sigma_min);
    Eigen::SelfAdjointEigenSolver<RMatrix> es(beta.rows * beta.rows.transpose());
    out.sic_gram_eigenvalues = es.eigenvalues();
  }
  return out;
}

SearchResult qubit_sigma_min_search(int samples, Rng& rng) {
  if (samples < 1) throw InvalidArgument("need at least one sample");
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  SearchResult result;
  result.samples = samples;
  for (int k = 0; k < samples; ++k) {
    LindbladScales scales;
    scales.dissipation = 2.0 * unit(rng);
    scales.hamiltonian = 2.0 * unit(rng);
    const LindbladGenerator l = random_lindblad(2, rng, scales);
    const SuperOperator t = exponentiate(l, 0.2 + 2.0 * unit(rng));
    const DensityOperator psi = random_pure_state(2, rng);
    result.best_sigma_min = std::max(result.best_sigma_min, certify(build_beta(t, psi, 0, 3)).sigma_min);
  }
  return result;
}

}  // namespace evotomo
