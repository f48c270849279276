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

#include "evotomo/channels.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

#include "evotomo/errors.hpp"

namespace evotomo {

namespace {

constexpr double kUnitalTol = 1e-10;
constexpr double kUnitaryTol = 1e-10;

template <typename Map>
RMatrix transfer_of(int dim, Map&& map) {
  const OperatorBasis basis = standard_basis(dim);
  const int n = basis.size();
  RMatrix t(n, n);
  for (int l = 0; l < n; ++l) t.col(l) = basis.coefficients(map(basis.element(l).matrix())).real();
  return t;
}

bool last_column_is_unit(const RMatrix& t) {
  const Eigen::Index n = t.rows();
  RVector expected = RVector::Zero(n);
  expected(n - 1) = 1.0;
  return (t.col(n - 1) - expected).cwiseAbs().maxCoeff() <= kUnitalTol;
}

void require_unitary(const CMatrix& u) {
  if (u.rows() != u.cols() || u.rows() < 2) throw DimensionError("unitary must be square with d >= 2");
  const double err =
      (u.adjoint() * u - CMatrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
  if (err > kUnitaryTol)
    throw InvalidArgument("matrix is not unitary (max |U^dagger U - 1| = " + std::to_string(err) + ")");
}

}  // namespace

SuperOperator::SuperOperator(int dim, RMatrix transfer, std::optional<bool> completely_positive)
    : dim_(dim), transfer_(std::move(transfer)), cp_(completely_positive) {
  if (dim < 2) throw DimensionError("superoperator dimension must be >= 2");
  if (transfer_.rows() != dim * dim || transfer_.cols() != dim * dim)
    throw DimensionError("transfer matrix must be d^2 x d^2");
  if (!transfer_.allFinite()) throw InvalidArgument("transfer matrix has non-finite entries");
  unital_ = last_column_is_unit(transfer_);
}

SuperOperator SuperOperator::identity(int dim) {
  return SuperOperator(dim, RMatrix::Identity(dim * dim, dim * dim), true);
}

SuperOperator SuperOperator::dual() const {
  return SuperOperator(dim_, transfer_.transpose(), cp_);
}

SuperOperator SuperOperator::compose(const SuperOperator& other) const {
  if (other.dim_ != dim_) throw DimensionError("dimension mismatch in composition");
  std::optional<bool> cp;
  if (cp_ == true && other.cp_ == true) cp = true;
  return SuperOperator(dim_, transfer_ * other.transfer_, cp);
}

SuperOperator SuperOperator::power(int k) const {
  if (k < 0) throw InvalidArgument("negative channel power");
  RMatrix result = RMatrix::Identity(transfer_.rows(), transfer_.cols());
  for (int i = 0; i < k; ++i) result = transfer_ * result;
  return SuperOperator(dim_, std::move(result), k == 0 ? std::optional<bool>(true) : cp_);
}

CMatrix SuperOperator::natural_matrix() const {
  const OperatorBasis basis = standard_basis(dim_);
  return basis.synthesis() * transfer_.cast<Complex>() * basis.analysis();
}

double ChoiMatrix::min_eigenvalue() const {
  const CMatrix h = (entries + entries.adjoint()) * 0.5;
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

namespace {

ChoiMatrix choi_from_natural(int d, const CMatrix& s) {
  ChoiMatrix c;
  c.dim = d;
  c.entries.resize(d * d, d * d);
  for (int a = 0; a < d; ++a)
    for (int i = 0; i < d; ++i)
      for (int b = 0; b < d; ++b)
        for (int j = 0; j < d; ++j) c.entries(a * d + i, b * d + j) = s(a + b * d, i + j * d);
  return c;
}

}  // namespace

ChoiMatrix choi_matrix(const SuperOperator& t) { return choi_from_natural(t.dim(), t.natural_matrix()); }

LindbladGenerator::LindbladGenerator(int dim, CMatrix p, RVector v_imag)
    : dim_(dim), p_(std::move(p)), v_imag_(std::move(v_imag)) {
  if (dim < 2) throw DimensionError("generator dimension must be >= 2");
  const int n = dim * dim - 1;
  if (p_.rows() != n || p_.cols() != n) throw DimensionError("P must be (d^2-1) x (d^2-1)");
  if (v_imag_.size() != n) throw DimensionError("v_imag must have length d^2-1");
  const double scale = p_.cwiseAbs().maxCoeff();
  if ((p_ - p_.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw InvalidArgument("P is not Hermitian");
  Eigen::SelfAdjointEigenSolver<CMatrix> es((p_ + p_.adjoint()) * 0.5, Eigen::EigenvaluesOnly);
  const double norm = es.eigenvalues().cwiseAbs().maxCoeff();
  if (es.eigenvalues()(0) < -1e-10 * norm)
    throw InvalidArgument("P is not positive semidefinite (smallest eigenvalue " +
                          std::to_string(es.eigenvalues()(0)) + ")");

  const OperatorBasis basis = standard_basis(dim);
  const CMatrix id = CMatrix::Identity(dim, dim);
  CMatrix phi_id = CMatrix::Zero(dim, dim);
  CMatrix g = CMatrix::Zero(dim, dim);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) phi_id += p_(i, j) * basis.element(i).matrix() * basis.element(j).matrix();
    g -= v_imag_(i) / std::sqrt(static_cast<double>(dim)) * basis.element(i).matrix();
  }
  k_ = phi_id * 0.5 + Complex(0.0, 1.0) * g;
  transfer_ = transfer_of(dim, [this](const CMatrix& x) { return apply(x); });
}

CVector LindbladGenerator::v() const {
  const OperatorBasis basis = standard_basis(dim_);
  const int n = dim_ * dim_ - 1;
  const CVector coeffs = basis.coefficients(k_);
  return -std::sqrt(static_cast<double>(dim_)) * coeffs.head(n);
}

CMatrix LindbladGenerator::apply(const CMatrix& x) const {
  const OperatorBasis basis = standard_basis(dim_);
  const int n = dim_ * dim_ - 1;
  CMatrix out = -k_ * x - x * k_.adjoint();
  for (int i = 0; i < n; ++i) {
    CMatrix right = CMatrix::Zero(dim_, dim_);
    for (int j = 0; j < n; ++j) right += p_(i, j) * basis.element(j).matrix();
    out += basis.element(i).matrix() * x * right;
  }
  return out;
}

ChoiMatrix LindbladGenerator::choi() const {
  const OperatorBasis basis = standard_basis(dim_);
  const CMatrix s = basis.synthesis() * transfer_.cast<Complex>() * basis.analysis();
  return choi_from_natural(dim_, s);
}

CMatrix LindbladGenerator::choi_in_operator_basis() const {
  const OperatorBasis basis = standard_basis(dim_);
  const int n = dim_ * dim_;
  CMatrix b(n, n);
  for (int k = 0; k < n; ++k) b.col(k) = basis.element(k).matrix().transpose().reshaped();
  return b.adjoint() * choi().entries * b;
}

SuperOperator unitary_channel(const CMatrix& u) {
  require_unitary(u);
  const int d = static_cast<int>(u.rows());
  return SuperOperator(d, transfer_of(d, [&u](const CMatrix& x) { return CMatrix(u.adjoint() * x * u); }),
                       true);
}

SuperOperator depolarizing_mixture(const CMatrix& u, const DensityOperator& sigma, double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0))
    throw InvalidArgument("lambda must lie in [0, 1], got " + std::to_string(lambda));
  require_unitary(u);
  const int d = static_cast<int>(u.rows());
  if (sigma.dim() != d) throw DimensionError("sigma dimension does not match unitary");
  RMatrix t = (1.0 - lambda) * unitary_channel(u).transfer();
  t.row(d * d - 1) += lambda * std::sqrt(static_cast<double>(d)) * vectorize(sigma).transpose();
  return SuperOperator(d, std::move(t), true);
}

SuperOperator qubit_dephasing_depolarizing(double p, double theta) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("p must lie in [0, 1]");
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) throw InvalidArgument("theta must lie in [0, pi]");
  CMatrix u = CMatrix::Zero(2, 2);
  u(0, 0) = std::polar(1.0, theta / 2.0);
  u(1, 1) = std::polar(1.0, -theta / 2.0);
  return depolarizing_mixture(u, DensityOperator::maximally_mixed(2), p);
}

CMatrix cyclic_qubit_unitary() {
  CMatrix u(2, 2);
  u << Complex(1, 1), Complex(1, 1), Complex(-1, 1), Complex(1, -1);
  return u * 0.5;
}

LindbladGenerator random_lindblad(int dim, Rng& rng, double scale) {
  return random_lindblad(dim, rng, LindbladScales{scale, scale});
}

LindbladGenerator random_lindblad(int dim, Rng& rng, const LindbladScales& scales) {
  if (dim < 2) throw DimensionError("generator dimension must be >= 2");
  if (!(scales.dissipation > 0.0) || !(scales.hamiltonian >= 0.0))
    throw InvalidArgument("generator scales must be positive");
  const int n = dim * dim - 1;
  const CMatrix g = complex_gaussian(n, n, rng);
  CMatrix p = scales.dissipation * g * g.adjoint() / static_cast<double>(n);
  p = (p + p.adjoint()).eval() * 0.5;
  std::normal_distribution<double> normal(0.0, 1.0);
  RVector v_imag(n);
  for (int i = 0; i < n; ++i) v_imag(i) = scales.hamiltonian * normal(rng);
  return LindbladGenerator(dim, std::move(p), std::move(v_imag));
}

SuperOperator exponentiate(const LindbladGenerator& l, double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw InvalidArgument("exponentiation time must be finite and >= 0");
  if (t == 0.0) return SuperOperator::identity(l.dim());
  const RMatrix scaled = t * l.transfer();
  RMatrix e = scaled.exp();
  return SuperOperator(l.dim(), std::move(e));
}

RMatrix exponentiate_by_eigendecomposition(const LindbladGenerator& l, double t) {
  Eigen::EigenSolver<RMatrix> es(l.transfer());
  const CMatrix& v = es.eigenvectors();
  const CVector e = (t * es.eigenvalues()).array().exp();
  const CMatrix result = v * e.asDiagonal() * v.inverse();
  return result.real();
}

ChannelReport validate_channel(const SuperOperator& t, double cp_tol) {
  ChannelReport report;
  report.unital = t.unital();
  const RMatrix dual = t.transfer().transpose();
  const Eigen::Index n = dual.rows();
  RVector unit_row = RVector::Zero(n);
  unit_row(n - 1) = 1.0;
  report.trace_dual_preserving =
      (dual.row(n - 1).transpose() - unit_row).cwiseAbs().maxCoeff() <= kUnitalTol;
  report.choi_min_eigenvalue = choi_matrix(t).min_eigenvalue();
  report.completely_positive = report.choi_min_eigenvalue >= -cp_tol;
  return report;
}

HermitianOperator apply(const SuperOperator& t, const HermitianOperator& h) {
  if (h.dim() != t.dim()) throw DimensionError("operator dimension does not match channel");
  const OperatorBasis basis = standard_basis(t.dim());
  return devectorize(t.transfer() * vectorize(h, basis), basis);
}

RMatrix restrict_traceless(const SuperOperator& t) {
  if (!t.unital()) throw InvalidArgument("traceless restriction requires a unital map");
  const int n = t.dim() * t.dim() - 1;
  return t.transfer().topLeftCorner(n, n);
}

}  // namespace evotomo
