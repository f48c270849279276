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

#include "evotomo/operator_space.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <string>

#include "evotomo/errors.hpp"

namespace evotomo {

namespace {

constexpr double kHermiticityTol = 1e-12;
constexpr double kTraceTol = 1e-12;
constexpr double kPositivityTol = 1e-10;

CMatrix checked_square(CMatrix m) {
  if (m.rows() != m.cols() || m.rows() < 1)
    throw DimensionError("operator must be a non-empty square matrix");
  if (!m.allFinite()) throw InvalidArgument("operator has non-finite entries");
  const double scale = m.cwiseAbs().maxCoeff();
  const double asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (asym > kHermiticityTol * scale)
    throw InvalidArgument("operator is not Hermitian (max |M - M^dagger| = " +
                          std::to_string(asym) + ")");
  return m;
}

void check_density(const HermitianOperator& h) {
  if (std::abs(h.trace() - 1.0) > kTraceTol)
    throw InvalidArgument("density operator must have unit trace, got " +
                          std::to_string(h.trace()));
  const double lo = h.eigenvalues()(0);
  if (lo < -kPositivityTol)
    throw InvalidArgument("density operator has negative eigenvalue " + std::to_string(lo));
}

}  // namespace

HermitianOperator::HermitianOperator(CMatrix entries) : m_(checked_square(std::move(entries))) {}

HermitianOperator HermitianOperator::identity(int dim) {
  return HermitianOperator(CMatrix::Identity(dim, dim));
}

HermitianOperator HermitianOperator::zero(int dim) {
  return HermitianOperator(CMatrix::Zero(dim, dim));
}

RVector HermitianOperator::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(m_, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

HermitianOperator HermitianOperator::operator+(const HermitianOperator& other) const {
  if (other.dim() != dim()) throw DimensionError("dimension mismatch in operator sum");
  return HermitianOperator(m_ + other.m_, Unchecked{});
}

HermitianOperator HermitianOperator::operator-(const HermitianOperator& other) const {
  if (other.dim() != dim()) throw DimensionError("dimension mismatch in operator difference");
  return HermitianOperator(m_ - other.m_, Unchecked{});
}

HermitianOperator HermitianOperator::operator*(double scale) const {
  return HermitianOperator(m_ * scale, Unchecked{});
}

DensityOperator::DensityOperator(CMatrix entries) : HermitianOperator(std::move(entries)) {
  check_density(*this);
}

DensityOperator::DensityOperator(const HermitianOperator& h) : HermitianOperator(h) {
  check_density(*this);
}

DensityOperator DensityOperator::maximally_mixed(int dim) {
  return DensityOperator(CMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

DensityOperator DensityOperator::pure(const CVector& psi) {
  const double n2 = psi.squaredNorm();
  if (!(n2 > 0.0)) throw InvalidArgument("pure state vector must be non-zero");
  CMatrix rho = psi * psi.adjoint() / n2;
  // (i,j) and (j,i) products may be contracted differently under FMA.
  rho = (rho + rho.adjoint()).eval() * 0.5;
  return DensityOperator(std::move(rho));
}

CVector OperatorBasis::coefficients(const CMatrix& x) const {
  if (x.rows() != dim_ || x.cols() != dim_)
    throw DimensionError("matrix dimension does not match basis");
  return data_->analysis * x.reshaped();
}

CMatrix OperatorBasis::synthesize(const CVector& c) const {
  if (c.size() != size()) throw DimensionError("coefficient vector length does not match basis");
  CVector flat = data_->synthesis * c;
  return flat.reshaped(dim_, dim_);
}

OperatorBasis standard_basis(int dim) {
  if (dim < 2) throw DimensionError("basis dimension must be >= 2, got " + std::to_string(dim));

  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const OperatorBasis::Data>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  if (auto it = cache.find(dim); it != cache.end()) return OperatorBasis(dim, it->second);

  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const Complex i(0.0, 1.0);
  std::vector<CMatrix> mats;
  mats.reserve(static_cast<std::size_t>(dim * dim));
  for (int j = 0; j < dim; ++j) {
    for (int k = j + 1; k < dim; ++k) {
      CMatrix sym = CMatrix::Zero(dim, dim);
      sym(j, k) = sym(k, j) = inv_sqrt2;
      mats.push_back(sym);
      CMatrix asym = CMatrix::Zero(dim, dim);
      asym(j, k) = -i * inv_sqrt2;
      asym(k, j) = i * inv_sqrt2;
      mats.push_back(asym);
    }
  }
  for (int l = 1; l < dim; ++l) {
    CMatrix diag = CMatrix::Zero(dim, dim);
    const double norm = 1.0 / std::sqrt(static_cast<double>(l) * (l + 1));
    for (int j = 0; j < l; ++j) diag(j, j) = norm;
    diag(l, l) = -static_cast<double>(l) * norm;
    mats.push_back(diag);
  }
  mats.push_back(CMatrix::Identity(dim, dim) / std::sqrt(static_cast<double>(dim)));

  auto data = std::make_shared<OperatorBasis::Data>();
  const int n = dim * dim;
  data->analysis.resize(n, n);
  data->synthesis.resize(n, n);
  for (int k = 0; k < n; ++k) {
    data->elements.emplace_back(mats[static_cast<std::size_t>(k)]);
    data->synthesis.col(k) = mats[static_cast<std::size_t>(k)].reshaped();
    data->analysis.row(k) = mats[static_cast<std::size_t>(k)].transpose().reshaped().transpose();
  }
  std::shared_ptr<const OperatorBasis::Data> shared = std::move(data);
  cache.emplace(dim, shared);
  return OperatorBasis(dim, shared);
}

RVector vectorize(const HermitianOperator& h, const OperatorBasis& basis) {
  if (h.dim() != basis.dim())
    throw DimensionError("operator dimension " + std::to_string(h.dim()) +
                         " does not match basis dimension " + std::to_string(basis.dim()));
  return basis.coefficients(h.matrix()).real();
}

RVector vectorize(const HermitianOperator& h) { return vectorize(h, standard_basis(h.dim())); }

HermitianOperator devectorize(const RVector& v, const OperatorBasis& basis) {
  if (v.size() != basis.size())
    throw DimensionError("vector length " + std::to_string(v.size()) +
                         " does not match basis size " + std::to_string(basis.size()));
  return HermitianOperator(basis.synthesize(v.cast<Complex>()));
}

HermitianOperator devectorize(const RVector& v) {
  const int d = dim_from_length(v.size());
  if (d < 2)
    throw DimensionError("vector length " + std::to_string(v.size()) +
                         " is not a perfect square >= 4");
  return devectorize(v, standard_basis(d));
}

HermitianOperator traceless_project(const HermitianOperator& h) {
  const int d = h.dim();
  CMatrix m = h.matrix();
  m.diagonal().array() -= h.matrix().trace() / static_cast<double>(d);
  return HermitianOperator(std::move(m));
}

double hs_inner(const HermitianOperator& a, const HermitianOperator& b) {
  if (a.dim() != b.dim()) throw DimensionError("dimension mismatch in inner product");
  return (a.matrix().transpose().cwiseProduct(b.matrix())).sum().real();
}

int dim_from_length(Eigen::Index n) {
  if (n < 1) return -1;
  const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(n))));
  return d * d == n ? static_cast<int>(d) : -1;
}

CMatrix pauli(int index) {
  CMatrix s(2, 2);
  const Complex i(0.0, 1.0);
  switch (index) {
    case 0: s << 1, 0, 0, 1; break;
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << 0, -i, i, 0; break;
    case 3: s << 1, 0, 0, -1; break;
    default: throw InvalidArgument("Pauli index must be in 0..3");
  }
  return s;
}

}  // namespace evotomo
