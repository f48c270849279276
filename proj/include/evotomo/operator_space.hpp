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

#include <complex>
#include <memory>
#include <vector>

#include <Eigen/Dense>

#include "evotomo/errors.hpp"

namespace evotomo {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

/// Self-adjoint complex d x d matrix.
///
/// Construction rejects inputs with max|M - M^dagger| > 1e-12 * max|M|;
/// nothing is symmetrized silently.
class HermitianOperator {
 public:
  explicit HermitianOperator(CMatrix entries);

  static HermitianOperator identity(int dim);
  static HermitianOperator zero(int dim);

  int dim() const noexcept { return static_cast<int>(m_.rows()); }
  const CMatrix& matrix() const noexcept { return m_; }
  double trace() const { return m_.trace().real(); }
  /// Ascending eigenvalues.
  RVector eigenvalues() const;
  /// Hilbert-Schmidt norm.
  double norm() const { return m_.norm(); }

  HermitianOperator operator+(const HermitianOperator& other) const;
  HermitianOperator operator-(const HermitianOperator& other) const;
  HermitianOperator operator*(double scale) const;

 protected:
  struct Unchecked {};
  HermitianOperator(CMatrix entries, Unchecked) : m_(std::move(entries)) {}

 private:
  CMatrix m_;
};

inline HermitianOperator operator*(double scale, const HermitianOperator& h) {
  return h * scale;
}

/// Unit-trace, positive semidefinite Hermitian operator
/// (trace within 1e-12, smallest eigenvalue >= -1e-10).
class DensityOperator : public HermitianOperator {
 public:
  explicit DensityOperator(CMatrix entries);
  explicit DensityOperator(const HermitianOperator& h);

  static DensityOperator maximally_mixed(int dim);
  /// |psi><psi| / <psi|psi>.
  static DensityOperator pure(const CVector& psi);
};

/// Hilbert-Schmidt orthonormal basis of the Hermitian d x d matrices: the
/// generalized Gell-Mann matrices scaled by 1/sqrt(2), with 1/sqrt(d) last.
///
/// For d = 2 the elements are sigma_x, sigma_y, sigma_z, 1 (each / sqrt 2).
/// Copies share the underlying storage.
class OperatorBasis {
 public:
  int dim() const noexcept { return dim_; }
  int size() const noexcept { return dim_ * dim_; }
  const HermitianOperator& element(int k) const { return data_->elements.at(k); }
  const std::vector<HermitianOperator>& elements() const { return data_->elements; }

  /// Row k holds vec(B_k^T)^T, so (analysis * vec(X))_k = tr(B_k X) for any
  /// complex X (column-major vec).
  const CMatrix& analysis() const { return data_->analysis; }
  /// Column k holds vec(B_k), so vec(X) = synthesis * coefficients.
  const CMatrix& synthesis() const { return data_->synthesis; }

  /// Complex coefficients tr(B_k X) of an arbitrary complex matrix.
  CVector coefficients(const CMatrix& x) const;
  /// sum_k c_k B_k.
  CMatrix synthesize(const CVector& c) const;

 private:
  struct Data {
    std::vector<HermitianOperator> elements;
    CMatrix analysis;
    CMatrix synthesis;
  };
  OperatorBasis(int dim, std::shared_ptr<const Data> data)
      : dim_(dim), data_(std::move(data)) {}

  int dim_;
  std::shared_ptr<const Data> data_;

  friend OperatorBasis standard_basis(int dim);
};

/// Cached, thread-safe. Throws DimensionError for d < 2.
OperatorBasis standard_basis(int dim);

/// Components tr(B_k H).
RVector vectorize(const HermitianOperator& h, const OperatorBasis& basis);
RVector vectorize(const HermitianOperator& h);

HermitianOperator devectorize(const RVector& v, const OperatorBasis& basis);
/// Infers d from the length, which must be a perfect square >= 4.
HermitianOperator devectorize(const RVector& v);

/// X - 1 tr(X) / d.
HermitianOperator traceless_project(const HermitianOperator& h);

/// Re tr(A B).
double hs_inner(const HermitianOperator& a, const HermitianOperator& b);

/// Integer d with d*d == n, or -1.
int dim_from_length(Eigen::Index n);

/// Pauli matrices sigma_x, sigma_y, sigma_z (index 1..3); index 0 is identity.
CMatrix pauli(int index);

}  // namespace evotomo
