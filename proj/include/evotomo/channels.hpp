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

#include <optional>

#include "evotomo/operator_space.hpp"
#include "evotomo/random.hpp"

namespace evotomo {

// Convention: every map acts on observables (Heisenberg picture). A state
// evolves under the dual map, whose transfer matrix is the transpose.

/// Hermiticity-preserving linear map on d x d Hermitian matrices, stored as
/// its real d^2 x d^2 transfer matrix in standard_basis(d):
/// transfer(k, l) = tr(B_k T(B_l)).
class SuperOperator {
 public:
  SuperOperator(int dim, RMatrix transfer, std::optional<bool> completely_positive = {});

  static SuperOperator identity(int dim);

  int dim() const noexcept { return dim_; }
  const RMatrix& transfer() const noexcept { return transfer_; }
  /// Last column equals (0, ..., 0, 1) within 1e-10, i.e. T(1) = 1.
  bool unital() const noexcept { return unital_; }
  /// Known complete positivity, if a constructor established it.
  std::optional<bool> completely_positive() const noexcept { return cp_; }

  /// Hilbert-Schmidt dual T*, transfer matrix transposed.
  SuperOperator dual() const;
  /// (this o other)(X) = this(other(X)).
  SuperOperator compose(const SuperOperator& other) const;
  SuperOperator power(int k) const;

  /// The map as a complex d^2 x d^2 matrix acting on column-major vec(X),
  /// extended complex-linearly to all of C^{d x d}.
  CMatrix natural_matrix() const;

 private:
  int dim_;
  RMatrix transfer_;
  bool unital_;
  std::optional<bool> cp_;
};

/// Choi matrix C = sum_ij T(|i><j|) (x) |i><j|, row index a*d + i.
struct ChoiMatrix {
  int dim = 0;
  CMatrix entries;

  double min_eigenvalue() const;
};

/// GKLS generator L(X) = Phi(X) - K X - X K^dagger in Choi-block form.
///
/// The Choi matrix of L in the basis |b_i> = (B_i (x) 1)|Omega> is
///   [ P    v      ]
///   [ v^*  -tr P  ]
/// with Phi(X) = sum_ij P_ij B_i X B_j, Re K = Phi(1)/2 and
/// v_i = -sqrt(d) tr(B_i K). Only Im v is a free parameter.
class LindbladGenerator {
 public:
  /// P must be PSD (smallest eigenvalue >= -1e-10 ||P||).
  LindbladGenerator(int dim, CMatrix p, RVector v_imag);

  int dim() const noexcept { return dim_; }
  const CMatrix& p() const noexcept { return p_; }
  const RVector& v_imag() const noexcept { return v_imag_; }
  /// Full off-diagonal Choi block v (real part derived from P).
  CVector v() const;
  /// K = Phi(1)/2 + i G with G traceless Hermitian.
  const CMatrix& k() const noexcept { return k_; }
  /// Real d^2 x d^2 matrix of L; last column is zero.
  const RMatrix& transfer() const noexcept { return transfer_; }

  /// L applied to an arbitrary complex matrix.
  CMatrix apply(const CMatrix& x) const;
  ChoiMatrix choi() const;
  /// The Choi matrix expressed in the |b_i> basis (should equal the block form).
  CMatrix choi_in_operator_basis() const;

 private:
  int dim_;
  CMatrix p_;
  RVector v_imag_;
  CMatrix k_;
  RMatrix transfer_;
};

struct LindbladScales {
  double dissipation = 0.15;  ///< P = dissipation * G G^dagger / (d^2 - 1)
  double hamiltonian = 1.0;   ///< Im v ~ hamiltonian * N(0, 1)
};

/// T(H) = U^dagger H U.
SuperOperator unitary_channel(const CMatrix& u);

/// T(H) = (1 - lambda) U^dagger H U + lambda 1 tr(H sigma).
SuperOperator depolarizing_mixture(const CMatrix& u, const DensityOperator& sigma, double lambda);

/// T(H) = (1 - p) e^{-i theta Z/2} H e^{i theta Z/2} + p 1 tr(H)/2.
SuperOperator qubit_dephasing_depolarizing(double p, double theta);

/// U = ((1+i, 1+i), (i-1, 1-i)) / 2, cycling sigma_x -> sigma_y -> sigma_z -> sigma_x.
CMatrix cyclic_qubit_unitary();

/// P = scale G G^dagger / (d^2 - 1) with G complex Gaussian, Im v ~ scale N(0,1).
LindbladGenerator random_lindblad(int dim, Rng& rng, double scale);
/// Separate knobs for the dissipative and Hamiltonian parts.
LindbladGenerator random_lindblad(int dim, Rng& rng, const LindbladScales& scales = {});

/// e^{tL} by Pade scaling-and-squaring.
SuperOperator exponentiate(const LindbladGenerator& l, double t);
/// e^{tL} through the eigendecomposition of the transfer matrix; cross-check only.
RMatrix exponentiate_by_eigendecomposition(const LindbladGenerator& l, double t);

ChoiMatrix choi_matrix(const SuperOperator& t);

struct ChannelReport {
  bool unital = false;
  bool completely_positive = false;
  bool trace_dual_preserving = false;
  double choi_min_eigenvalue = 0.0;
};

/// CP iff the Choi matrix has smallest eigenvalue >= -cp_tol.
ChannelReport validate_channel(const SuperOperator& t, double cp_tol = 1e-8);

HermitianOperator apply(const SuperOperator& t, const HermitianOperator& h);

/// Leading (d^2-1) block of the transfer matrix: T_Q = Q o T on traceless operators.
RMatrix restrict_traceless(const SuperOperator& t);

}  // namespace evotomo
