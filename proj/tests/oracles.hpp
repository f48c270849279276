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

// Brute-force reference computations for tests. Everything here works on
// dense d x d matrices and avoids the library's transfer-matrix machinery.

#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using C = std::complex<double>;
using M = Eigen::MatrixXcd;

/// Generalized Gell-Mann matrices, normalized to tr(B_i B_j) = delta_ij:
/// symmetric then antisymmetric for each pair j < k, diagonals, identity last.
inline std::vector<M> gell_mann(int d) {
  std::vector<M> out;
  const C i(0.0, 1.0);
  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      M s = M::Zero(d, d);
      s(j, k) = s(k, j) = 1.0;
      out.push_back(s / std::sqrt(2.0));
      M a = M::Zero(d, d);
      a(j, k) = -i;
      a(k, j) = i;
      out.push_back(a / std::sqrt(2.0));
    }
  }
  for (int l = 1; l < d; ++l) {
    M g = M::Zero(d, d);
    for (int m = 0; m < l; ++m) g(m, m) = 1.0;
    g(l, l) = -static_cast<double>(l);
    out.push_back(g / std::sqrt(static_cast<double>(l) * (l + 1)));
  }
  out.push_back(M::Identity(d, d) / std::sqrt(static_cast<double>(d)));
  return out;
}

inline double expectation(const M& rho, const M& h) { return (rho * h).trace().real(); }

/// tr(rho U^{dagger i} H U^i).
inline double unitary_series_value(const M& rho, const M& u, const M& h, int i) {
  M x = h;
  for (int k = 0; k < i; ++k) x = u.adjoint() * x * u;
  return expectation(rho, x);
}

/// Heisenberg-picture GKLS generator in Kraus form,
/// L(X) = i[H, X] + sum_k (A_k^dag X A_k - {A_k^dag A_k, X} / 2),
/// with P = sum_k w_k w_k^dag, A_k^dag = sum_j (w_k)_j B_j and
/// H = (1/sqrt d) sum_i v_i B_i.
struct Lindblad {
  int d = 0;
  M h;
  std::vector<M> a;

  Lindblad(int dim, const M& p, const Eigen::VectorXd& v_imag) : d(dim) {
    const auto basis = gell_mann(d);
    const int n = d * d - 1;
    h = M::Zero(d, d);
    for (int i = 0; i < n; ++i) h += v_imag(i) / std::sqrt(static_cast<double>(d)) * basis[i];
    Eigen::SelfAdjointEigenSolver<M> es(p);
    for (int k = 0; k < n; ++k) {
      const double w = std::max(0.0, es.eigenvalues()(k));
      M adag = M::Zero(d, d);
      for (int j = 0; j < n; ++j) adag += std::sqrt(w) * es.eigenvectors()(j, k) * basis[j];
      a.push_back(adag.adjoint());
    }
  }

  M apply(const M& x) const {
    const C i(0.0, 1.0);
    M out = i * (h * x - x * h);
    for (const M& ak : a) {
      const M ad = ak.adjoint();
      out += ad * x * ak - 0.5 * (ad * ak * x + x * ad * ak);
    }
    return out;
  }

  /// d^2 x d^2 matrix on column-major vec(X).
  M natural() const {
    M n(d * d, d * d);
    for (int b = 0; b < d; ++b) {
      for (int a0 = 0; a0 < d; ++a0) {
        M e = M::Zero(d, d);
        e(a0, b) = 1.0;
        n.col(a0 + b * d) = apply(e).reshaped();
      }
    }
    return n;
  }
};

/// exp(A) by Taylor series with scaling and squaring.
inline M expm_taylor(const M& a) {
  const double norm = a.cwiseAbs().colwise().sum().maxCoeff();
  int s = 0;
  while (norm / std::pow(2.0, s) > 0.25) ++s;
  const M x = a / std::pow(2.0, s);
  M term = M::Identity(a.rows(), a.cols());
  M sum = term;
  for (int k = 1; k <= 30; ++k) {
    term = (term * x / static_cast<double>(k)).eval();
    sum += term;
  }
  for (int k = 0; k < s; ++k) sum = (sum * sum).eval();
  return sum;
}

/// tr(rho e^{tL}(H0)) through the natural matrix of the Kraus-form generator.
inline double continuous_value(const Lindblad& l, const M& rho, const M& h0, double t) {
  const M e = expm_taylor(t * l.natural());
  const Eigen::VectorXcd v = e * h0.reshaped();
  return expectation(rho, v.reshaped(l.d, l.d));
}

/// Largest |x - y| over max |y|.
inline double relative_error(const std::vector<double>& x, const std::vector<double>& y) {
  double dev = 0.0;
  double scale = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    dev = std::max(dev, std::abs(x[k] - y[k]));
    scale = std::max(scale, std::abs(y[k]));
  }
  return scale > 0.0 ? dev / scale : dev;
}

}  // namespace oracle
