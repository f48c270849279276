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

#include "evotomo/random.hpp"

#include <cmath>

namespace evotomo {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

CMatrix complex_gaussian(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  CMatrix g(rows, cols);
  // Fill column by column so the draw order is fixed.
  for (int c = 0; c < cols; ++c)
    for (int r = 0; r < rows; ++r) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(r, c) = Complex(re, im);
    }
  return g;
}

CMatrix haar_unitary(int dim, Rng& rng) {
  const CMatrix z = complex_gaussian(dim, dim, rng);
  Eigen::HouseholderQR<CMatrix> qr(z);
  CMatrix q = qr.householderQ() * CMatrix::Identity(dim, dim);
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    const Complex rjj = r(j, j);
    const double a = std::abs(rjj);
    if (a > 0.0) q.col(j) *= rjj / a;
  }
  return q;
}

HermitianOperator random_hermitian(int dim, Rng& rng) {
  const CMatrix a = complex_gaussian(dim, dim, rng);
  CMatrix h = (a + a.adjoint()) * 0.5;
  return HermitianOperator(std::move(h));
}

DensityOperator random_density(int dim, Rng& rng) {
  const CMatrix g = complex_gaussian(dim, dim, rng);
  CMatrix rho = g * g.adjoint();
  rho = (rho + rho.adjoint()).eval() * 0.5;
  rho /= rho.trace().real();
  return DensityOperator(std::move(rho));
}

DensityOperator random_pure_state(int dim, Rng& rng) {
  const CMatrix psi = complex_gaussian(dim, 1, rng);
  return DensityOperator::pure(psi.col(0));
}

}  // namespace evotomo
