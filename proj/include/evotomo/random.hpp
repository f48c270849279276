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

#include <cstdint>
#include <random>

#include "evotomo/operator_space.hpp"

namespace evotomo {

/// Every sampler takes its engine explicitly; there is no global RNG state.
using Rng = std::mt19937_64;

/// Stream seed for cell/trial `index` of a run seeded with `seed` (splitmix64).
/// Serial and parallel runs that use it draw identical numbers per cell.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// i.i.d. entries with E|z|^2 = 1.
CMatrix complex_gaussian(int rows, int cols, Rng& rng);

/// Haar-distributed unitary (QR of a Ginibre matrix with phase fix).
CMatrix haar_unitary(int dim, Rng& rng);

/// GUE-like Hermitian matrix (A + A^dagger) / 2.
HermitianOperator random_hermitian(int dim, Rng& rng);

/// Full-rank density matrix G G^dagger / tr, G Ginibre.
DensityOperator random_density(int dim, Rng& rng);

/// Haar-random pure state.
DensityOperator random_pure_state(int dim, Rng& rng);

}  // namespace evotomo
