// Copyright 2026 The cvcodes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cvcodes/fock.hpp"

// Seeded generators for property checks. All draws go through one
// std::mt19937_64 so a seed fixes every instance.

namespace cvcodes {

/// Haar-distributed unitary (QR of a complex Gaussian matrix, phases fixed).
ComplexMatrix random_unitary(std::mt19937_64 &rng, int dim);

struct HermitianPair {
    ComplexMatrix x;
    ComplexMatrix y;
    /// The eigenvalues the two matrices have in common, ascending.
    std::vector<double> shared;
};

/// X (dim_x) and Y (dim_y) with `shared` common eigenvalues; all other
/// eigenvalues are distinct across both and at least 0.3 apart.
HermitianPair random_hermitian_pair(std::mt19937_64 &rng, int dim_x, int dim_y, int shared);

/// k isometries of shape (k d) x d whose ranges tile C^{k d}: the column
/// blocks of a random signed permutation with phases in {1, i, -1, -i}, so
/// every product stays exact in floating point.
std::vector<ComplexMatrix> exact_semi_unitary_family(std::mt19937_64 &rng, int k, int d);

/// Same shape, built from the column blocks of a Haar unitary.
std::vector<ComplexMatrix> random_semi_unitary_family(std::mt19937_64 &rng, int k, int d);

/// A normalized random primitive on D levels with support on some kN with
/// k even and some with k odd.
FockVector random_valid_primitive(std::mt19937_64 &rng, int order, int dim);

}  // namespace cvcodes
