// Copyright 2026 The pairwave Authors
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

#include <random>

#include "pairwave/types.hpp"

namespace pairwave::testing {

inline ComplexMatrix random_matrix(std::mt19937_64& rng, int rows, int cols) {
  std::normal_distribution<double> dist(0.0, 1.0);
  ComplexMatrix a(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) a(i, j) = Complex(dist(rng), dist(rng));
  return a;
}

inline ComplexMatrix random_hermitian(std::mt19937_64& rng, int dim) {
  const ComplexMatrix a = random_matrix(rng, dim, dim);
  return ComplexMatrix(0.5 * (a + a.adjoint()));
}

// Random density matrix: positive semidefinite with unit trace.
inline ComplexMatrix random_density(std::mt19937_64& rng, int dim) {
  const ComplexMatrix a = random_matrix(rng, dim, dim);
  ComplexMatrix rho = a * a.adjoint();
  rho /= rho.trace().real();
  return rho;
}

inline ComplexVector random_state(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> dist(0.0, 1.0);
  ComplexVector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = Complex(dist(rng), dist(rng));
  v.normalize();
  return v;
}

}  // namespace pairwave::testing
