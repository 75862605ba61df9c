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

#include <vector>

#include "pairwave/hilbert_layout.hpp"
#include "pairwave/types.hpp"

namespace pairwave {

// Qutrit levels, basis order |g>, |e>, |f>.
enum class Level : int { g = 0, e = 1, f = 2 };

ComplexMatrix identity(int dim);

// Kronecker product: entry A(i,j)*B(k,l) at row i*rows(B)+k, col j*cols(B)+l.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Fock-space primitives; annihilate(d)[n-1, n] = sqrt(n).
ComplexMatrix annihilate(int dim);
ComplexMatrix create(int dim);
ComplexMatrix number_op(int dim);

// |to><from| and |l><l| on the 3-level qutrit.
ComplexMatrix qutrit_transfer(Level to, Level from);
ComplexMatrix qutrit_project(Level l);

// op on a single subsystem, identity elsewhere, in layout order.
ComplexMatrix embed(const ComplexMatrix& op, int subsystem,
                    const HilbertLayout& layout);

// Trace out all subsystems not in `keep`.  The result's basis is the kept
// subsystems in layout order; `keep` is treated as a set (duplicates
// rejected).  Works on any square matrix; the trace is preserved.
ComplexMatrix partial_trace(const ComplexMatrix& rho,
                            const HilbertLayout& layout,
                            const std::vector<int>& keep);

// e^A by scaling and squaring with a 13/13 Pade approximant.  Serves as the
// propagation oracle for small systems; accurate to ~1e-13 relative for
// well-behaved (e.g. anti-Hermitian) inputs.
ComplexMatrix expm_oracle(const ComplexMatrix& a);

bool is_hermitian(const ComplexMatrix& a, double tol = 1e-12);
double max_abs(const ComplexMatrix& a);

}  // namespace pairwave
