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

// Internal compiled form of a HarmonicHamiltonian + LindbladSet used by the
// propagators.  Everything public stays dense; this header is private to the
// library.  The operators that appear in the master equation are extremely
// sparse (ladder and transfer products), so the right-hand side is evaluated
// as sparse-times-dense-row updates with the Hermitian structure of rho used
// to halve the harmonic bookkeeping:
//
//   drho/dt = C + C^dagger  with
//   C = A rho + sum_nu [c_nu O_nu rho - c_nu rho O_nu] + sum_l (r_l/2) L rho L^+
//   A = -i H_static - (1/2) sum_l r_l L^+ L,   c_nu = -i e^{i nu t}.
//
// Expanding C + C^dagger for Hermitian rho reproduces the commutator and the
// full dissipator exactly, and makes every Runge-Kutta stage derivative
// exactly Hermitian by construction.

#pragma once

#include <vector>

#include "pairwave/hamiltonian.hpp"
#include "pairwave/types.hpp"

namespace pairwave::detail {

struct Csr {
  int dim = 0;
  std::vector<int> rowptr;  // size dim + 1
  std::vector<int> col;
  std::vector<Complex> val;

  static Csr from_dense(const ComplexMatrix& a);
  ComplexMatrix to_dense() const;
  int nnz() const { return static_cast<int>(val.size()); }
};

// y += coeff * S x
void spmv_accum(Complex* y, const Csr& s, const Complex* x, Complex coeff);
// C += coeff * S X  (all matrices dim x dim, row-major dense for C and X)
void left_mul_accum(ComplexMatrix& c, const Csr& s, const ComplexMatrix& x,
                    Complex coeff);
// C += coeff * X S
void right_mul_accum(ComplexMatrix& c, const ComplexMatrix& x, const Csr& s,
                     Complex coeff);
// Same, restricted to the given rows of X; other rows of C are untouched.
void right_mul_accum_rows(ComplexMatrix& c, const ComplexMatrix& x, const Csr& s,
                          Complex coeff, const std::vector<int>& rows);
// C <- C + C^dagger in place
void hermitian_double(ComplexMatrix& c);

// Harmonic terms sharing a frequency are merged at compile time.
struct CompiledHarmonic {
  double nu = 0.0;
  Csr op;
  Csr op_dag;  // used by the pure-state path only
};

class MasterEngine {
 public:
  MasterEngine(const HarmonicHamiltonian& h,
               const std::vector<std::pair<ComplexMatrix, double>>& jumps);

  // k <- full Lindblad right-hand side at time t; rho must be Hermitian.
  // k comes out exactly Hermitian.
  void rhs(double t, const ComplexMatrix& rho, ComplexMatrix& k) const;

  int dim() const { return dim_; }

 private:
  int dim_ = 0;
  Csr drift_;  // -i H_static - (1/2) sum r L^+ L
  std::vector<CompiledHarmonic> harmonics_;
  struct Jump {
    Csr op;
    Csr op_dag;
    double half_rate = 0.0;
    std::vector<int> rows;  // rows of op with any nonzero (rows of L rho)
  };
  std::vector<Jump> jumps_;
  mutable ComplexMatrix scratch_;
};

class PureEngine {
 public:
  explicit PureEngine(const HarmonicHamiltonian& h);

  // k <- -i H(t) psi
  void rhs(double t, const ComplexVector& psi, ComplexVector& k) const;

  int dim() const { return dim_; }

 private:
  int dim_ = 0;
  Csr h_static_;
  std::vector<CompiledHarmonic> harmonics_;
};

// Shared compile step: dense harmonic terms merged by frequency
// (|nu_i - nu_j| <= 1e-9 (1 + |nu_i|) treated as equal).
std::vector<CompiledHarmonic> compile_harmonics(const HarmonicHamiltonian& h,
                                                bool with_daggers);

}  // namespace pairwave::detail
