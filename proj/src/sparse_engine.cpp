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

#include "sparse_engine.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace pairwave::detail {
namespace {

// y[0..n) += a * x[0..n); split into real arithmetic so the compiler can
// vectorize the inner loops of the dense-row updates.
inline void caxpy(int n, Complex a, const Complex* x, Complex* y) {
  const double ar = a.real();
  const double ai = a.imag();
  const double* __restrict__ xr = reinterpret_cast<const double*>(x);
  double* __restrict__ yr = reinterpret_cast<double*>(y);
  for (int i = 0; i < n; ++i) {
    const double vr = xr[2 * i];
    const double vi = xr[2 * i + 1];
    yr[2 * i] += ar * vr - ai * vi;
    yr[2 * i + 1] += ar * vi + ai * vr;
  }
}

std::vector<int> nonzero_rows(const Csr& s) {
  std::vector<int> rows;
  for (int r = 0; r < s.dim; ++r) {
    if (s.rowptr[r + 1] > s.rowptr[r]) rows.push_back(r);
  }
  return rows;
}

}  // namespace

Csr Csr::from_dense(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("Csr: square matrix required");
  Csr s;
  s.dim = static_cast<int>(a.rows());
  s.rowptr.assign(s.dim + 1, 0);
  for (int r = 0; r < s.dim; ++r) {
    for (int c = 0; c < s.dim; ++c) {
      const Complex v = a(r, c);
      if (v != Complex(0.0, 0.0)) {
        s.col.push_back(c);
        s.val.push_back(v);
      }
    }
    s.rowptr[r + 1] = static_cast<int>(s.col.size());
  }
  return s;
}

ComplexMatrix Csr::to_dense() const {
  ComplexMatrix a = ComplexMatrix::Zero(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int k = rowptr[r]; k < rowptr[r + 1]; ++k) a(r, col[k]) += val[k];
  }
  return a;
}

void spmv_accum(Complex* y, const Csr& s, const Complex* x, Complex coeff) {
  for (int r = 0; r < s.dim; ++r) {
    Complex acc(0.0, 0.0);
    for (int k = s.rowptr[r]; k < s.rowptr[r + 1]; ++k) acc += s.val[k] * x[s.col[k]];
    y[r] += coeff * acc;
  }
}

void left_mul_accum(ComplexMatrix& c, const Csr& s, const ComplexMatrix& x,
                    Complex coeff) {
  const int n = s.dim;
  for (int r = 0; r < n; ++r) {
    Complex* crow = &c(r, 0);
    for (int k = s.rowptr[r]; k < s.rowptr[r + 1]; ++k) {
      caxpy(n, coeff * s.val[k], &x(s.col[k], 0), crow);
    }
  }
}

namespace {

inline void right_mul_row(Complex* crow, const Complex* xrow, const Csr& s,
                          Complex coeff) {
  for (int i = 0; i < s.dim; ++i) {
    const int begin = s.rowptr[i];
    const int end = s.rowptr[i + 1];
    if (begin == end) continue;
    const Complex xi = coeff * xrow[i];
    for (int k = begin; k < end; ++k) crow[s.col[k]] += s.val[k] * xi;
  }
}

}  // namespace

void right_mul_accum(ComplexMatrix& c, const ComplexMatrix& x, const Csr& s,
                     Complex coeff) {
  const int n = s.dim;
  for (int r = 0; r < n; ++r) right_mul_row(&c(r, 0), &x(r, 0), s, coeff);
}

void right_mul_accum_rows(ComplexMatrix& c, const ComplexMatrix& x, const Csr& s,
                          Complex coeff, const std::vector<int>& rows) {
  for (int r : rows) right_mul_row(&c(r, 0), &x(r, 0), s, coeff);
}

void hermitian_double(ComplexMatrix& c) {
  const int n = static_cast<int>(c.rows());
  for (int i = 0; i < n; ++i) {
    c(i, i) = Complex(2.0 * c(i, i).real(), 0.0);
    for (int j = i + 1; j < n; ++j) {
      const Complex v = c(i, j) + std::conj(c(j, i));
      c(i, j) = v;
      c(j, i) = std::conj(v);
    }
  }
}

std::vector<CompiledHarmonic> compile_harmonics(const HarmonicHamiltonian& h,
                                                bool with_daggers) {
  // Canonicalize to nu > 0 (op e^{i nu t} + h.c. with nu < 0 equals the
  // adjoint operator at -nu), then merge coincident frequencies so the
  // propagator pays one dense update per distinct frequency.
  std::vector<double> nus;
  std::vector<ComplexMatrix> ops;
  for (const HarmonicTerm& term : h.terms()) {
    double nu = term.nu;
    ComplexMatrix op = term.op;
    if (nu < 0.0) {
      nu = -nu;
      op = term.op.adjoint();
    }
    bool merged = false;
    for (std::size_t i = 0; i < nus.size(); ++i) {
      if (std::abs(nu - nus[i]) <= 1e-9 * (1.0 + std::abs(nus[i]))) {
        ops[i] += op;
        merged = true;
        break;
      }
    }
    if (!merged) {
      nus.push_back(nu);
      ops.push_back(op);
    }
  }
  std::vector<CompiledHarmonic> out;
  out.reserve(nus.size());
  for (std::size_t i = 0; i < nus.size(); ++i) {
    CompiledHarmonic ch;
    ch.nu = nus[i];
    ch.op = Csr::from_dense(ops[i]);
    if (with_daggers) ch.op_dag = Csr::from_dense(ops[i].adjoint());
    out.push_back(std::move(ch));
  }
  return out;
}

MasterEngine::MasterEngine(
    const HarmonicHamiltonian& h,
    const std::vector<std::pair<ComplexMatrix, double>>& jumps)
    : dim_(h.layout().total_dim()) {
  ComplexMatrix drift = Complex(0.0, -1.0) * h.static_term();
  for (const auto& [op, rate] : jumps) {
    if (rate < 0.0 || !std::isfinite(rate)) {
      throw std::invalid_argument("MasterEngine: jump rate must be finite and >= 0");
    }
    if (rate == 0.0) continue;
    if (op.rows() != dim_ || op.cols() != dim_) {
      throw std::invalid_argument("MasterEngine: jump operator dimension mismatch");
    }
    drift -= 0.5 * rate * (op.adjoint() * op);
    Jump j;
    j.op = Csr::from_dense(op);
    j.op_dag = Csr::from_dense(op.adjoint());
    j.half_rate = 0.5 * rate;
    j.rows = nonzero_rows(j.op);
    jumps_.push_back(std::move(j));
  }
  drift_ = Csr::from_dense(drift);
  harmonics_ = compile_harmonics(h, /*with_daggers=*/false);
  scratch_ = ComplexMatrix::Zero(dim_, dim_);
}

void MasterEngine::rhs(double t, const ComplexMatrix& rho, ComplexMatrix& k) const {
  k.setZero();
  // C = A rho + sum_nu c_nu (O rho - rho O) + sum (r/2) L rho L^dagger
  left_mul_accum(k, drift_, rho, Complex(1.0, 0.0));
  for (const CompiledHarmonic& harm : harmonics_) {
    const Complex c = Complex(0.0, -1.0) * std::exp(Complex(0.0, harm.nu * t));
    left_mul_accum(k, harm.op, rho, c);
    right_mul_accum(k, rho, harm.op, -c);
  }
  for (const Jump& j : jumps_) {
    for (int r : j.rows) {
      std::fill(&scratch_(r, 0), &scratch_(r, 0) + dim_, Complex(0.0, 0.0));
    }
    left_mul_accum(scratch_, j.op, rho, Complex(1.0, 0.0));
    right_mul_accum_rows(k, scratch_, j.op_dag, Complex(j.half_rate, 0.0), j.rows);
  }
  // k <- C + C^dagger: the exact Lindblad derivative for Hermitian rho.
  hermitian_double(k);
}

PureEngine::PureEngine(const HarmonicHamiltonian& h)
    : dim_(h.layout().total_dim()) {
  h_static_ = Csr::from_dense(h.static_term());
  harmonics_ = compile_harmonics(h, /*with_daggers=*/true);
}

void PureEngine::rhs(double t, const ComplexVector& psi, ComplexVector& k) const {
  k.setZero();
  const Complex minus_i(0.0, -1.0);
  spmv_accum(k.data(), h_static_, psi.data(), minus_i);
  for (const CompiledHarmonic& harm : harmonics_) {
    const Complex phase = std::exp(Complex(0.0, harm.nu * t));
    spmv_accum(k.data(), harm.op, psi.data(), minus_i * phase);
    spmv_accum(k.data(), harm.op_dag, psi.data(), minus_i * std::conj(phase));
  }
}

}  // namespace pairwave::detail
