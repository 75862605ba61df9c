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

#include "pairwave/quantum_core.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pairwave {

ComplexMatrix identity(int dim) {
  if (dim < 1) throw std::invalid_argument("identity: dimension < 1");
  return ComplexMatrix::Identity(dim, dim);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const int am = static_cast<int>(a.rows()), an = static_cast<int>(a.cols());
  const int bm = static_cast<int>(b.rows()), bn = static_cast<int>(b.cols());
  ComplexMatrix out(am * bm, an * bn);
  for (int i = 0; i < am; ++i)
    for (int j = 0; j < an; ++j) {
      const Complex aij = a(i, j);
      for (int k = 0; k < bm; ++k)
        for (int l = 0; l < bn; ++l) out(i * bm + k, j * bn + l) = aij * b(k, l);
    }
  return out;
}

ComplexMatrix annihilate(int dim) {
  if (dim < 2) throw std::invalid_argument("annihilate: dimension < 2");
  ComplexMatrix a = ComplexMatrix::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

ComplexMatrix create(int dim) {
  if (dim < 2) throw std::invalid_argument("create: dimension < 2");
  return annihilate(dim).adjoint();
}

ComplexMatrix number_op(int dim) {
  if (dim < 2) throw std::invalid_argument("number_op: dimension < 2");
  ComplexMatrix n = ComplexMatrix::Zero(dim, dim);
  for (int k = 0; k < dim; ++k) n(k, k) = static_cast<double>(k);
  return n;
}

ComplexMatrix qutrit_transfer(Level to, Level from) {
  ComplexMatrix t = ComplexMatrix::Zero(3, 3);
  t(static_cast<int>(to), static_cast<int>(from)) = 1.0;
  return t;
}

ComplexMatrix qutrit_project(Level l) { return qutrit_transfer(l, l); }

ComplexMatrix embed(const ComplexMatrix& op, int subsystem,
                    const HilbertLayout& layout) {
  if (subsystem < 0 || subsystem >= layout.subsystem_count())
    throw std::invalid_argument("embed: bad subsystem index");
  const int d_op = layout.dim(subsystem);
  if (op.rows() != d_op || op.cols() != d_op)
    throw std::invalid_argument("embed: operator dimension mismatch");

  int pre = 1, post = 1;
  for (int k = 0; k < subsystem; ++k) pre *= layout.dim(k);
  for (int k = subsystem + 1; k < layout.subsystem_count(); ++k)
    post *= layout.dim(k);

  const int total = layout.total_dim();
  ComplexMatrix out = ComplexMatrix::Zero(total, total);
  for (int p = 0; p < pre; ++p)
    for (int r = 0; r < d_op; ++r)
      for (int c = 0; c < d_op; ++c) {
        const Complex v = op(r, c);
        if (v == Complex(0.0, 0.0)) continue;
        const int row0 = (p * d_op + r) * post;
        const int col0 = (p * d_op + c) * post;
        for (int q = 0; q < post; ++q) out(row0 + q, col0 + q) = v;
      }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho,
                            const HilbertLayout& layout,
                            const std::vector<int>& keep) {
  if (rho.rows() != layout.total_dim() || rho.cols() != layout.total_dim())
    throw std::invalid_argument("partial_trace: matrix/layout dimension mismatch");
  if (keep.empty()) throw std::invalid_argument("partial_trace: empty keep set");

  std::vector<int> kept = keep;
  std::sort(kept.begin(), kept.end());
  if (std::adjacent_find(kept.begin(), kept.end()) != kept.end())
    throw std::invalid_argument("partial_trace: duplicate subsystem in keep");
  for (int k : kept)
    if (k < 0 || k >= layout.subsystem_count())
      throw std::invalid_argument("partial_trace: keep index out of range");

  std::vector<int> traced;
  for (int k = 0; k < layout.subsystem_count(); ++k)
    if (!std::binary_search(kept.begin(), kept.end(), k)) traced.push_back(k);

  // Enumerate flat offsets of the kept and traced sub-bases.
  auto offsets = [&](const std::vector<int>& subs) {
    std::vector<long> offs{0};
    for (int s : subs) {
      std::vector<long> next;
      next.reserve(offs.size() * layout.dim(s));
      for (long o : offs)
        for (int v = 0; v < layout.dim(s); ++v) next.push_back(o + v * layout.stride(s));
      offs = std::move(next);
    }
    return offs;
  };
  const std::vector<long> kept_offs = offsets(kept);
  const std::vector<long> traced_offs = offsets(traced);

  const int dk = static_cast<int>(kept_offs.size());
  ComplexMatrix out = ComplexMatrix::Zero(dk, dk);
  for (int i = 0; i < dk; ++i)
    for (int j = 0; j < dk; ++j) {
      Complex sum{0.0, 0.0};
      for (long t : traced_offs) sum += rho(kept_offs[i] + t, kept_offs[j] + t);
      out(i, j) = sum;
    }
  return out;
}

ComplexMatrix expm_oracle(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("expm_oracle: not square");
  const int n = static_cast<int>(a.rows());
  if (n == 0) return a;

  // 1-norm (max column sum) controls the scaling step.
  double norm1 = 0.0;
  for (int j = 0; j < n; ++j) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += std::abs(a(i, j));
    norm1 = std::max(norm1, s);
  }

  const double theta13 = 5.371920351148152;
  int s = 0;
  if (norm1 > theta13) s = static_cast<int>(std::ceil(std::log2(norm1 / theta13)));

  ComplexMatrix as = a / std::pow(2.0, s);

  // 13/13 Pade numerator/denominator coefficients.
  static const double b[14] = {
      64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
      1187353796428800.0,  129060195264000.0,   10559470521600.0,
      670442572800.0,      33522128640.0,       1323241920.0,
      40840800.0,          960960.0,            16380.0,
      182.0,               1.0};

  const ComplexMatrix eye = ComplexMatrix::Identity(n, n);
  const ComplexMatrix a2 = as * as;
  const ComplexMatrix a4 = a2 * a2;
  const ComplexMatrix a6 = a2 * a4;

  const ComplexMatrix u =
      as * (a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 + b[5] * a4 +
            b[3] * a2 + b[1] * eye);
  const ComplexMatrix v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) +
                          b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * eye;

  ComplexMatrix x = (v - u).partialPivLu().solve(v + u);
  for (int k = 0; k < s; ++k) x = x * x;
  return x;
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
  if (a.rows() != a.cols()) return false;
  return max_abs(a - a.adjoint()) <= tol;
}

double max_abs(const ComplexMatrix& a) {
  if (a.size() == 0) return 0.0;
  return a.cwiseAbs().maxCoeff();
}

}  // namespace pairwave
