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

#include "pairwave/hamiltonian.hpp"

#include <cmath>
#include <stdexcept>

namespace pairwave {

namespace {

// Embedded single-mode and qutrit operators on the spec's full layout.
struct Ops {
  HilbertLayout layout;
  std::vector<ComplexMatrix> a;   // annihilators of a_j
  std::vector<ComplexMatrix> b;   // annihilators of b_j
  ComplexMatrix s_fg, s_fe, s_eg; // |f><g|, |f><e|, |e><g| embedded
  ComplexMatrix sx;               // |e><g| + |g><e| embedded

  explicit Ops(const SystemSpec& spec) : layout(spec.layout()) {
    const ComplexMatrix lower = annihilate(spec.n_max + 1);
    a.reserve(spec.n_pairs);
    b.reserve(spec.n_pairs);
    for (int j = 0; j < spec.n_pairs; ++j) {
      a.push_back(embed(lower, layout.a_index(j), layout));
      b.push_back(embed(lower, layout.b_index(j), layout));
    }
    s_fg = embed(qutrit_transfer(Level::f, Level::g), 0, layout);
    s_fe = embed(qutrit_transfer(Level::f, Level::e), 0, layout);
    s_eg = embed(qutrit_transfer(Level::e, Level::g), 0, layout);
    sx = s_eg + s_eg.adjoint();
  }
};

// -(lambda_j/2) a_j b_j^+ Sz~ on the full layout; shared by
// build_pair_exchange and build_parallel so the g = mu reduction is exact.
ComplexMatrix pair_exchange_op(const Ops& ops, const SystemSpec& spec, int j) {
  const double lambda_j = spec.g[j] * spec.mu[j] / spec.delta[j];
  // Sz~ = |+><+| - |-><-| equals |g><e| + |e><g| in the bare basis.
  const ComplexMatrix sz_tilde =
      embed(qutrit_transfer(Level::g, Level::e) +
                qutrit_transfer(Level::e, Level::g),
            0, ops.layout);
  return (-0.5 * lambda_j) * (ops.a[j] * ops.b[j].adjoint() * sz_tilde);
}

}  // namespace

HarmonicHamiltonian::HarmonicHamiltonian(HilbertLayout layout)
    : layout_(std::move(layout)),
      static_term_(
          ComplexMatrix::Zero(layout_.total_dim(), layout_.total_dim())) {}

void HarmonicHamiltonian::add_static(const ComplexMatrix& h) {
  if (h.rows() != layout_.total_dim() || h.cols() != layout_.total_dim())
    throw std::invalid_argument("HarmonicHamiltonian: static term dimension mismatch");
  if (!is_hermitian(h, 1e-12))
    throw std::invalid_argument("HarmonicHamiltonian: static term not Hermitian");
  static_term_ += h;
}

void HarmonicHamiltonian::add_term(const ComplexMatrix& op, double nu) {
  if (op.rows() != layout_.total_dim() || op.cols() != layout_.total_dim())
    throw std::invalid_argument("HarmonicHamiltonian: term dimension mismatch");
  if (!std::isfinite(nu))
    throw std::invalid_argument("HarmonicHamiltonian: non-finite frequency");
  if (nu == 0.0) {
    static_term_ += op + op.adjoint();
    return;
  }
  terms_.push_back({op, nu});
}

ComplexMatrix HarmonicHamiltonian::evaluate(double t) const {
  ComplexMatrix h = static_term_;
  for (const auto& term : terms_) {
    const Complex phase = std::exp(kImag * (term.nu * t));
    h += phase * term.op + std::conj(phase) * term.op.adjoint();
  }
  return h;
}

double HarmonicHamiltonian::max_frequency() const {
  double m = 0.0;
  for (const auto& term : terms_) m = std::max(m, std::abs(term.nu));
  return m;
}

HarmonicHamiltonian build_full(const SystemSpec& spec) {
  spec.check();
  Ops ops(spec);
  HarmonicHamiltonian h(ops.layout);

  for (int j = 0; j < spec.n_pairs; ++j) {
    if (spec.g[j] != 0.0)
      h.add_term(spec.g[j] * (ops.a[j] * ops.s_fg), spec.delta[j]);
    if (spec.mu[j] != 0.0)
      h.add_term(spec.mu[j] * (ops.b[j] * ops.s_fe), spec.delta[j]);
  }
  if (spec.Omega != 0.0) h.add_static(spec.Omega * ops.sx);

  if (spec.include_crosstalk) {
    const DerivedQuantities der = derive(spec);
    const double g_cs = spec.gcs_ratio * der.g_m;
    if (g_cs != 0.0) {
      const int n = spec.n_pairs;
      // Photon exchange between every resonator pair, each oscillating at the
      // frequency difference of the two modes.
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          h.add_term(g_cs * (ops.a[j] * ops.b[k].adjoint()), der.delta_ab(j, k));
      for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
          h.add_term(g_cs * (ops.a[j] * ops.a[k].adjoint()), der.delta_aa(j, k));
          h.add_term(g_cs * (ops.b[j] * ops.b[k].adjoint()), der.delta_bb(j, k));
        }
    }
  }

  if (spec.include_leakage && spec.Omega_fe != 0.0) {
    // Pulse-induced e<->f transition, detuned by omega_fe - omega_eg.
    h.add_term(spec.Omega_fe * ops.s_fe, spec.omega_fe() - spec.omega_eg);
  }
  return h;
}

HarmonicHamiltonian build_effective(const SystemSpec& spec) {
  spec.check();
  Ops ops(spec);
  HarmonicHamiltonian h(ops.layout);
  const ComplexMatrix pg = embed(qutrit_project(Level::g), 0, ops.layout);
  const ComplexMatrix pe = embed(qutrit_project(Level::e), 0, ops.layout);

  ComplexMatrix acc =
      ComplexMatrix::Zero(ops.layout.total_dim(), ops.layout.total_dim());
  for (int j = 0; j < spec.n_pairs; ++j) {
    const double chi_a = spec.g[j] * spec.g[j] / spec.delta[j];
    const double chi_b = spec.mu[j] * spec.mu[j] / spec.delta[j];
    const double lambda_j = spec.g[j] * spec.mu[j] / spec.delta[j];
    // a a^+ = n + 1: the +1 is the vacuum Stark shift.
    acc -= chi_a * (ops.a[j] * ops.a[j].adjoint() * pg);
    acc -= chi_b * (ops.b[j] * ops.b[j].adjoint() * pe);
    const ComplexMatrix raman =
        (-lambda_j) * (ops.a[j] * ops.b[j].adjoint() * ops.s_eg);
    acc += raman + raman.adjoint();
  }
  acc += spec.Omega * ops.sx;
  h.add_static(acc);
  return h;
}

HarmonicHamiltonian build_pair_exchange(const SystemSpec& spec) {
  spec.check();
  Ops ops(spec);
  HarmonicHamiltonian h(ops.layout);
  for (int j = 0; j < spec.n_pairs; ++j) {
    // Factored so matched couplings (g = mu) give an exact zero residual
    // frequency even when the compiler contracts the products into FMAs;
    // only then does the term fold into the static part below.
    const double delta_j =
        (spec.g[j] - spec.mu[j]) * (spec.g[j] + spec.mu[j]) / spec.delta[j];
    h.add_term(pair_exchange_op(ops, spec, j), delta_j);
  }
  return h;
}

ComplexMatrix build_parallel(const SystemSpec& spec, bool with_qutrit) {
  spec.check();
  if (with_qutrit) {
    Ops ops(spec);
    ComplexMatrix h =
        ComplexMatrix::Zero(ops.layout.total_dim(), ops.layout.total_dim());
    for (int j = 0; j < spec.n_pairs; ++j) {
      const ComplexMatrix op = pair_exchange_op(ops, spec, j);
      h += op + op.adjoint();
    }
    return h;
  }
  const HilbertLayout layout =
      HilbertLayout::resonators_only(spec.n_pairs, spec.n_max);
  const ComplexMatrix lower = annihilate(spec.n_max + 1);
  ComplexMatrix h = ComplexMatrix::Zero(layout.total_dim(), layout.total_dim());
  for (int j = 0; j < spec.n_pairs; ++j) {
    const double lambda_j = spec.g[j] * spec.mu[j] / spec.delta[j];
    const ComplexMatrix aj = embed(lower, layout.a_index(j), layout);
    const ComplexMatrix bj = embed(lower, layout.b_index(j), layout);
    const ComplexMatrix op = (-0.5 * lambda_j) * (aj * bj.adjoint());
    h += op + op.adjoint();
  }
  return h;
}

std::pair<ComplexMatrix, ComplexMatrix> frame_generators(const SystemSpec& spec) {
  spec.check();
  Ops ops(spec);
  const ComplexMatrix h0 = spec.Omega * ops.sx;
  ComplexMatrix h0p =
      ComplexMatrix::Zero(ops.layout.total_dim(), ops.layout.total_dim());
  for (int j = 0; j < spec.n_pairs; ++j) {
    const double chi_a = spec.g[j] * spec.g[j] / spec.delta[j];
    const double chi_b = spec.mu[j] * spec.mu[j] / spec.delta[j];
    h0p -= 0.5 * chi_a * (ops.a[j] * ops.a[j].adjoint());
    h0p -= 0.5 * chi_b * (ops.b[j] * ops.b[j].adjoint());
  }
  return {h0, h0p};
}

ComplexMatrix rotated_basis_unitary() {
  const double r = 1.0 / std::sqrt(2.0);
  ComplexMatrix u = ComplexMatrix::Zero(3, 3);
  u(0, 0) = r;
  u(1, 0) = r;
  u(0, 1) = r;
  u(1, 1) = -r;
  u(2, 2) = 1.0;
  return u;
}

}  // namespace pairwave
