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

#include <utility>
#include <vector>

#include "pairwave/model.hpp"
#include "pairwave/quantum_core.hpp"

namespace pairwave {

// One harmonic: op e^{i nu t} + op^dagger e^{-i nu t}.
struct HarmonicTerm {
  ComplexMatrix op;
  double nu = 0.0;  // rad/ns
};

// Time-dependent Hamiltonian as a static Hermitian part plus a finite list of
// single-frequency harmonics.  Every Hamiltonian in this library is of this
// form, which the propagators exploit.
class HarmonicHamiltonian {
 public:
  explicit HarmonicHamiltonian(HilbertLayout layout);

  const HilbertLayout& layout() const { return layout_; }
  const ComplexMatrix& static_term() const { return static_term_; }
  const std::vector<HarmonicTerm>& terms() const { return terms_; }

  // h must be Hermitian (checked at 1e-12).
  void add_static(const ComplexMatrix& h);
  // nu == 0 is folded into the static part as op + op^dagger.
  void add_term(const ComplexMatrix& op, double nu);

  ComplexMatrix evaluate(double t) const;
  // Largest |nu| over the harmonic terms; 0 if the Hamiltonian is static.
  double max_frequency() const;

 private:
  HilbertLayout layout_;
  ComplexMatrix static_term_;
  std::vector<HarmonicTerm> terms_;
};

// The interaction-picture Hamiltonian of the driven qutrit + 2N resonators:
// per pair the harmonics (g_j a_j S+_fg, Delta_j) and (mu_j b_j S+_fe,
// Delta_j), plus the static resonant pulse Omega (S+_eg + S-_eg).  With
// include_crosstalk, every unordered resonator pair acquires a photon-exchange
// harmonic of strength g_cs = gcs_ratio * g_m at its frequency difference
// (for N = 2: the a1b1, a1b2, a2b1, a2b2, a1a2, b1b2 terms).  With
// include_leakage, the pulse also drives e<->f detuned by
// omega_fe - omega_eg.
HarmonicHamiltonian build_full(const SystemSpec& spec);

// Second-order dispersive reduction: photon-number-dependent Stark shifts
// -(g_j^2/Delta_j) a_j a_j^+ |g><g| and -(mu_j^2/Delta_j) b_j b_j^+ |e><e|,
// Raman exchange -lambda_j (a_j b_j^+ S+_eg + h.c.), and the pulse Omega S_x.
// Entirely static; |f> remains in the space but uncoupled.
HarmonicHamiltonian build_effective(const SystemSpec& spec);

// Doubly-rotated-frame pair exchange with the residual Stark mismatch
// delta_j = (g_j^2 - mu_j^2)/Delta_j as the harmonic frequency:
// -(lambda_j/2)(a_j b_j^+ e^{i delta_j t} + h.c.) Sz~.  For g = mu all
// delta_j vanish and the terms fold into the static part, reproducing
// build_parallel(spec, true) exactly.
HarmonicHamiltonian build_pair_exchange(const SystemSpec& spec);

// Static beam-splitter Hamiltonian -sum_j (lambda_j/2)(a_j b_j^+ + a_j^+ b_j),
// with the qutrit factor Sz~ = |+><+| - |-><-| included (full layout) or
// dropped (resonator-only layout).
ComplexMatrix build_parallel(const SystemSpec& spec, bool with_qutrit);

// Frame generators: H0 = Omega S_x and
// H0' = -(1/2) sum_j [(g_j^2/Delta_j) a_j a_j^+ + (mu_j^2/Delta_j) b_j b_j^+],
// both on the full layout.
std::pair<ComplexMatrix, ComplexMatrix> frame_generators(const SystemSpec& spec);

// Fixed 3x3 basis change |g>,|e> -> |+>,|-> = (|g> +/- |e>)/sqrt(2), |f>
// untouched.  Column k is the image of basis vector k.
ComplexMatrix rotated_basis_unitary();

}  // namespace pairwave
