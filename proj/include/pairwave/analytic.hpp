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

#include "pairwave/model.hpp"
#include "pairwave/quantum_core.hpp"

namespace pairwave {

// Per-pair amplitudes of |1>_a |0>_b (c) and |0>_a |1>_b (s).
struct PairAmplitudes {
  std::vector<Complex> c, s;
  int n_pairs() const { return static_cast<int>(c.size()); }
};

// |+> qutrit, one photon in every a_j, vacuum in every b_j, on the full
// layout of the spec.
ComplexVector initial_state(const SystemSpec& spec);

// Closed-form beam-splitter evolution from one photon per a mode:
// c_j = cos(lambda_j t / 2), s_j = i sin(lambda_j t / 2).
PairAmplitudes pair_evolution(const std::vector<double>& lambda, double t);

// Product state Prod_j (c_j |10> + s_j |01>) on the resonator-only layout.
ComplexVector product_state(const PairAmplitudes& amps, int n_max);

struct RestoredState {
  ComplexVector state;          // resonator-only layout, global phase stripped
  double global_phase = 0.0;    // stripped phase: sum of c-branch phases (rad)
  std::vector<double> phase_c;  // (g_j^2/Delta_j + mu_j^2/2Delta_j) t
  std::vector<double> phase_s;  // (g_j^2/2Delta_j + mu_j^2/Delta_j) t
};

// Undo the two frame transformations to express the evolved state in the
// original interaction picture.  Each branch acquires a Stark phase; the
// common c-branch product is recorded as global_phase and stripped, leaving
// s_j multiplied by exp(i (mu_j^2 - g_j^2) t / 2 Delta_j).  For g = mu with
// matched rates the global phase reduces to 3 N lambda t / 2 and the relative
// amplitudes are unchanged.  (A further overall phase from the pulse frame,
// e^{-i Omega t} on the qutrit, is dropped.)
RestoredState restore_interaction_picture(const PairAmplitudes& amps,
                                          const SystemSpec& spec, double t);

// Prod_j (|1>_aj |0>_bj + i |0>_aj |1>_bj)/sqrt(2) on the resonator-only
// layout.
ComplexVector epr_target(int n_pairs, int n_max);

// sqrt(<target| rho |target>) for a density matrix on the resonator-only
// space (qutrit already traced out).
double fidelity(const ComplexMatrix& rho_reduced, const ComplexVector& target);

// Fidelity of pair j alone: trace rho down to modes (a_j, b_j) and compare
// against the single-pair EPR state.
double pair_fidelity(const ComplexMatrix& rho_reduced,
                     const HilbertLayout& resonator_layout, int j);

}  // namespace pairwave
