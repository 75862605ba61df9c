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

#include "pairwave/hamiltonian.hpp"
#include "pairwave/model.hpp"
#include "pairwave/types.hpp"

namespace pairwave {

// Jump operators with rates (1/ns).  "collapse" holds the lowering channels
// (resonator photon loss and qutrit decay), "dephasing" the Hermitian
// projector channels; both enter the master equation through the same
// dissipator D[L](rho) = L rho L^+ - (1/2){L^+ L, rho}.
struct LindbladSet {
  std::vector<std::pair<ComplexMatrix, double>> collapse;
  std::vector<std::pair<ComplexMatrix, double>> dephasing;

  bool empty() const { return collapse.empty() && dephasing.empty(); }
  // collapse followed by dephasing, zero-rate entries already omitted.
  std::vector<std::pair<ComplexMatrix, double>> all_ops() const;
};

// Jump operators for the spec's dissipation rates embedded in its Hilbert
// space: a_j and b_j at the photon-loss rates, the three qutrit lowering
// channels, and the |e> and |f> population projectors for pure dephasing.
// Channels with zero rate are omitted.  Built from spec.dissipation no matter
// how spec.include_dissipation is set; callers choose whether to use it.
LindbladSet build_lindblad(const SystemSpec& spec);

struct PropagationOptions {
  int sample_count = 200;       // target number of recorded samples
  int rehermitize_every = 1000; // steps between re-symmetrizations; 0 = never
  std::vector<ComplexMatrix> observables;  // expectation values per sample
};

struct PropagationResult {
  ComplexVector state;  // final state (pure-state propagation only)
  ComplexMatrix rho;    // final density matrix (master-equation path only)
  std::vector<double> times;  // sample times, starts at 0, ends at t_final
  std::vector<std::vector<Complex>> expectations;  // [observable][sample]
  double max_trace_dev = 0.0;   // max |tr rho - tr rho_0| (or norm^2 drift)
  double min_eigenvalue = 0.0;  // smallest eigenvalue of final rho (master)
  double herm_drift = 0.0;      // max |rho - rho^+| seen at re-symmetrization
  long steps = 0;
  int rehermitizations = 0;
  double dt = 0.0;
  double wall_seconds = 0.0;
};

// Step size rule: resolve the fastest harmonic with 40 steps per period,
// or use t_final/1000 for a static Hamiltonian; then shrink so an integer
// number of steps lands exactly on t_final.
double default_dt(const HarmonicHamiltonian& h, double t_final);

// Fixed-step RK4 Schroedinger propagation of a pure state.
PropagationResult propagate_state(const HarmonicHamiltonian& h,
                                  const ComplexVector& psi0, double t_final,
                                  double dt,
                                  const PropagationOptions& opts = {});
PropagationResult propagate_state(const HarmonicHamiltonian& h,
                                  const ComplexVector& psi0, double t_final,
                                  const PropagationOptions& opts = {});

// Fixed-step RK4 Lindblad master-equation propagation.  rho0 must be
// Hermitian; every stage derivative is Hermitian by construction, the trace
// is monitored each step, and a deviation beyond 1e-6 from the initial trace
// raises NumericalFailure.
PropagationResult evolve_master(const HarmonicHamiltonian& h,
                                const LindbladSet& lindblad,
                                const ComplexMatrix& rho0, double t_final,
                                double dt, const PropagationOptions& opts = {});
PropagationResult evolve_master(const HarmonicHamiltonian& h,
                                const LindbladSet& lindblad,
                                const ComplexMatrix& rho0, double t_final,
                                const PropagationOptions& opts = {});

// Dense reference Lindblad derivative: -i[H, rho] + sum_l D[L_l](rho).
// Used by tests as an independent check of the propagation engine.
ComplexMatrix lindblad_rhs(const ComplexMatrix& rho, const ComplexMatrix& h,
                           const LindbladSet& lindblad);

// Dense superoperator acting on row-major vec(rho); dimension d^2 x d^2,
// guarded to d <= 64.  drho/dt = unvec(M vec(rho)).
ComplexMatrix lindblad_superoperator(const ComplexMatrix& h,
                                     const LindbladSet& lindblad);

}  // namespace pairwave
