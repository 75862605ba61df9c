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

#include "pairwave/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pairwave {

ComplexVector initial_state(const SystemSpec& spec) {
  spec.check();
  const HilbertLayout layout = spec.layout();
  ComplexVector psi = ComplexVector::Zero(layout.total_dim());
  // Multi-index (qutrit; a occupations all 1; b occupations all 0).
  std::vector<int> multi(layout.subsystem_count(), 0);
  for (int j = 0; j < spec.n_pairs; ++j) multi[layout.a_index(j)] = 1;
  const double r = 1.0 / std::sqrt(2.0);
  multi[0] = static_cast<int>(Level::g);
  psi(layout.flatten(multi)) = r;
  multi[0] = static_cast<int>(Level::e);
  psi(layout.flatten(multi)) = r;
  return psi;
}

PairAmplitudes pair_evolution(const std::vector<double>& lambda, double t) {
  PairAmplitudes amps;
  amps.c.reserve(lambda.size());
  amps.s.reserve(lambda.size());
  for (double l : lambda) {
    if (!(l > 0.0))
      throw std::invalid_argument("pair_evolution: lambda must be positive");
    amps.c.push_back(std::cos(0.5 * l * t));
    amps.s.push_back(kImag * std::sin(0.5 * l * t));
  }
  return amps;
}

ComplexVector product_state(const PairAmplitudes& amps, int n_max) {
  const int n = amps.n_pairs();
  if (n < 1) throw std::invalid_argument("product_state: no pairs");
  const HilbertLayout layout = HilbertLayout::resonators_only(n, n_max);
  ComplexVector psi = ComplexVector::Zero(layout.total_dim());
  // 2^N branches: bit j set selects the s_j branch |0>_aj |1>_bj.
  for (int mask = 0; mask < (1 << n); ++mask) {
    Complex amp{1.0, 0.0};
    std::vector<int> multi(layout.subsystem_count(), 0);
    for (int j = 0; j < n; ++j) {
      if (mask & (1 << j)) {
        amp *= amps.s[j];
        multi[layout.b_index(j)] = 1;
      } else {
        amp *= amps.c[j];
        multi[layout.a_index(j)] = 1;
      }
    }
    psi(layout.flatten(multi)) = amp;
  }
  return psi;
}

RestoredState restore_interaction_picture(const PairAmplitudes& amps,
                                          const SystemSpec& spec, double t) {
  spec.check();
  if (amps.n_pairs() != spec.n_pairs)
    throw std::invalid_argument("restore_interaction_picture: pair count mismatch");

  RestoredState out;
  out.phase_c.resize(spec.n_pairs);
  out.phase_s.resize(spec.n_pairs);
  PairAmplitudes shifted = amps;
  out.global_phase = 0.0;
  for (int j = 0; j < spec.n_pairs; ++j) {
    const double chi_g = spec.g[j] * spec.g[j] / spec.delta[j];
    const double chi_mu = spec.mu[j] * spec.mu[j] / spec.delta[j];
    // Stark phases accumulated in the doubly rotated frame: the branch with
    // the photon in a_j sees (chi_g + chi_mu/2) t, the other branch
    // (chi_g/2 + chi_mu) t.
    out.phase_c[j] = (chi_g + 0.5 * chi_mu) * t;
    out.phase_s[j] = (0.5 * chi_g + chi_mu) * t;
    out.global_phase += out.phase_c[j];
    shifted.s[j] *= std::exp(kImag * (out.phase_s[j] - out.phase_c[j]));
  }
  out.state = product_state(shifted, spec.n_max);
  return out;
}

ComplexVector epr_target(int n_pairs, int n_max) {
  if (n_pairs < 1) throw std::invalid_argument("epr_target: n_pairs < 1");
  PairAmplitudes amps;
  const double r = 1.0 / std::sqrt(2.0);
  amps.c.assign(n_pairs, Complex{r, 0.0});
  amps.s.assign(n_pairs, Complex{0.0, r});
  return product_state(amps, n_max);
}

double fidelity(const ComplexMatrix& rho_reduced, const ComplexVector& target) {
  if (rho_reduced.rows() != target.size() || rho_reduced.cols() != target.size())
    throw std::invalid_argument("fidelity: dimension mismatch");
  const Complex overlap = target.adjoint() * (rho_reduced * target);
  return std::sqrt(std::clamp(overlap.real(), 0.0, 1.0));
}

double pair_fidelity(const ComplexMatrix& rho_reduced,
                     const HilbertLayout& resonator_layout, int j) {
  const int n = resonator_layout.n_pairs();
  if (resonator_layout.has_qutrit() || n < 1)
    throw std::invalid_argument("pair_fidelity: expected a resonator-only layout");
  const ComplexMatrix rho_pair = partial_trace(
      rho_reduced, resonator_layout,
      {resonator_layout.a_index(j), resonator_layout.b_index(j)});
  return fidelity(rho_pair, epr_target(1, resonator_layout.n_max()));
}

}  // namespace pairwave
