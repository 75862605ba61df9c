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

#include <string>
#include <vector>

#include "pairwave/hilbert_layout.hpp"
#include "pairwave/types.hpp"

namespace pairwave {

// Dissipation rates in 1/ns.
struct DissipationSpec {
  std::vector<double> kappa_a;  // photon decay of a_j, per pair
  std::vector<double> kappa_b;  // photon decay of b_j
  double gamma_eg = 0.0;        // |e> -> |g> relaxation
  double gamma_fe = 0.0;        // |f> -> |e>
  double gamma_fg = 0.0;        // |f> -> |g>
  double gamma_phi_e = 0.0;     // pure dephasing of |e>
  double gamma_phi_f = 0.0;     // pure dephasing of |f>

  // Conservative shipped defaults: lifetimes (2.5, 1.5, 5, 2.5, 3.5) us for
  // (phi_e, phi_f, eg, fe, fg) and a common photon lifetime of 10 us.
  static DissipationSpec baseline(int n_pairs);
  static DissipationSpec none(int n_pairs);

  void check(int n_pairs) const;  // sizes and nonnegativity
};

// Full physical parameter set of the qutrit + 2N resonator model.
// Angular frequencies in rad/ns throughout.
struct SystemSpec {
  int n_pairs = 0;
  double omega_eg = 0.0;        // qutrit g<->e transition
  double omega_fg = 0.0;        // qutrit g<->f transition
  std::vector<double> delta;    // common detunings Delta_j > 0
  std::vector<double> g;        // a_j <-> (g,f) coupling strengths
  std::vector<double> mu;       // b_j <-> (e,f) coupling strengths
  double Omega = 0.0;           // resonant g<->e pulse Rabi frequency
  double Omega_fe = 0.0;        // pulse leakage Rabi frequency on e<->f
  double gcs_ratio = 0.0;       // crosstalk strength as a fraction of g_m
  DissipationSpec dissipation;
  int n_max = 2;                // Fock truncation per mode
  bool include_crosstalk = false;
  bool include_leakage = false;
  bool include_dissipation = false;
  double t_final_override = 0.0;  // 0 = evolve for the operation time t_op

  double omega_fe() const { return omega_fg - omega_eg; }
  HilbertLayout layout() const {
    return HilbertLayout::qutrit_resonators(n_pairs, n_max);
  }

  // Structural invariants: positive distinct-size arrays, Delta_j > 0,
  // nonnegative rates and frequencies, n_max >= 1.  Throws invalid_argument
  // naming the offending field.  (Pairwise distinctness of the Delta_j is a
  // physics requirement and is reported by validate(), not enforced here.)
  void check() const;
};

// The shipped default parameter set: omega_eg/2pi = 7.5 GHz, omega_fg/2pi =
// 12.5 GHz, Delta/2pi = {0.75, 1.5} GHz, couplings from c1 with mu = 0.95 g,
// pulse leakage tied to Omega, crosstalk and leakage terms enabled.
SystemSpec baseline_spec(double c1 = 11.0, double omega_mhz = 100.0,
                         double gcs_ratio = 0.4, double mu_ratio = 0.95,
                         int n_max = 2, bool with_dissipation = true);

struct MatchingResult {
  std::vector<double> g;  // g_1 = Delta_1/c_1, g_j = g_1 sqrt(Delta_j/Delta_1)
  std::vector<double> c;  // resulting c_j = Delta_j/g_j
};

// Solve the equal-rate condition g_j^2/Delta_j = g_k^2/Delta_k for the
// coupling set fixed by the first pair's normalized detuning c1.
MatchingResult resolve_matching(const std::vector<double>& delta, double c1);

struct DerivedQuantities {
  std::vector<double> lambda;       // g_j mu_j / Delta_j
  std::vector<double> delta_stark;  // (g_j^2 - mu_j^2) / Delta_j
  double t_op = 0.0;                // pi/(2 lambda), lambda = g_1^2/Delta_1
  std::vector<double> omega_a;      // omega_fg - Delta_j
  std::vector<double> omega_b;      // omega_fe - Delta_j
  std::vector<double> c;            // Delta_j / g_j
  double g_m = 0.0;                 // max over {g_j, mu_j}
  std::vector<double> q_a, q_b;     // quality factors omega / kappa
  // Inter-resonator detunings: delta_ab(j,k) = omega_b[k] - omega_a[j],
  // delta_aa(j,k) = omega_a[k] - omega_a[j], delta_bb likewise.
  Eigen::MatrixXd delta_ab, delta_aa, delta_bb;
};

DerivedQuantities derive(const SystemSpec& spec);

enum class Severity { pass = 0, warn = 1, fail = 2 };
const char* to_string(Severity s);

struct ValidityFinding {
  std::string label;
  double ratio = 0.0;
  Severity severity = Severity::pass;
};

struct ValidityReport {
  std::vector<ValidityFinding> findings;
  double fail_below = 5.0;
  double warn_below = 10.0;
  Severity worst() const;
  bool ok() const { return worst() != Severity::fail; }
};

// Three ratio families, each tagged pass/warn/fail against the thresholds:
// (a) dispersive ratios Delta_j/g_j and Delta_j/mu_j;
// (b) pair-separation ratios |Delta_j - Delta_k| / (1/Delta_j + 1/Delta_k)
//     divided by max(g_j g_k, g_j mu_k, mu_j mu_k), ordered pairs j != k;
// (c) strong-driving ratios Omega / max(g_j^2/4Delta_j, mu_j^2/4Delta_j,
//     lambda_j/4) and Delta_j/Omega.
ValidityReport validate(const SystemSpec& spec, double fail_below = 5.0,
                        double warn_below = 10.0);

}  // namespace pairwave
