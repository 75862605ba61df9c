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

#include "pairwave/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace pairwave {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw std::invalid_argument(what);
}

bool all_finite(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(),
                     [](double x) { return std::isfinite(x); });
}

bool all_nonnegative(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return x >= 0.0; });
}

}  // namespace

DissipationSpec DissipationSpec::baseline(int n_pairs) {
  DissipationSpec d;
  d.kappa_a.assign(n_pairs, lifetime_us_to_rate(10.0));
  d.kappa_b.assign(n_pairs, lifetime_us_to_rate(10.0));
  d.gamma_eg = lifetime_us_to_rate(5.0);
  d.gamma_fe = lifetime_us_to_rate(2.5);
  d.gamma_fg = lifetime_us_to_rate(3.5);
  d.gamma_phi_e = lifetime_us_to_rate(2.5);
  d.gamma_phi_f = lifetime_us_to_rate(1.5);
  return d;
}

DissipationSpec DissipationSpec::none(int n_pairs) {
  DissipationSpec d;
  d.kappa_a.assign(n_pairs, 0.0);
  d.kappa_b.assign(n_pairs, 0.0);
  return d;
}

void DissipationSpec::check(int n_pairs) const {
  require(static_cast<int>(kappa_a.size()) == n_pairs,
          "dissipation.kappa_a: size != n_pairs");
  require(static_cast<int>(kappa_b.size()) == n_pairs,
          "dissipation.kappa_b: size != n_pairs");
  require(all_finite(kappa_a) && all_nonnegative(kappa_a),
          "dissipation.kappa_a: negative or non-finite rate");
  require(all_finite(kappa_b) && all_nonnegative(kappa_b),
          "dissipation.kappa_b: negative or non-finite rate");
  for (double r : {gamma_eg, gamma_fe, gamma_fg, gamma_phi_e, gamma_phi_f})
    require(std::isfinite(r) && r >= 0.0,
            "dissipation.gamma: negative or non-finite rate");
}

void SystemSpec::check() const {
  require(n_pairs >= 1, "n_pairs: must be >= 1");
  require(n_max >= 1, "n_max: must be >= 1");
  require(std::isfinite(omega_eg) && omega_eg >= 0.0, "omega_eg: negative or non-finite");
  require(std::isfinite(omega_fg) && omega_fg >= 0.0, "omega_fg: negative or non-finite");
  require(static_cast<int>(delta.size()) == n_pairs, "delta: size != n_pairs");
  require(static_cast<int>(g.size()) == n_pairs, "g: size != n_pairs");
  require(static_cast<int>(mu.size()) == n_pairs, "mu: size != n_pairs");
  for (double d : delta)
    require(std::isfinite(d) && d > 0.0, "delta: must be positive");
  require(all_finite(g) && all_nonnegative(g), "g: negative or non-finite");
  require(all_finite(mu) && all_nonnegative(mu), "mu: negative or non-finite");
  require(std::isfinite(Omega) && Omega >= 0.0, "Omega: negative or non-finite");
  require(std::isfinite(Omega_fe) && Omega_fe >= 0.0,
          "Omega_fe: negative or non-finite");
  require(std::isfinite(gcs_ratio) && gcs_ratio >= 0.0,
          "gcs_ratio: negative or non-finite");
  require(std::isfinite(t_final_override) && t_final_override >= 0.0,
          "t_final_override: negative or non-finite");
  dissipation.check(n_pairs);
}

SystemSpec baseline_spec(double c1, double omega_mhz, double gcs_ratio,
                         double mu_ratio, int n_max, bool with_dissipation) {
  SystemSpec s;
  s.n_pairs = 2;
  s.omega_eg = ghz_to_angular(7.5);
  s.omega_fg = ghz_to_angular(12.5);
  s.delta = {ghz_to_angular(0.75), ghz_to_angular(1.5)};
  MatchingResult m = resolve_matching(s.delta, c1);
  s.g = m.g;
  s.mu.resize(s.n_pairs);
  for (int j = 0; j < s.n_pairs; ++j) s.mu[j] = mu_ratio * s.g[j];
  s.Omega = mhz_to_angular(omega_mhz);
  s.Omega_fe = s.Omega;
  s.gcs_ratio = gcs_ratio;
  s.n_max = n_max;
  s.include_crosstalk = true;
  s.include_leakage = true;
  s.include_dissipation = with_dissipation;
  s.dissipation = with_dissipation ? DissipationSpec::baseline(s.n_pairs)
                                   : DissipationSpec::none(s.n_pairs);
  s.check();
  return s;
}

MatchingResult resolve_matching(const std::vector<double>& delta, double c1) {
  require(!delta.empty(), "resolve_matching: empty detuning list");
  require(std::isfinite(c1) && c1 > 0.0, "resolve_matching: c1 must be positive");
  for (double d : delta)
    require(std::isfinite(d) && d > 0.0, "resolve_matching: detunings must be positive");

  MatchingResult out;
  const int n = static_cast<int>(delta.size());
  out.g.resize(n);
  out.c.resize(n);
  const double g1 = delta[0] / c1;
  for (int j = 0; j < n; ++j) {
    out.g[j] = g1 * std::sqrt(delta[j] / delta[0]);
    out.c[j] = delta[j] / out.g[j];
  }
  return out;
}

DerivedQuantities derive(const SystemSpec& spec) {
  spec.check();
  const int n = spec.n_pairs;
  DerivedQuantities d;
  d.lambda.resize(n);
  d.delta_stark.resize(n);
  d.omega_a.resize(n);
  d.omega_b.resize(n);
  d.c.resize(n);
  d.q_a.resize(n);
  d.q_b.resize(n);
  const double inf = std::numeric_limits<double>::infinity();
  for (int j = 0; j < n; ++j) {
    d.lambda[j] = spec.g[j] * spec.mu[j] / spec.delta[j];
    // Factored so matched couplings (g = mu) give an exact zero even when the
    // compiler contracts the products into FMAs.
    d.delta_stark[j] = (spec.g[j] - spec.mu[j]) * (spec.g[j] + spec.mu[j]) /
                       spec.delta[j];
    d.omega_a[j] = spec.omega_fg - spec.delta[j];
    d.omega_b[j] = spec.omega_fe() - spec.delta[j];
    d.c[j] = spec.g[j] > 0.0 ? spec.delta[j] / spec.g[j] : inf;
    d.q_a[j] = spec.dissipation.kappa_a[j] > 0.0
                   ? d.omega_a[j] / spec.dissipation.kappa_a[j]
                   : inf;
    d.q_b[j] = spec.dissipation.kappa_b[j] > 0.0
                   ? d.omega_b[j] / spec.dissipation.kappa_b[j]
                   : inf;
  }
  // Ideal homogeneous rate g_1^2/Delta_1 sets the operation time, matching the
  // convention used when mu is detuned a few percent from g.
  const double lambda_ideal = spec.g[0] * spec.g[0] / spec.delta[0];
  d.t_op = lambda_ideal > 0.0 ? kTwoPi / 4.0 / lambda_ideal : inf;
  d.g_m = 0.0;
  for (int j = 0; j < n; ++j)
    d.g_m = std::max({d.g_m, spec.g[j], spec.mu[j]});
  d.delta_ab.resize(n, n);
  d.delta_aa.resize(n, n);
  d.delta_bb.resize(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      d.delta_ab(j, k) = d.omega_b[k] - d.omega_a[j];
      d.delta_aa(j, k) = d.omega_a[k] - d.omega_a[j];
      d.delta_bb(j, k) = d.omega_b[k] - d.omega_b[j];
    }
  return d;
}

const char* to_string(Severity s) {
  switch (s) {
    case Severity::pass: return "pass";
    case Severity::warn: return "warn";
    case Severity::fail: return "fail";
  }
  return "?";
}

Severity ValidityReport::worst() const {
  Severity w = Severity::pass;
  for (const auto& f : findings)
    if (static_cast<int>(f.severity) > static_cast<int>(w)) w = f.severity;
  return w;
}

ValidityReport validate(const SystemSpec& spec, double fail_below,
                        double warn_below) {
  spec.check();
  ValidityReport report;
  report.fail_below = fail_below;
  report.warn_below = warn_below;

  auto grade = [&](double ratio) {
    if (ratio < fail_below) return Severity::fail;
    if (ratio < warn_below) return Severity::warn;
    return Severity::pass;
  };
  auto add = [&](std::string label, double ratio) {
    report.findings.push_back({std::move(label), ratio, grade(ratio)});
  };
  const double inf = std::numeric_limits<double>::infinity();
  const int n = spec.n_pairs;

  // (a) dispersive-regime ratios.
  for (int j = 0; j < n; ++j) {
    const std::string idx = std::to_string(j + 1);
    add("dispersive Delta" + idx + "/g" + idx,
        spec.g[j] > 0.0 ? spec.delta[j] / spec.g[j] : inf);
    add("dispersive Delta" + idx + "/mu" + idx,
        spec.mu[j] > 0.0 ? spec.delta[j] / spec.mu[j] : inf);
  }

  // (b) pair-separation ratios (interference between different pairs).
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      if (j == k) continue;
      const double sep = std::abs(spec.delta[j] - spec.delta[k]) /
                         (1.0 / spec.delta[j] + 1.0 / spec.delta[k]);
      const double coupling =
          std::max({spec.g[j] * spec.g[k], spec.g[j] * spec.mu[k],
                    spec.mu[j] * spec.mu[k]});
      add("pair_separation(" + std::to_string(j + 1) + "," +
              std::to_string(k + 1) + ")",
          coupling > 0.0 ? sep / coupling : inf);
    }

  // (c) strong-driving ratios.
  for (int j = 0; j < n; ++j) {
    const std::string idx = std::to_string(j + 1);
    const double lambda_j = spec.g[j] * spec.mu[j] / spec.delta[j];
    const double scale =
        std::max({spec.g[j] * spec.g[j] / (4.0 * spec.delta[j]),
                  spec.mu[j] * spec.mu[j] / (4.0 * spec.delta[j]),
                  lambda_j / 4.0});
    add("strong_driving(" + idx + ")", scale > 0.0 ? spec.Omega / scale : inf);
    add("drive_detuning(" + idx + ")",
        spec.Omega > 0.0 ? spec.delta[j] / spec.Omega : inf);
  }
  return report;
}

}  // namespace pairwave
